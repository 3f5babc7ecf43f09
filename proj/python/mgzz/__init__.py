# Copyright 2026 The mgzz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sparse Pauli-basis simulation of matchgate circuits with a few parity-preserving non-matchgates."""

from mgzz._core import (
    Circuit,
    PauliKey,
    ProductState,
    bounds,
    brickwall,
    conjugate,
    dense,
    expectation,
    fermi_hubbard,
    givens_ladder,
    random_circuit,
    rotation_table,
)

__all__ = [
    "Circuit",
    "PauliKey",
    "ProductState",
    "bounds",
    "brickwall",
    "conjugate",
    "dense",
    "expectation",
    "fermi_hubbard",
    "givens_ladder",
    "random_circuit",
    "rotation_table",
]
