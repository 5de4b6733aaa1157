from dataclasses import dataclass
from typing import List

import numpy as np


@dataclass(frozen=True, eq=False)
class BlockShiftOperator:
    """
    **Description**: A_d = diag(B_0, ..., B_d) acting on M_d = P_0 ⊕ ... ⊕ P_d.

    Block B_k maps the descending-degree coefficients (p_k, ..., p_0) of p ∈ P_k to those of p(· + 1).

    **Fields**:
    - `d`: *int* - largest block degree.
    - `matrix`: *np.ndarray* - square, of size Σ_{k≤d} (k + 1).
    """
    d: int
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def block_offsets(self) -> List[int]:
        """First row of each block B_k."""
        return [k * (k + 1) // 2 for k in range(self.d + 1)]

    def block(self, k: int) -> np.ndarray:
        start = self.block_offsets[k]
        return self.matrix[start:start + k + 1, start:start + k + 1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    **Description**: A subspace of M_d given by a basis matrix with independent columns.

    **Fields**:
    - `basis`: *np.ndarray* - shape (ambient_dim, dim).
    """
    basis: np.ndarray

    def __post_init__(self):
        basis = np.array(self.basis, dtype=complex)
        if basis.ndim == 1:
            basis = basis[:, None]
        if np.allclose(basis.imag, 0):
            basis = basis.real
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @classmethod
    def from_vectors(cls, vectors) -> "Subspace":
        return cls(np.array(vectors).T)

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]
