import logging
from typing import List

import numpy as np
import scipy.linalg
from scipy.special import comb

from src.config.shift import Settings, settings as default_settings
from src.shift.dto import FamilyCheckDTO, FourFamiliesReportDTO, InvariantReportDTO
from src.shift.entity import BlockShiftOperator, Subspace
from src.shift.exceptions import DegenerateBasisError, DimensionMismatchError, ZeroVectorError

logger = logging.getLogger(__name__)


def shift_block(k: int, step: int = 1) -> np.ndarray:
    """Coefficient map of p ↦ p(· + step) on P_k in descending-degree order."""
    block = np.zeros((k + 1, k + 1))
    for row in range(k + 1):
        for col in range(row + 1):
            # row holds t^{k-row}, col holds t^{k-col}
            block[row, col] = comb(k - col, row - col, exact=True) * step ** (row - col)
    return block


class ShiftService:
    """
    **Description**: The block shift operator A_d on M_d and its invariant subspaces.

    **Methods**:
    - `build_A`, `shift_inverse`: A_d and A_d^{-1}.
    - `rank`, `subspace`: rank with relative tolerance and validated subspaces.
    - `is_invariant`, `invariance_report`, `minimal_invariant_subspace`.
    - `resolvent_determinant`: det(e^{λ-μ} A_d - I).
    - `four_families_demo`: the four invariant families of A_1.
    """
    def __init__(self, config: Settings = default_settings):
        self.config = config

    @staticmethod
    def build_A(d: int) -> BlockShiftOperator:
        if d < 0:
            raise ValueError(f"Block degree must be non-negative, got {d}")
        return BlockShiftOperator(d, scipy.linalg.block_diag(*(shift_block(k) for k in range(d + 1))))

    @staticmethod
    def shift_inverse(d: int) -> BlockShiftOperator:
        """A_d^{-1}, the coefficient map of p ↦ p(· - 1)."""
        if d < 0:
            raise ValueError(f"Block degree must be non-negative, got {d}")
        return BlockShiftOperator(d, scipy.linalg.block_diag(*(shift_block(k, -1) for k in range(d + 1))))

    def rank(self, matrix: np.ndarray) -> int:
        if matrix.size == 0:
            return 0
        singular = scipy.linalg.svdvals(matrix)
        if singular[0] == 0:
            return 0
        return int(np.count_nonzero(singular > self.config.rank_tol * singular[0]))

    def subspace(self, basis: np.ndarray) -> Subspace:
        """
        **Exceptions**:
        - `DegenerateBasisError`: If the columns are dependent.
        """
        subspace = Subspace(basis)
        if self.rank(subspace.basis) != subspace.dim:
            raise DegenerateBasisError(f"Basis of {subspace.dim} columns has rank {self.rank(subspace.basis)}")
        return subspace

    def invariance_report(self, subspace: Subspace, operator: BlockShiftOperator) -> InvariantReportDTO:
        if subspace.ambient_dim != operator.size:
            raise DimensionMismatchError(
                f"Subspace lives in dimension {subspace.ambient_dim}, A_{operator.d} in {operator.size}"
            )
        before = self.rank(subspace.basis)
        after = self.rank(np.hstack([subspace.basis, operator.matrix @ subspace.basis]))
        return InvariantReportDTO(
            order=operator.d,
            dim=subspace.dim,
            rank_before=before,
            rank_after=after,
            invariant=after == before,
        )

    def is_invariant(self, subspace: Subspace, operator: BlockShiftOperator) -> bool:
        """True iff rank([N | A N]) = rank(N)."""
        return self.invariance_report(subspace, operator).invariant

    def minimal_invariant_subspace(self, operator: BlockShiftOperator, v) -> Subspace:
        """
        **Description**: span{v, Av, A²v, ...}, iterated until the rank stops growing, with an
        orthonormal basis.

        **Exceptions**:
        - `ZeroVectorError`: If v = 0.
        - `DimensionMismatchError`: If v has the wrong length.
        """
        v = np.asarray(v, dtype=complex).ravel()
        if v.size != operator.size:
            raise DimensionMismatchError(f"Vector of length {v.size} does not fit A_{operator.d} of size {operator.size}")
        if not np.any(v):
            raise ZeroVectorError("The minimal invariant subspace of the zero vector is trivial")

        krylov = v[:, None]
        current = v
        rank = 1
        while rank < operator.size:
            current = operator.matrix @ current
            extended = np.hstack([krylov, current[:, None]])
            extended_rank = self.rank(extended)
            if extended_rank == rank:
                break
            krylov, rank = extended, extended_rank

        basis = scipy.linalg.orth(krylov, rcond=self.config.rank_tol)
        logger.debug(f"Minimal invariant subspace of {v}: dimension {basis.shape[1]}")
        return Subspace(basis)

    def resolvent_determinant(self, d: int, lam: complex, mu: complex) -> complex:
        """det(e^{λ-μ} A_d - I), which vanishes exactly when e^{λ-μ} = 1."""
        operator = self.build_A(d)
        matrix = np.exp(complex(lam) - complex(mu)) * operator.matrix - np.eye(operator.size)
        return complex(scipy.linalg.det(matrix))

    def four_families_demo(self, seed: int = 0, samples: int = 16, controls: int = 100) -> FourFamiliesReportDTO:
        """
        **Description**: Instantiates the invariant subspaces of A_1 on (a, b, c), where A(a, b, c) = (a, b, b + c):
        N(1) = {(0, b, c)}, N(2) = {(a, 0, c)}, N(a0,c0) = span{(a0, 0, c0)} and N(u,v) = {ua + vb = 0},
        then counts how many random planes with a non-zero c-normal fail to be invariant.
        """
        rng = np.random.default_rng(seed)
        operator = self.build_A(1)

        def check(bases: List[np.ndarray]) -> bool:
            return all(self.is_invariant(self.subspace(basis), operator) for basis in bases)

        point_pairs = rng.normal(size=(samples, 2))
        normal_pairs = rng.normal(size=(samples, 2))
        families = [
            FamilyCheckDTO(
                label="N(1)",
                description="a = 0",
                instances=1,
                verified=check([np.array([[0, 0], [1, 0], [0, 1]], dtype=float)]),
            ),
            FamilyCheckDTO(
                label="N(2)",
                description="b = 0",
                instances=1,
                verified=check([np.array([[1, 0], [0, 0], [0, 1]], dtype=float)]),
            ),
            FamilyCheckDTO(
                label="N(a0,c0)",
                description="span{(a0, 0, c0)}",
                instances=samples,
                verified=check([np.array([[a0], [0.0], [c0]]) for a0, c0 in point_pairs]),
            ),
            FamilyCheckDTO(
                label="N(u,v)",
                description="u a + v b = 0",
                instances=samples,
                verified=check([scipy.linalg.null_space(np.array([[u, v, 0.0]])) for u, v in normal_pairs]),
            ),
        ]

        non_invariant = 0
        for _ in range(controls):
            normal = rng.normal(size=3)
            normal[2] = np.copysign(max(abs(normal[2]), 0.1), normal[2])
            plane = self.subspace(scipy.linalg.null_space(normal[None, :]))
            non_invariant += not self.is_invariant(plane, operator)

        logger.info(f"Four families verified: {[f.verified for f in families]}; {non_invariant}/{controls} controls non-invariant")
        return FourFamiliesReportDTO(families=families, controls=controls, non_invariant_controls=non_invariant)
