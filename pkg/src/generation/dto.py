from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from src.generation.entity import ExponentialSpace


class LambdaDTO(BaseModel):
    """`{"re": .., "im": .., "mult": k}`: an exponent λ with multiplicity k(λ)."""
    re: float
    im: float = 0.0
    mult: int = Field(0, ge=0)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


class ExponentialSpaceDTO(BaseModel):
    lambdas: List[LambdaDTO] = Field(min_length=1)

    def to_entity(self) -> ExponentialSpace:
        return ExponentialSpace(tuple((item.value, item.mult) for item in self.lambdas))

    @classmethod
    def from_entity(cls, space: ExponentialSpace) -> "ExponentialSpaceDTO":
        return cls(lambdas=[LambdaDTO(re=lam.real, im=lam.imag, mult=mult) for lam, mult in space.spectrum])


class ZeroConditionRowDTO(BaseModel):
    """
    **Description**: One (level, order) row of a zero-condition table.

    **Fields**:
    - `level`, `order`: *int* - j and k.
    - `zero_value`: *float* - |D^k a^{[j]}(-e^{-λ2^{-j}})|.
    - `zero_holds`: *bool* - zero_value ≤ tol · Σ|c_m||z|^m of the same derivative.
    - `nondegenerate_value`: *float* - |D^k a^{[j]}(e^{-λ2^{-j}})|.
    - `nondegenerate`: *bool* - nondegenerate_value > tol · Σ|c_m||z|^m.
    """
    level: int
    order: int
    zero_value: float
    zero_holds: bool
    nondegenerate_value: float
    nondegenerate: bool


class ZeroConditionTableDTO(BaseModel):
    lam: Tuple[float, float]
    order: int
    tol: float
    rows: List[ZeroConditionRowDTO]

    @property
    def verdict(self) -> bool:
        return all(row.zero_holds for row in self.rows)

    def holds(self, level: int, order: int) -> bool:
        return next(row.zero_holds for row in self.rows if row.level == level and row.order == order)


class GenerationReportDTO(BaseModel):
    """
    **Description**: Outcome of checking that subdivision limits of sampled elements of U stay in U.

    **Fields**:
    - `residual`: *float* - max over basis starts of the relative least-squares misfit.
    - `residuals`: *List[float]* - misfit per basis function t^a e^{λt}, in basis order.
    - `window`: *Tuple[float, float]* - fit window.
    - `start_window`: *Tuple[int, int]* - integer window the starting data was sampled on.
    - `levels`: *int* - r.
    - `tol`: *float*
    - `verdict`: *bool* - residual ≤ tol.
    """
    residual: float
    residuals: List[float]
    window: Tuple[float, float]
    start_window: Tuple[int, int]
    levels: int
    tol: float
    verdict: bool


class AuditEntryDTO(BaseModel):
    """
    **Description**: Decay classification of one λ of the audit grid.

    **Fields**:
    - `kinds`: *List[str]* - verdict kind per order k = 0..d.
    - `support`: *List[int]* - union of finitely supported index sets over the orders.
    - `inconclusive`: *Optional[str]* - diagnostic when no verdict could be certified.
    """
    lam: Tuple[float, float]
    kinds: List[str]
    support: List[int]
    inconclusive: Optional[str] = None


class AuditReportDTO(BaseModel):
    """
    **Description**: Result of auditing the analytic limits of a schedule over a λ grid.

    **Fields**:
    - `stationary`: *bool* - whether the schedule repeats its last mask.
    - `degree`: *int* - N, the largest mask span over the audited levels.
    - `sup_norm`: *float* - largest ‖a_j‖_∞ (unit view) over the audited levels.
    - `entries`: *List[AuditEntryDTO]*
    - `nonzero_count`: *int* - total number of non-zero entries over all λ.
    - `verdict`: *bool* - stationary: every support is at most a single point and only at λ = 0;
      non-stationary: nonzero_count ≤ N. Inconclusive entries make the verdict false.
    """
    stationary: bool
    degree: int
    sup_norm: float
    entries: List[AuditEntryDTO]
    nonzero_count: int
    inconclusive: List[Tuple[float, float]]
    verdict: bool


class ConstructRequestDTO(BaseModel):
    space: ExponentialSpaceDTO
    head_length: int = Field(1, ge=1)
    level_offset: int = 0
