from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.fourier.entity import DecaySequence, DecayVerdict, PeriodicFunction


class ComplexDTO(BaseModel):
    re: float
    im: float = 0.0

    @classmethod
    def of(cls, value: complex) -> "ComplexDTO":
        return cls(re=float(np.real(value)), im=float(np.imag(value)))


class IndexedValueDTO(BaseModel):
    l: int
    re: float
    im: float


def indexed_values(values: np.ndarray) -> List[IndexedValueDTO]:
    half_range = values.size // 2
    return [
        IndexedValueDTO(l=i - half_range, re=float(value.real), im=float(value.imag))
        for i, value in enumerate(values)
    ]


class DecayVerdictDTO(BaseModel):
    kind: Literal["finitely_supported", "exponential_decay", "no_decay"]
    support: Optional[List[int]] = None
    constant: Optional[float] = None
    ratio: Optional[float] = None
    residual: Optional[float] = None
    threshold: float

    @classmethod
    def from_entity(cls, verdict: DecayVerdict) -> "DecayVerdictDTO":
        return cls(
            kind=verdict.kind.value,
            support=list(verdict.support) if verdict.kind.value == "finitely_supported" else None,
            constant=verdict.constant,
            ratio=verdict.ratio,
            residual=verdict.residual,
            threshold=verdict.threshold,
        )


class DecayReportDTO(BaseModel):
    """
    **Description**: Decay sequence of one order with its classification.

    **Usage**: `{"lambda": {"re": 0, "im": 0}, "order": 0, "entries": [{"l": 0, "re": 1, "im": 0}, ...],
    "verdict": {...}, "truncation_error": 1e-14}`.
    """
    model_config = ConfigDict(populate_by_name=True)

    lam: ComplexDTO = Field(alias="lambda")
    order: int
    entries: List[IndexedValueDTO]
    verdict: DecayVerdictDTO
    truncation_error: float

    @classmethod
    def from_entity(cls, sequence: DecaySequence, verdict: DecayVerdict) -> "DecayReportDTO":
        return cls(
            lam=ComplexDTO.of(sequence.lam),
            order=sequence.order,
            entries=indexed_values(sequence.entries),
            verdict=DecayVerdictDTO.from_entity(verdict),
            truncation_error=sequence.truncation_error,
        )


class OmegaReportDTO(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: ComplexDTO = Field(alias="lambda")
    order: int
    coefficients: List[IndexedValueDTO]

    @classmethod
    def from_entity(cls, omega: PeriodicFunction) -> "OmegaReportDTO":
        return cls(lam=ComplexDTO.of(omega.lam), order=omega.order, coefficients=indexed_values(omega.coeffs))


class PhiHatDTO(BaseModel):
    y: ComplexDTO
    values: List[ComplexDTO]
    error_bound: float
    depth: int


class HBasisReportDTO(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: ComplexDTO = Field(alias="lambda")
    order: int
    window: Tuple[float, float]
    levels: int
    consistency: float
    tol: float


class StrangFixRowDTO(BaseModel):
    """
    **Fields**:
    - `order`: *int* - k.
    - `at_zero`: *ComplexDTO* - φ̂^{(k)}(-iλ/2π).
    - `max_off_zero`: *float* - max_{ℓ≠0} |φ̂^{(k)}(-iλ/2π + ℓ)|.
    - `threshold`: *float* - zero threshold applied to the off-zero entries.
    - `vanishes`: *bool* - max_off_zero ≤ threshold.
    """
    order: int
    at_zero: ComplexDTO
    max_off_zero: float
    threshold: float
    vanishes: bool


class StrangFixReportDTO(BaseModel):
    """
    **Description**: Generalized Strang-Fix conditions at λ: derivatives up to order d vanish at every
    -iλ/2π + ℓ with ℓ ≠ 0 and φ̂(-iλ/2π) ≠ 0.
    """
    model_config = ConfigDict(populate_by_name=True)

    lam: ComplexDTO = Field(alias="lambda")
    rows: List[StrangFixRowDTO]
    nonvanishing_at_zero: bool
    verdict: bool
