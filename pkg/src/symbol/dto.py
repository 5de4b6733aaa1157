from typing import List, Literal, Tuple

from pydantic import BaseModel, Field, field_validator

from src.symbol.entity import LaurentPolynomial, NormalizationConvention, convention_factor


class LaurentPolynomialDTO(BaseModel):
    """
    **Description**: JSON fragment of a mask symbol.

    **Fields**:
    - `lo`: *int* - exponent of the first coefficient.
    - `coeffs`: *List[Tuple[float, float]]* - `[re, im]` pairs.
    - `normalization`: *"sum2" | "unit"* - convention the coefficients are written in.

    **Usage**: `{"lo": -1, "coeffs": [[0.5, 0], [1, 0], [0.5, 0]], "normalization": "sum2"}`.
    """
    lo: int = 0
    coeffs: List[Tuple[float, float]] = Field(min_length=1)
    normalization: Literal["sum2", "unit"] = "sum2"

    @field_validator("coeffs", mode="before")
    @classmethod
    def accept_real_numbers(cls, value):
        # bare numbers are shorthand for [re, 0]
        if isinstance(value, list):
            return [[item, 0.0] if isinstance(item, (int, float)) else item for item in value]
        return value

    def to_entity(self, target: NormalizationConvention = NormalizationConvention.SUBDIVISION_SUM2) -> LaurentPolynomial:
        factor = convention_factor(NormalizationConvention(self.normalization), target)
        return LaurentPolynomial.from_coeffs([factor * complex(re, im) for re, im in self.coeffs], self.lo)

    @classmethod
    def from_entity(
            cls,
            polynomial: LaurentPolynomial,
            normalization: NormalizationConvention = NormalizationConvention.SUBDIVISION_SUM2,
    ) -> "LaurentPolynomialDTO":
        return cls(
            lo=polynomial.lo,
            coeffs=[(float(c.real), float(c.imag)) for c in polynomial.coeffs],
            normalization=normalization.value,
        )


class LagrangeBoundDTO(BaseModel):
    """
    **Description**: Both sides of the interpolation estimate
    ‖a‖_∞ · (min gap)^N ≤ 2^{-N} (N+1) max_m |a(y_m)|.

    **Fields**:
    - `lhs`: *float* - grid estimate of the left side.
    - `rhs`: *float* - right side.
    - `slack`: *float* - relative sampling slack ε_grid from the Bernstein inequality.
    - `holds`: *bool* - `lhs <= rhs * (1 + slack)`.
    """
    lhs: float
    rhs: float
    slack: float
    holds: bool


class LagrangeRequestDTO(BaseModel):
    polynomial: LaurentPolynomialDTO
    points: List[float] = Field(min_length=1)
