from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, Field

from src.generation.dto import ExponentialSpaceDTO, LambdaDTO
from src.subdivision.entity import ExponentialTail, Mask, MaskSchedule, RepeatLast
from src.symbol.dto import LaurentPolynomialDTO


class RepeatLastDTO(BaseModel):
    kind: Literal["repeat_last"] = "repeat_last"


class ExponentialTailDTO(BaseModel):
    """
    **Description**: Tail rule building minimal-degree masks for an exponential space.

    **Fields**:
    - `lambdas`: *List[LambdaDTO]* - spectrum with multiplicities.
    - `offset`: *int* - level offset of the zeros -e^{-λ 2^{-(j + offset)}}.
    """
    kind: Literal["exponential"] = "exponential"
    lambdas: List[LambdaDTO] = Field(min_length=1)
    offset: int = 0


class ScheduleDTO(BaseModel):
    """
    **Description**: JSON form of a mask schedule.

    **Usage**:
    `{"head": [{"lo": -1, "coeffs": [0.5, 1, 0.5]}], "tail": {"kind": "repeat_last"}}`;
    unit-normalized head masks are converted to the sum-2 convention on load.
    """
    head: List[LaurentPolynomialDTO] = Field(min_length=1)
    tail: Annotated[Union[RepeatLastDTO, ExponentialTailDTO], Field(discriminator="kind")] = RepeatLastDTO()

    def to_entity(self) -> MaskSchedule:
        head = tuple(Mask(mask.to_entity(), level=j) for j, mask in enumerate(self.head, start=1))
        if isinstance(self.tail, ExponentialTailDTO):
            space = ExponentialSpaceDTO(lambdas=self.tail.lambdas).to_entity()
            return MaskSchedule(head, ExponentialTail(space, self.tail.offset))
        return MaskSchedule(head, RepeatLast())

    @classmethod
    def from_entity(cls, schedule: MaskSchedule) -> "ScheduleDTO":
        head = [LaurentPolynomialDTO.from_entity(mask.symbol) for mask in schedule.head]
        if isinstance(schedule.tail, ExponentialTail):
            lambdas = ExponentialSpaceDTO.from_entity(schedule.tail.space).lambdas
            return cls(head=head, tail=ExponentialTailDTO(lambdas=lambdas, offset=schedule.tail.level_offset))
        return cls(head=head)


class SupportDTO(BaseModel):
    lo: float
    hi: float


class DimensionReportDTO(BaseModel):
    supports: List[SupportDTO]
    bound: int
