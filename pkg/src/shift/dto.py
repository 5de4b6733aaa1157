from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator

from src.shift.entity import Subspace


class SubspaceDTO(BaseModel):
    """
    **Description**: `{"ambient": n, "basis": [[...], ...]}`, each inner list one basis vector of length n.
    """
    ambient: int = Field(ge=1)
    basis: List[List[float]] = Field(min_length=1)

    @model_validator(mode="after")
    def check_lengths(self):
        if any(len(vector) != self.ambient for vector in self.basis):
            raise ValueError(f"Every basis vector must have {self.ambient} entries")
        return self

    def to_entity(self) -> Subspace:
        return Subspace.from_vectors(self.basis)

    @classmethod
    def from_entity(cls, subspace: Subspace) -> "SubspaceDTO":
        vectors = np.real_if_close(subspace.basis).T
        return cls(ambient=subspace.ambient_dim, basis=[[float(x) for x in vector] for vector in vectors])


class InvariantReportDTO(BaseModel):
    order: int
    dim: int
    rank_before: int
    rank_after: int
    invariant: bool


class FamilyCheckDTO(BaseModel):
    """
    **Fields**:
    - `label`: *str* - family name, e.g. "N(u,v)".
    - `description`: *str* - the defining condition on (a, b, c).
    - `instances`: *int* - how many members were instantiated.
    - `verified`: *bool* - every member is invariant.
    """
    label: str
    description: str
    instances: int
    verified: bool


class FourFamiliesReportDTO(BaseModel):
    families: List[FamilyCheckDTO]
    controls: int
    non_invariant_controls: int

    @property
    def verdict(self) -> bool:
        return all(family.verified for family in self.families)
