import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

SEPARATION_TOL = 1e-8


def distance_mod_2pi_i(difference: complex) -> float:
    """Distance of a complex number from the lattice 2πiℤ."""
    imag = math.remainder(difference.imag, 2 * math.pi)
    return math.hypot(difference.real, imag)


@dataclass(frozen=True, eq=False)
class ExponentialSpace:
    """
    **Description**: U = span{ t^a e^{λt} : 0 ≤ a ≤ k(λ), λ ∈ Λ }.

    **Fields**:
    - `spectrum`: *Tuple[Tuple[complex, int], ...]* - pairs (λ, k(λ)); the λ values are
      pairwise distinct modulo 2πi.

    **Usage**: Target of `GenerationService.construct_schedule` and `verify_generation`,
    and the rule behind exponential schedule tails.
    """
    spectrum: Tuple[Tuple[complex, int], ...]

    def __post_init__(self):
        spectrum = tuple((complex(lam), int(mult)) for lam, mult in self.spectrum)
        if not spectrum:
            raise ValueError("An exponential space needs at least one exponent")
        for lam, mult in spectrum:
            if mult < 0:
                raise ValueError(f"Multiplicity of {lam} must be non-negative, got {mult}")
        for i, (lam, _) in enumerate(spectrum):
            for mu, _ in spectrum[i + 1:]:
                if distance_mod_2pi_i(lam - mu) < SEPARATION_TOL:
                    raise ValueError(f"Exponents {lam} and {mu} coincide modulo 2πi")
        object.__setattr__(self, "spectrum", spectrum)

    @property
    def dim(self) -> int:
        return sum(mult + 1 for _, mult in self.spectrum)

    @property
    def basis(self) -> List[Tuple[complex, int]]:
        """Pairs (λ, a) labelling the basis functions t^a e^{λt}."""
        return [(lam, a) for lam, mult in self.spectrum for a in range(mult + 1)]

    @property
    def is_conjugation_closed(self) -> bool:
        for lam, mult in self.spectrum:
            if abs(lam.imag) < SEPARATION_TOL:
                continue
            if not any(abs(mu - lam.conjugate()) < SEPARATION_TOL and k == mult for mu, k in self.spectrum):
                return False
        return True

    def multiplicity(self, lam: complex) -> int | None:
        for mu, mult in self.spectrum:
            if abs(mu - lam) < SEPARATION_TOL:
                return mult
        return None

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        """Matrix whose columns are the basis functions sampled at `t`."""
        t = np.asarray(t, dtype=float)
        return np.column_stack([t ** a * np.exp(lam * t) for lam, a in self.basis])
