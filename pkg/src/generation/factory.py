import logging

import numpy as np

from src.generation.entity import ExponentialSpace
from src.generation.exceptions import DegenerateLambdaError, NonRealSpectrumError
from src.subdivision.entity import Mask
from src.symbol.entity import LaurentPolynomial
from src.symbol.service import SymbolService

logger = logging.getLogger(__name__)


class ExponentialMaskFactory:
    """
    **Description**: Builds the minimal-degree level-j mask for an exponential space,
    a^{[j]}(z) = c_j Π_λ (z + e^{-λ 2^{-j}})^{k(λ)+1}, with c_j fixing a^{[j]}(1) = 2.

    **Usage**: Shared by `GenerationService.construct_schedule` (head masks) and
    `SubdivisionService.mask_at` (exponential tails), so both produce identical masks.
    """
    def __init__(self, symbol_service: SymbolService):
        self.symbol_service = symbol_service

    @staticmethod
    def zero_point(lam: complex, level: int, level_offset: int = 0) -> complex:
        """-e^{-λ 2^{-(level + offset)}}, the point where the level mask must vanish."""
        return -np.exp(-complex(lam) * 2.0 ** (-(level + level_offset)))

    def symbol(self, space: ExponentialSpace, level: int, level_offset: int = 0) -> LaurentPolynomial:
        roots = [
            self.zero_point(lam, level, level_offset)
            for lam, mult in space.spectrum
            for _ in range(mult + 1)
        ]
        product = self.symbol_service.from_roots(roots)
        at_one = self.symbol_service.eval_z(product, 1.0)
        if abs(at_one) <= 1e-12 * float(np.sum(np.abs(product.coeffs))):
            raise DegenerateLambdaError(
                f"Normalization undefined at level {level}: a factor vanishes at z = 1 for spectrum {space.spectrum}"
            )
        return self.symbol_service.scale(product, 2 / at_one)

    def mask(self, space: ExponentialSpace, level: int, level_offset: int = 0) -> Mask:
        if not space.is_conjugation_closed:
            raise NonRealSpectrumError(
                f"Spectrum {space.spectrum} is not closed under conjugation; masks would be complex"
            )
        symbol = self.symbol(space, level, level_offset)
        logger.debug(f"Built level-{level} mask of span {symbol.span} for spectrum {space.spectrum}")
        return Mask(symbol, level)
