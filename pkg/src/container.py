from dataclasses import dataclass, field
from functools import lru_cache

from src.difference.service import DifferenceService
from src.fourier.service import FourierService
from src.generation.factory import ExponentialMaskFactory
from src.generation.service import GenerationService
from src.shift.service import ShiftService
from src.subdivision.service import SubdivisionService
from src.symbol.service import SymbolService


@dataclass
class Container:
    """
    **Description**: The service graph, wired by constructor injection.

    **Usage**: Routers obtain services through `get_container()`; tests build their own `Container()`.
    """
    symbol_service: SymbolService = field(default_factory=SymbolService)
    difference_service: DifferenceService = field(default_factory=DifferenceService)
    shift_service: ShiftService = field(default_factory=ShiftService)

    def __post_init__(self):
        self.mask_factory = ExponentialMaskFactory(self.symbol_service)
        self.subdivision_service = SubdivisionService(self.mask_factory)
        self.fourier_service = FourierService(self.subdivision_service, self.symbol_service)
        self.generation_service = GenerationService(
            self.symbol_service,
            self.subdivision_service,
            self.fourier_service,
            self.mask_factory,
        )


@lru_cache
def get_container() -> Container:
    return Container()
