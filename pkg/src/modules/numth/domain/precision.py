"""
Política de precisión p-ádica: valor inicial por primo y escalada con tope.
"""
from dataclasses import dataclass

from src.core.config import settings
from src.core.exceptions import PrecisionExhaustedError, ValidationError
from src.modules.numth.domain.factorization import valuation


@dataclass(frozen=True)
class PrecisionPolicy:
    """
    N₀ = base + 2·v_p(2·disc) dígitos, duplicado en cada fallo, con tope.
    """
    base: int = 20
    cap: int = 4096
    real_bits: int = 64

    def __post_init__(self):
        if self.base < 3 or self.cap < self.base:
            raise ValidationError("Política de precisión inconsistente", field="cap", value=self.cap)

    @classmethod
    def from_settings(cls, cap: int = None) -> "PrecisionPolicy":
        return cls(
            base=settings.precision_base,
            cap=cap or settings.precision_cap,
            real_bits=settings.real_bits
        )

    def initial(self, p: int, disc: int) -> int:
        return min(self.base + 2 * valuation(2 * disc, p), self.cap)

    def escalate(self, precision: int) -> int:
        """
        Raises:
            PrecisionExhaustedError: Si ya se alcanzó el tope
        """
        if precision >= self.cap:
            raise PrecisionExhaustedError(
                f"Precisión agotada en {precision} dígitos",
                precision=precision,
                cap=self.cap
            )
        return min(2 * precision, self.cap)
