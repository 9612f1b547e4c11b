"""
Entidades del dominio de Selmer.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.core.exceptions import ValidationError
from src.modules.conic.domain import DiagonalConic, ProjPoint, TangentForm, conic_for
from src.modules.curve.domain import SplitCurve, SquareClassTriple


@dataclass
class TwoCovering:
    """
    2-cubrimiento D_β ⊂ P³ cortado por las cuadricas H₁, H₂, H₃.

    Cualesquiera dos de ellas definen la misma curva porque
    Σ (e_j − e_k)·H_i = 0. Los datos globales (q_i, L_i) solo se
    adjuntan cuando β está en el grupo de Selmer.
    """
    curve: SplitCurve
    beta: SquareClassTriple
    conics: Tuple[DiagonalConic, DiagonalConic, DiagonalConic] = field(init=False)
    global_data: Optional[Tuple[TangentForm, TangentForm, TangentForm]] = None

    def __post_init__(self):
        self.conics = tuple(conic_for(self.curve, self.beta, i) for i in (1, 2, 3))

    def conic(self, i: int) -> DiagonalConic:
        return self.conics[i - 1]

    def attach_global_data(self, tangents: Tuple[TangentForm, TangentForm, TangentForm]) -> None:
        for i, tangent in enumerate(tangents, start=1):
            if tangent.conic != self.conic(i):
                raise ValidationError(
                    f"La forma tangente {i} no pertenece a H_{i}",
                    field="global_data",
                    value=str(tangent)
                )
        self.global_data = tuple(tangents)

    @property
    def global_points(self) -> Tuple[ProjPoint, ...]:
        return tuple(tangent.base_point for tangent in self.global_data or ())

    @property
    def tangents(self) -> Tuple[TangentForm, ...]:
        return tuple(self.global_data or ())

    def __str__(self) -> str:
        return f"D{self.beta} sobre {self.curve}"
