"""
Representación en texto del informe para la línea de órdenes.
"""
from typing import List

from src.modules.cli.application.features.run_pipeline.response import Report


def _triple(values: List[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_text(report: Report) -> str:
    c = report.curve
    lines = [
        f"Curva: y^2 = (x - {c.e1})(x - {c.e2})(x - {c.e3})   [A = {c.A}, B = {c.B}]",
        f"  entrada: {c.input}   cambio: u = {c.u}, r = {c.r}",
        f"  discriminante: {c.disc}",
        "",
        f"Grupo de 2-Selmer (dim {report.selmer.dim}):",
    ]
    lines += [f"  a{r + 1} = {_triple(b)}" for r, b in enumerate(report.selmer.basis)]
    lines.append("  imagen de la torsión: " + ", ".join(_triple(t) for t in report.selmer.torsion_image))

    lines += ["", f"Matriz del emparejamiento (rango {report.pairing.rank}):"]
    lines += ["  " + " ".join("+1" if s == 1 else "-1" for s in row) for row in report.pairing.matrix_signs]
    if report.pairing.kernel_basis:
        lines.append("  núcleo: " + ", ".join(_triple(k) for k in report.pairing.kernel_basis))

    lines += [
        "",
        f"Cota ingenua del rango: {report.bounds.naive}",
        f"Cota refinada del rango: {report.bounds.refined}",
    ]
    if report.points:
        lines.append("Puntos encontrados: " + ", ".join(report.points))
    if report.verification.delta_checks or report.verification.runs:
        lines.append(
            f"Verificación: {report.verification.delta_checks} comprobaciones δ; "
            f"reejecuciones: {', '.join(report.verification.runs) or '-'}"
        )
    if report.external is not None:
        e = report.external
        lines.append(f"Base externa: {e.label} rango {e.rank} -> {e.status}")
        lines += [f"  aviso: {w}" for w in e.warnings]
    return "\n".join(lines)
