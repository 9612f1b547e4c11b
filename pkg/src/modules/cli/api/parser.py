"""
Línea de órdenes: compute y batch.

    python -m src.cli compute --roots=-1,0,1
    python -m src.cli compute --coeffs a=-36,b=0 --verify --json informe.json
    python -m src.cli batch curvas.txt

Códigos de salida: 0 correcto, 1 error de dominio, 2 argumentos inválidos.
"""
import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError as PydanticValidationError

from src.core.config import settings
from src.core.container import container
from src.core.exceptions import DomainError, ValidationError
from src.modules.cli.api.presenter import render_text
from src.modules.cli.application.facade import CliFacade
from src.modules.cli.application.features.run_pipeline.command import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _csv(value: str) -> List[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


def _coefficients(value: str) -> List[str]:
    """Acepta 'A,B' o 'a=A,b=B'."""
    parts = _csv(value)
    named = dict(part.split("=", 1) for part in parts if "=" in part)
    if named:
        if set(named) != {"a", "b"} or len(parts) != 2:
            raise argparse.ArgumentTypeError(f"coeficientes inválidos: {value}")
        return [named["a"].strip(), named["b"].strip()]
    return parts


def _places(value: str) -> List[int]:
    try:
        return [int(p) for p in _csv(value)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de primos inválida: {value}")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--height-bound", type=int, default=settings.height_bound, help="Cota de altura de la búsqueda de puntos")
    parser.add_argument("--precision", type=int, default=None, help="Tope de precisión p-ádica")
    parser.add_argument("--seed", type=int, default=settings.seed, help="Semilla de las elecciones aleatorias")
    parser.add_argument("--verify", action="store_true", help="Comprobaciones δ y reejecuciones con otras elecciones")
    parser.add_argument("--places", type=_places, default=[], help="Primos añadidos p1,p2,...")
    parser.add_argument("--offline", action="store_true", default=settings.lmfdb_offline, help="No consultar la red")
    parser.add_argument("--cross-check", action="store_true", help="Contrastar con la base externa")
    parser.add_argument("--workers", type=int, default=settings.workers, help="Hilos para los cálculos locales")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.cli",
        description="Emparejamiento de Cassels-Tate sobre el 2-Selmer de curvas con 2-torsión racional"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Calcula el informe de una curva")
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument("--roots", type=_csv, help="Raíces racionales r1,r2,r3 (usar --roots=-1,0,1 con negativos)")
    source.add_argument("--coeffs", type=_coefficients, help="Coeficientes A,B de y^2 = x^3 + Ax + B")
    source.add_argument("--label", help="Etiqueta de la base externa")
    compute.add_argument("--format", choices=("text", "json"), default="text", help="Formato por salida estándar")
    compute.add_argument("--json", type=Path, default=None, metavar="PATH", help="Escribe el informe JSON en PATH")
    _add_run_options(compute)

    batch = commands.add_parser("batch", help="Una curva por línea: 'roots ...', 'coeffs ...' o 'label ...'")
    batch.add_argument("file", type=Path)
    _add_run_options(batch)
    return parser


def _shared(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "height_bound": args.height_bound,
        "precision": args.precision,
        "seed": args.seed,
        "verify": args.verify,
        "places": args.places,
        "offline": args.offline,
        "cross_check": args.cross_check,
        "workers": args.workers,
    }


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        roots=args.roots,
        coeffs=args.coeffs,
        label=args.label,
        output=args.format,
        **_shared(args)
    )


def parse_batch_line(line: str, shared: Dict[str, Any]) -> Optional[RunConfig]:
    """
    Convierte una línea del fichero de lote; None para líneas vacías o comentarios.

    Raises:
        ValidationError: Si la línea no tiene la forma '<tipo> <valor>'
    """
    content = line.split("#", 1)[0].strip()
    if not content:
        return None
    kind, _, value = content.partition(" ")
    value = value.strip()
    if kind == "roots":
        return RunConfig(roots=_csv(value), output="json", **shared)
    if kind == "coeffs":
        return RunConfig(coeffs=_coefficients(value), output="json", **shared)
    if kind == "label":
        return RunConfig(label=value, output="json", **shared)
    raise ValidationError(f"Línea de lote no reconocida: {content}", field="batch_line", value=content)


def report_error(error: DomainError, stream: TextIO) -> None:
    print(f"{error.code}: {error.message}", file=stream)
    if error.context:
        print(json.dumps(error.context, default=str, ensure_ascii=False), file=stream)


async def _compute(facade: CliFacade, args: argparse.Namespace, out: TextIO) -> int:
    report = await facade.run(config_from_args(args))
    if args.json is not None:
        args.json.write_text(report.deterministic_json(indent=2), encoding="utf-8")
        logger.info("Informe JSON escrito", extra={"path": str(args.json)})
    if args.format == "json":
        print(report.model_dump_json(), file=out)
    else:
        print(render_text(report), file=out)
    return EXIT_OK


async def _batch(facade: CliFacade, args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    shared = _shared(args)
    configs = []
    for number, line in enumerate(args.file.read_text(encoding="utf-8").splitlines(), start=1):
        try:
            config = parse_batch_line(line, shared)
        except (DomainError, PydanticValidationError, argparse.ArgumentTypeError) as e:
            print(f"línea {number}: {e}", file=err)
            return EXIT_USAGE
        if config is not None:
            configs.append(config)

    status = EXIT_OK
    for config, result in zip(configs, await facade.run_batch(configs)):
        if isinstance(result, DomainError):
            report_error(result, err)
            print(json.dumps({"input": config.describe_input(), "error": result.to_dict()}, default=str), file=out)
            status = EXIT_DOMAIN_ERROR
        else:
            print(result.model_dump_json(), file=out)
    return status


def main(
    argv: Optional[Sequence[str]] = None,
    facade: Optional[CliFacade] = None,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr
) -> int:
    """
    Ejecuta la orden y devuelve el código de salida.

    Args:
        argv: Argumentos (por defecto sys.argv)
        facade: Facade del pipeline (por defecto la del contenedor)
    """
    args = build_parser().parse_args(argv)
    if facade is None:
        facade = container.resolve("cli_facade")
    try:
        if args.command == "compute":
            return asyncio.run(_compute(facade, args, out))
        return asyncio.run(_batch(facade, args, out, err))
    except PydanticValidationError as e:
        print(f"INVALID_ARGUMENTS: {e}", file=err)
        return EXIT_USAGE
    except DomainError as e:
        report_error(e, err)
        return EXIT_DOMAIN_ERROR
    except OSError as e:
        print(f"IO_ERROR: {e}", file=err)
        return EXIT_DOMAIN_ERROR
