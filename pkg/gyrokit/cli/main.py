"""The ``gyrokit`` command line.

Vectors are given as ``x,y,z`` or as JSON arrays. Vectors with a leading minus
sign must follow ``--`` or use the JSON form, e.g. ``"[-0.5, 0]"``.

Exit codes: 0 success, 1 audit failure, 2 bad input, 3 domain error,
4 degenerate geometry.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from gyrokit.algebra import audit, get_model, gyr_angle, mob_gamma_of_sum
from gyrokit.algebra.einstein import ein_gamma_of_sum
from gyrokit.cli.config import FORMAT_CHOICES, MODEL_CHOICES, CliConfig
from gyrokit.cli.render import Output, render
from gyrokit.core.ball import BallParams, BallVector, Tolerance, gamma, rapidity
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import DegenerateCurve, DegenerateFit, DegenerateTriangle, GyroError, VectorParseError
from gyrokit.geometry.arcs import arc_diagnostics
from gyrokit.geometry.gyrolines import CURVE_KINDS, GyroCurve
from gyrokit.physics.qic import BLOCH, bures_fidelity
from gyrokit.physics.relativity import ParticleSystem, aberrate, aberration_gap, fictitious_mass, invariant_mass

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_DEGENERATE = 4

AUDIT_DEFAULT_DIM = 3


def parse_vector(text: str) -> list[float]:
    """Parse ``"0.1,0.2"`` or ``"[0.1, 0.2]"`` into a list of floats."""
    raw = text.strip()
    try:
        if raw.startswith("["):
            values = json.loads(raw)
            if not isinstance(values, list):
                raise ValueError("not a JSON array")
        else:
            values = raw.split(",")
        coords = [float(v) for v in values]
    except (ValueError, TypeError) as exc:
        raise VectorParseError(f"Cannot parse vector {text!r}: {exc}") from exc
    if not coords:
        raise VectorParseError(f"Empty vector {text!r}")
    return coords


class Context:
    """Resolved configuration plus helpers that turn raw arguments into ball vectors."""

    def __init__(self, config: CliConfig) -> None:
        self.config = config

    def params_for(self, *texts: str) -> tuple[BallParams, list[list[float]]]:
        coords = [parse_vector(t) for t in texts]
        dims = {len(c) for c in coords}
        if len(dims) != 1:
            raise VectorParseError(f"Vectors have different lengths: {sorted(dims)}")
        dim = self.config.dim if self.config.dim is not None else dims.pop()
        return BallParams(s=self.config.s, dim=dim), coords

    def vectors(self, *texts: str) -> tuple[GyroOp, list[BallVector]]:
        params, coords = self.params_for(*texts)
        return get_model(self.config.model, params), [BallVector(c, params) for c in coords]


def _vector_output(op: GyroOp, result: BallVector, **extra: Any) -> Output:
    record = {"model": op.label, "s": op.params.s, "result": result.tolist(), **extra}
    header = [f"x{i + 1}" for i in range(op.params.dim)]
    return Output(record, header, [result.tolist()])


def _gamma_of_sum(op: GyroOp, u: BallVector, v: BallVector) -> float:
    if op.label == "einstein":
        return ein_gamma_of_sum(u, v)
    return mob_gamma_of_sum(u, v)


def cmd_add(ctx: Context, args: argparse.Namespace) -> Output:
    op, (u, v) = ctx.vectors(args.u, args.v)
    result = op.add(u, v)
    return _vector_output(op, result, gamma={"direct": gamma(result), "identity": _gamma_of_sum(op, u, v)})


def cmd_coadd(ctx: Context, args: argparse.Namespace) -> Output:
    op, (u, v) = ctx.vectors(args.u, args.v)
    return _vector_output(op, op.coadd(u, v))


def cmd_gyr(ctx: Context, args: argparse.Namespace) -> Output:
    op, (a, b, z) = ctx.vectors(args.a, args.b, args.z)
    extra = {"angle": gyr_angle(op, a, b)} if op.params.dim == 2 else {}
    return _vector_output(op, op.gyr(a, b, z), **extra)


def cmd_scalar(ctx: Context, args: argparse.Namespace) -> Output:
    op, (v,) = ctx.vectors(args.v)
    return _vector_output(op, op.mul(args.r, v), r=args.r)


def cmd_gamma(ctx: Context, args: argparse.Namespace) -> Output:
    _, (v,) = ctx.vectors(args.v)
    return Output({"s": v.s, "gamma": gamma(v), "rapidity": rapidity(v)})


def cmd_curve(ctx: Context, args: argparse.Namespace) -> Output:
    op, (a, b) = ctx.vectors(args.a, args.b)
    curve = GyroCurve(args.kind, a, b, op)
    sampled = curve.sample(args.samples, args.t0, args.t1)
    rows = sampled.as_list()
    record: dict[str, Any] = {"kind": args.kind, "model": op.label, "s": op.params.s, "rows": rows}
    if op.params.dim == 2 and op.label == "mobius":
        record["diagnostics"] = arc_diagnostics(curve, max(args.samples, 64), args.t0, args.t1).as_dict()
    header = ["t", *(f"x{i + 1}" for i in range(op.params.dim))]
    return Output(record, header, rows)


def cmd_audit(ctx: Context, args: argparse.Namespace) -> Output:
    config = ctx.config
    params = BallParams(s=config.s, dim=config.dim if config.dim is not None else AUDIT_DEFAULT_DIM)
    op = get_model(config.model, params)
    tol = Tolerance(abs=1e-12, rel=config.tol)
    report = audit(op, samples=args.samples, seed=config.seed, tol=tol, workers=args.workers)
    record = report.to_dict()
    rows = [[c.name, c.samples, c.max_residual, c.passed] for c in report.identities]
    return Output(record, ["name", "samples", "max_residual", "pass"], rows)


def cmd_invmass(ctx: Context, args: argparse.Namespace) -> Output:
    try:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        payload = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise VectorParseError(f"Cannot read particle system from {args.input!r}: {exc}") from exc
    system = ParticleSystem.from_json(payload)
    return Output(
        {
            "s": system.params.s,
            "particles": len(system.particles),
            "total_mass": system.total_mass(),
            "m0": invariant_mass(system),
            "fictitious_mass": fictitious_mass(system),
        }
    )


def cmd_aberrate(ctx: Context, args: argparse.Namespace) -> Output:
    _, (u, v_obs) = ctx.vectors(args.u, args.v_obs)
    record: dict[str, Any] = {"s": u.s}
    for mode in ("classical", "relativistic"):
        result = aberrate(u, v_obs, mode)
        record[mode] = {"direction": result.as_list(), **result.metadata}
    record["gap"] = aberration_gap(u, v_obs)
    return Output(record)


def cmd_fidelity(ctx: Context, args: argparse.Namespace) -> Output:
    u = BallVector(parse_vector(args.u), BLOCH)
    v = BallVector(parse_vector(args.v), BLOCH)
    by_matrix = bures_fidelity(u, v, "matrix")
    by_gyro = bures_fidelity(u, v, "gyro")
    return Output({"matrix": by_matrix, "gyro": by_gyro, "residual": abs(by_matrix - by_gyro)})


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=float, default=None, help="ball radius (env GYR_S, default 1)")
    common.add_argument("--dim", type=int, default=None, help="dimension (env GYR_DIM, default: inferred)")
    common.add_argument("--model", choices=MODEL_CHOICES, default=None, help="env GYR_MODEL, default mobius")
    common.add_argument("--format", choices=FORMAT_CHOICES, default=None, help="env GYR_FORMAT, default json")
    common.add_argument("--seed", type=int, default=None, help="env GYR_SEED, default 0")
    common.add_argument("--tol", type=float, default=None, help="relative tolerance (env GYR_TOL, default 1e-9)")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="gyrokit", description="Gyrovector space calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[Context, argparse.Namespace], Output], help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(handler=handler)
        return p

    p = add("add", cmd_add, "u ⊕ v and the gamma of the sum")
    p.add_argument("u")
    p.add_argument("v")

    p = add("coadd", cmd_coadd, "u ⊞ v")
    p.add_argument("u")
    p.add_argument("v")

    p = add("gyr", cmd_gyr, "gyr[a,b]z")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("z")

    p = add("scalar", cmd_scalar, "r ⊗ v")
    p.add_argument("r", type=float)
    p.add_argument("v")

    p = add("gamma", cmd_gamma, "Lorentz factor and rapidity of v")
    p.add_argument("v")

    p = add("curve", cmd_curve, "sample a gyroline or cogyroline; Möbius disc curves add circle-fit diagnostics")
    p.add_argument("kind", choices=CURVE_KINDS)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--samples", type=int, default=16, help="number of intervals; samples + 1 rows")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=1.0)

    p = add("audit", cmd_audit, "check the gyrogroup axioms on seeded samples")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)

    p = add("invmass", cmd_invmass, "invariant and fictitious mass of a particle system")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")

    p = add("aberrate", cmd_aberrate, "classical and relativistic apparent motion")
    p.add_argument("u")
    p.add_argument("v_obs")

    p = add("fidelity", cmd_fidelity, "Bures fidelity of two Bloch vectors")
    p.add_argument("u")
    p.add_argument("v")

    return parser


def _exit_code(exc: GyroError) -> int:
    if isinstance(exc, VectorParseError):
        return EXIT_USAGE
    if isinstance(exc, DegenerateCurve | DegenerateTriangle | DegenerateFit):
        return EXIT_DEGENERATE
    return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = CliConfig.from_env().merged(
            s=args.s, dim=args.dim, model=args.model, format=args.format, seed=args.seed, tol=args.tol
        )
        logger.debug("resolved %s", config)
        output = args.handler(Context(config), args)
    except GyroError as exc:
        print(f"gyrokit {args.command}: {exc}", file=sys.stderr)
        return _exit_code(exc)
    except ValueError as exc:
        print(f"gyrokit {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(render(output, config.format))
    if args.command == "audit" and not output.record["pass"]:
        return EXIT_AUDIT_FAILED
    return EXIT_OK
