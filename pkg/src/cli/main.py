"""Command line entrypoint: compute, quad, verify, eval and schema."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src import __version__
from src.cli.config import RunConfig
from src.core.exceptions import (
    CapacityError,
    CauchyKitError,
    ConfigurationError,
    ConsistencyError,
    ContractViolationError,
    DomainError,
    RouteMismatchError,
)
from src.core.logging_config import configure_logging, get_logger
from src.core.settings import get_settings
from src.exact.cauchy import build_cauchy_table, cauchy_table
from src.quadrature.integrands import IntegrandSpec
from src.quadrature.integrator import eval_F, eval_h, eval_h_general, f_closed_form, integrate
from src.quadrature.precision import (
    bits_to_digits,
    format_mpf,
    format_rational,
    parse_tolerance,
    to_mpf,
    working_context,
)
from src.reports.models import VerificationReport
from src.reports.storage import FORMATS, ReportWriter, to_json
from src.verification.service import SUITES, VerificationConfig, VerificationService

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INTERNAL = 2
EXIT_NOT_CONVERGED = 3


class CliParser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for internal errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILED, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default plain).")
    common.add_argument("--out", default=None, help="Write output to FILE instead of stdout.")
    common.add_argument("--precision", type=int, default=None, help="Precision in bits (env CAUCHYKIT_PRECISION).")
    common.add_argument("--tol", default=None, help="Tolerance as an exact decimal string, e.g. 1e-12.")
    common.add_argument("--table-bound", type=int, default=None, help="Opt in to tables beyond the configured bound.")

    parser = CliParser(prog="cauchykit", description="Cauchy numbers of the second kind: exact tables and checks.")
    parser.add_argument("--version", action="version", version=f"cauchykit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    compute = sub.add_parser("compute", parents=[common], help="Exact c_n and c_n/n! by both routes.")
    compute.add_argument("--n-max", type=int, default=None)

    quad = sub.add_parser("quad", parents=[common], help="Quadrature of c_n/n! against the exact value.")
    quad.add_argument("--n", type=int, default=None)
    quad.add_argument("--rule", default=None, help="gauss-legendre or clenshaw-curtis.")

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites.")
    verify.add_argument(
        "--suite", dest="suites", action="append", default=None, choices=["all", *SUITES],
        help="Suite to run; repeatable (default all).",
    )
    verify.add_argument("--epsilon", dest="epsilons", action="append", default=None)
    verify.add_argument("--depth", type=int, default=None, help="Minimality search depth.")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--n-bound", type=int, default=None)

    evaluate = sub.add_parser("eval", parents=[common], help="Evaluate F, h_n or h(t; s).")
    evaluate.add_argument("kind", choices=["F", "h", "hs"])
    evaluate.add_argument("--z", default=None)
    evaluate.add_argument("--n", type=int, default=None)
    evaluate.add_argument("--t", default=None)
    evaluate.add_argument("--s", default=None)
    evaluate.add_argument("--rule", default=None)

    schema = sub.add_parser("schema", help="Print the JSON schema of verification reports.")
    schema.add_argument("--out", default=None)
    return parser


def _writer(config: RunConfig) -> ReportWriter:
    return ReportWriter(fmt=config.format, out=Path(config.out) if config.out else None)


def cmd_compute(config: RunConfig) -> int:
    table = build_cauchy_table(config.n_max, bound=config.table_bound)
    digits = bits_to_digits(config.precision)
    rows = [
        {"n": n, "c_n": str(c), "mu_n": str(mu), "decimal": format_rational(c, digits)}
        for n, (c, mu) in enumerate(zip(table.c, table.mu))
    ]
    payload = {"version": __version__, "n_max": config.n_max, "routes_agree": True, "entries": rows}
    writer = _writer(config)
    writer.emit(writer.render_rows(rows, payload))
    return EXIT_OK


def cmd_quad(config: RunConfig) -> int:
    _require(config, "n")
    table = cauchy_table(config.n, config.table_bound)
    result = integrate(IntegrandSpec.cauchy_moment(config.n), config.tol, config.precision, rule=config.rule)
    ctx = working_context(config.precision)
    exact = table.mu[config.n]
    deviation = abs(to_mpf(ctx, result.value) - to_mpf(ctx, exact))
    within = deviation <= 10 * to_mpf(ctx, parse_tolerance(config.tol))
    digits = bits_to_digits(config.precision)
    row = {
        "n": config.n,
        "value": format_mpf(result.value, digits),
        "error_estimate": format_mpf(result.error_estimate, 5),
        "exact": str(exact),
        "deviation": format_mpf(deviation, 5),
        "nodes": result.nodes_used,
        "converged": result.converged,
        "rule": result.rule,
    }
    writer = _writer(config)
    writer.emit(writer.render_rows([row], row))
    if not result.converged:
        return EXIT_NOT_CONVERGED
    return EXIT_OK if within else EXIT_FAILED


def cmd_verify(config: RunConfig) -> int:
    service = VerificationService()
    report = service.run(
        VerificationConfig(
            suites=config.suites,
            n_bound=config.n_bound,
            seed=config.seed,
            epsilons=config.epsilons,
            depth=config.depth,
            tol=config.tol,
            precision=config.precision,
            table_bound=config.table_bound,
        )
    )
    writer = _writer(config)
    writer.emit(writer.render_report(report))
    return EXIT_OK if report.ok else EXIT_FAILED


def _require(config: RunConfig, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(config, name) is None]
    if missing:
        command = " ".join(part for part in (config.command, config.kind) if part)
        raise DomainError(f"{command} needs {', '.join(missing)}")


def cmd_eval(config: RunConfig) -> int:
    digits = bits_to_digits(config.precision)
    options = {"rule": config.rule}
    row = {"kind": config.kind}
    if config.kind == "F":
        _require(config, "z")
        result = eval_F(config.z, config.tol, config.precision, **options)
        closed = f_closed_form(config.z, config.precision)
        ctx = working_context(config.precision)
        row.update(
            z=config.z,
            closed_form=format_mpf(closed, digits),
            deviation=format_mpf(abs(to_mpf(ctx, result.value) - to_mpf(ctx, closed)), 5),
        )
    elif config.kind == "h":
        _require(config, "n", "t")
        result = eval_h(config.n, config.t, config.tol, config.precision, **options)
        row.update(n=config.n, t=config.t)
    else:
        _require(config, "s", "t")
        result = eval_h_general(config.s, config.t, config.tol, config.precision, **options)
        row.update(s=config.s, t=config.t)
    row.update(
        value=format_mpf(result.value, digits),
        error_estimate=format_mpf(result.error_estimate, 5),
        converged=result.converged,
        nodes=result.nodes_used,
    )
    writer = _writer(config)
    writer.emit(writer.render_rows([row], row))
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_schema(config: RunConfig) -> int:
    writer = ReportWriter(fmt="json", out=Path(config.out) if config.out else None)
    writer.emit(to_json(VerificationReport.model_json_schema()))
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "quad": cmd_quad,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "schema": cmd_schema,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging()
    logger = get_logger("cli")
    try:
        config = RunConfig.from_namespace(args, get_settings())
        logger.debug("Command start", extra={"config": config.canonical()})
        return COMMANDS[config.command](config)
    except (RouteMismatchError, ConsistencyError) as exc:
        logger.error("Internal check failed: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CapacityError, DomainError, ContractViolationError, ConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except CauchyKitError as exc:
        logger.exception("Unexpected failure")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
