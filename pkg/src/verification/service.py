"""Orchestration of the verification suites into one report."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import ConfigurationError
from src.core.logging_config import get_logger
from src.core.settings import AppSettings, get_settings
from src.exact.cauchy import CauchyTable, cauchy_table, cauchy_table_via_stirling, cauchy_via_series
from src.exact.factorials import as_rational
from src.inequalities import (
    MajPair,
    check_log_convexity_at,
    check_thm4_at,
    random_chains,
    sweep_cor_power,
    sweep_thm4,
    sweep_thm5,
    sweep_thm6,
)
from src.matrices import sweep_thm3, sweep_thm7_det, sweep_thm7_product
from src.quadrature.integrands import IntegrandSpec
from src.quadrature.integrator import eval_F, eval_tail_moment, f_closed_form, integrate
from src.quadrature.precision import parse_tolerance, to_mpf, working_context
from src.reports.models import CaseRecord, CheckReport, ReportValue, VerificationReport, case_key
from src.sequences import (
    build_diff_table,
    check_complete_monotonicity,
    check_log_convexity,
    estimate_witness_order,
    minimality_probe,
)

# Regression values of c_0..c_6.
KNOWN_VALUES = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(5, 6),
    Fraction(9, 4),
    Fraction(251, 30),
    Fraction(475, 12),
    Fraction(19087, 84),
)

SUITES = (
    "exact",
    "theorem1",
    "fconsistency",
    "cm",
    "minimality",
    "logconvex",
    "thm3",
    "thm3-literal",
    "thm4",
    "power",
    "thm5",
    "thm6",
    "thm7",
    "continuous",
)

Outcome = Tuple[List[CheckReport], List[CheckReport]]


@dataclass
class VerificationConfig:
    """One `verify` invocation; unset fields fall back to configs/verification.yaml."""

    suites: Sequence[str] = ("all",)
    n_bound: Optional[int] = None
    seed: Optional[int] = None
    epsilons: Sequence[str] = field(default_factory=tuple)
    depth: Optional[int] = None
    tol: Optional[str] = None
    precision: Optional[int] = None
    table_bound: Optional[int] = None


def resolve_suites(selection: Sequence[str]) -> List[str]:
    chosen = set()
    for name in selection:
        if name == "all":
            chosen.update(SUITES)
        elif name in SUITES:
            chosen.add(name)
        else:
            raise ConfigurationError(f"unknown suite {name!r}; choose from {['all', *SUITES]}")
    return [name for name in SUITES if name in chosen]


class VerificationService:
    """Runs the selected suites against one cached Cauchy table."""

    def __init__(self, *, settings: AppSettings | None = None) -> None:
        self.settings = settings or get_settings()
        self.logger = get_logger("verification")

    def run(self, config: VerificationConfig) -> VerificationReport:
        defaults = self.settings.verification
        self.suites = resolve_suites(config.suites)
        self.n_bound = config.n_bound if config.n_bound is not None else defaults.n_bound
        self.seed = config.seed if config.seed is not None else defaults.seed
        self.epsilons = list(config.epsilons) or list(defaults.minimality_epsilons)
        self.depth = config.depth if config.depth is not None else defaults.minimality_depth
        self.tol = parse_tolerance(config.tol or self.settings.quadrature.tolerance)
        self.precision = config.precision or self.settings.quadrature.precision
        self.table_bound = config.table_bound

        table = cauchy_table(self._table_size(), self.table_bound)
        runners: Dict[str, Callable[[CauchyTable], Outcome]] = {
            "exact": self._exact,
            "theorem1": self._theorem1,
            "fconsistency": self._fconsistency,
            "cm": self._cm,
            "minimality": self._minimality,
            "logconvex": self._logconvex,
            "thm3": self._thm3,
            "thm3-literal": self._thm3_literal,
            "thm4": self._thm4,
            "power": self._power,
            "thm5": self._thm5,
            "thm6": self._thm6,
            "thm7": self._thm7,
            "continuous": self._continuous,
        }

        report = VerificationReport(seed=self.seed)
        for name in self.suites:
            self.logger.info("Suite start", extra={"suite": name})
            suites, discrepancies = runners[name](table)
            for item in suites:
                report.suites[item.suite] = item
            for item in discrepancies:
                report.discrepancies[item.suite] = item
            self.logger.info(
                "Suite done",
                extra={"suite": name, "failed": sum(item.failed for item in suites)},
            )
        return report.summarize()

    def _table_size(self) -> int:
        v = self.settings.verification
        needs = {
            "exact": v.route_bound,
            "theorem1": self.n_bound,
            "cm": v.cm_depth,
            "minimality": self.depth,
            "logconvex": self.n_bound,
            "thm3": v.thm3_n + 2 * v.thm3_entry,
            "thm3-literal": v.thm3_n + 2 * v.thm3_entry,
            "thm4": max(v.thm4_shifts, default=0) + v.majorization_entry,
            "power": v.power_ell + v.power_n,
            "thm5": v.thm5_ell + v.thm5_n,
            "thm6": v.thm6_ell + 3 * v.thm6_nm,
            "thm7": v.thm7_entry * (max(v.thm7_product_m, v.thm7_det_m) + 1),
        }
        return max([2] + [needs[name] for name in self.suites if name in needs])

    def _exact(self, table: CauchyTable) -> Outcome:
        bound = self.settings.verification.route_bound
        series = cauchy_via_series(bound, bound=self.table_bound)
        stirling = cauchy_table_via_stirling(bound, bound=self.table_bound)
        cases = []
        for n, (left, right) in enumerate(zip(series.c, stirling.c)):
            known = KNOWN_VALUES[n] if n < len(KNOWN_VALUES) else None
            growth = n == 0 or n + 1 > bound or series.c[n + 1] > left
            cases.append(
                CaseRecord(
                    key=case_key(n=n),
                    inputs={"n": n},
                    lhs=ReportValue.of(left),
                    rhs=ReportValue.of(right),
                    holds=left == right and left > 0 and growth and (known is None or left == known),
                    margin=ReportValue.of(right - left),
                    extras={"regression": known is not None},
                )
            )
        return [CheckReport.from_cases("exact", cases, parameters={"route_bound": bound})], []

    def _quad_case(self, key: str, inputs: dict, value, error, converged: bool, reference) -> CaseRecord:
        ctx = working_context(self.precision)
        deviation = abs(to_mpf(ctx, value) - to_mpf(ctx, reference))
        limit = 10 * to_mpf(ctx, self.tol)
        return CaseRecord(
            key=key,
            inputs=inputs,
            lhs=ReportValue.approximate(value),
            rhs=ReportValue.approximate(to_mpf(ctx, reference)),
            holds=converged and deviation <= limit,
            margin=ReportValue.approximate(deviation),
            extras={"error_estimate": ReportValue.approximate(error).model_dump(), "converged": converged},
        )

    def _theorem1(self, table: CauchyTable) -> Outcome:
        n_max = min(self.n_bound, self.settings.quadrature.verified_moment_bound)
        cases = []
        for n in range(n_max + 1):
            result = integrate(IntegrandSpec.cauchy_moment(n), self.tol, self.precision)
            cases.append(
                self._quad_case(
                    case_key(n=n), {"n": n}, result.value, result.error_estimate, result.converged, table.mu[n]
                )
            )
        parameters = {"n_max": n_max, "tol": str(self.tol), "precision": self.precision}
        return [CheckReport.from_cases("theorem1", cases, parameters=parameters)], []

    def _fconsistency(self, table: CauchyTable) -> Outcome:
        cases = []
        for point in self.settings.verification.f_points:
            z = as_rational(point)
            result = eval_F(z, self.tol, self.precision)
            closed = f_closed_form(z, self.precision)
            cases.append(
                self._quad_case(
                    case_key(z=point), {"z": point}, result.value, result.error_estimate, result.converged, closed
                )
            )
        parameters = {"tol": str(self.tol), "precision": self.precision}
        return [CheckReport.from_cases("fconsistency", cases, parameters=parameters, sort=False)], []

    def _cm(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        dt = build_diff_table(table, v.cm_depth)
        cm_report = check_complete_monotonicity(dt)
        cases = []
        for k in range(min(v.moment_check_depth, dt.depth) + 1):
            result = eval_tail_moment(k, self.tol, self.precision)
            case = self._quad_case(
                case_key(k=k), {"k": k}, result.value, result.error_estimate, result.converged, dt.entry(k, 0)
            )
            cases.append(case)
        moments = CheckReport.from_cases("tail-moments", cases, parameters={"k_max": v.moment_check_depth})
        return [cm_report, moments], []

    def _minimality(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        dt = build_diff_table(table, self.depth)
        cases = []
        for epsilon in self.epsilons:
            probe = minimality_probe(dt, epsilon)
            extras = {"witness_order": probe.violation_order}
            if probe.found:
                observed = probe.d0_sequence[-1]
                note = f"witness k={probe.violation_order}"
            else:
                observed = probe.minimum_observed
                note = f"not found within depth {self.depth}"
                estimate = estimate_witness_order(
                    probe.epsilon, v.witness_tolerance, self.precision, v.witness_k_max
                )
                extras["estimated_order"] = estimate.order
                extras["estimate_converged"] = estimate.converged
                if estimate.order is not None:
                    note += f"; quadrature places it at k={estimate.order}"
                else:
                    note += f"; quadrature finds none up to k={v.witness_k_max}"
            cases.append(
                CaseRecord(
                    key=case_key(epsilon=str(probe.epsilon)),
                    inputs={"epsilon": str(probe.epsilon), "depth": self.depth},
                    lhs=ReportValue.of(observed),
                    rhs=ReportValue.of(probe.epsilon),
                    holds=True,
                    margin=ReportValue.of(probe.epsilon - observed),
                    extras=extras,
                    note=note,
                )
            )
        report = CheckReport.from_cases("minimality", cases, parameters={"depth": self.depth}, sort=False)
        return [report], []

    def _logconvex(self, table: CauchyTable) -> Outcome:
        return [check_log_convexity(table.truncated(self.n_bound))], []

    def _thm3_bounds(self) -> Tuple[int, int, int]:
        v = self.settings.verification
        return v.thm3_n, v.thm3_m, v.thm3_entry

    def _thm3(self, table: CauchyTable) -> Outcome:
        bounds = self._thm3_bounds()
        return [sweep_thm3(table, *bounds, form="signed"), sweep_thm3(table, *bounds, form="unsigned")], []

    def _thm3_literal(self, table: CauchyTable) -> Outcome:
        return [], [sweep_thm3(table, *self._thm3_bounds(), form="literal")]

    def _thm4(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        majorization = sweep_thm4(table, v.majorization_m, v.majorization_entry, shifts=v.thm4_shifts)
        chains = random_chains(table, v.random_chains, self.seed, m=v.majorization_m, entry_max=v.majorization_entry)
        return [majorization, chains], []

    def _power(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        return [sweep_cor_power(table, v.power_ell, v.power_n)], []

    def _thm5(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        return [sweep_thm5(table, v.thm5_ell, v.thm5_n)], []

    def _thm6(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        return [sweep_thm6(table, v.thm6_nm, v.thm6_ell)], []

    def _thm7(self, table: CauchyTable) -> Outcome:
        v = self.settings.verification
        return [
            sweep_thm7_det(table, v.thm7_det_m, v.thm7_entry),
            sweep_thm7_product(table, v.thm7_product_m, v.thm7_entry),
        ], []

    def _continuous(self, table: CauchyTable) -> Outcome:
        pairs = [(MajPair.of((1, 1), (2, 0)), 0), (MajPair.of((2, 2), (3, 1)), 1)]
        reports = []
        for point in self.settings.verification.continuous_points:
            for pair, n in pairs:
                reports.append(check_thm4_at(pair, n, point, self.tol, self.precision))
            for ell in (0, 1):
                for i in (0, 1):
                    reports.append(check_log_convexity_at(ell, i, point, self.tol, self.precision))
        parameters = {"points": list(self.settings.verification.continuous_points)}
        return [CheckReport.merge("continuous", reports, parameters=parameters)], []
