"""Cross-check every method of computing P(C_n, λ) against every other."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import oracle
from .bijection import count_via_bijection
from .deletion_contraction import chromatic_polynomial_dc
from .formulas import cycle_closed_form
from .graph import cycle_graph
from .inclusion_exclusion import chromatic_by_subsets, cycle_inclusion_exclusion
from .polynomial import IntPolynomial, evaluate, to_dict
from .walks import chromatic_count_via_walks

METHOD_ORDER = ("closed-form", "dc", "ie-cycle", "ie", "walk", "bijection", "oracle")


@dataclass
class VerifyReport:
    n_max: int
    lambda_max: int
    # method -> n -> λ -> count; λ absent where the method does not apply
    counts: dict[str, dict[int, dict[int, int]]] = field(default_factory=dict)
    polynomials: dict[str, dict[int, IntPolynomial]] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    failures: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.failures

    def to_dict(self, *, timings: bool = False) -> dict:
        out = {
            "n_max": self.n_max,
            "lambda_max": self.lambda_max,
            "agree": self.agree,
            "polynomials": {
                m: {str(n): to_dict(p) for n, p in per_n.items()} for m, per_n in self.polynomials.items()
            },
            "counts": {
                m: {str(n): {str(lam): str(c) for lam, c in per_lam.items()} for n, per_lam in per_n.items()}
                for m, per_n in self.counts.items()
            },
            "failures": [{"n": n, "lambda": lam, "method": m} for n, lam, m in self.failures],
        }
        if timings:
            out["timings"] = dict(self.timings)
        return out


def _polynomial_methods() -> dict[str, Callable[[int], IntPolynomial]]:
    return {
        "closed-form": cycle_closed_form,
        "dc": lambda n: chromatic_polynomial_dc(cycle_graph(n))[0],
        "ie-cycle": cycle_inclusion_exclusion,
        "ie": lambda n: chromatic_by_subsets(cycle_graph(n)),
    }


def _count_methods(include_oracle: bool) -> dict[str, Callable[[int, int], int | None]]:
    methods: dict[str, Callable[[int, int], int | None]] = {
        "walk": lambda n, lam: chromatic_count_via_walks(n, lam) if lam >= 1 else None,
        "bijection": lambda n, lam: count_via_bijection(n, lam).total,
    }
    if include_oracle:
        methods["oracle"] = lambda n, lam: oracle.count_proper_colorings(cycle_graph(n), lam)
    return methods


def verify_cycles(n_max: int, lambda_max: int, *, include_oracle: bool = True) -> VerifyReport:
    """Evaluate every method for n in 1..n_max and λ in 0..lambda_max; record disagreements.

    The oracle raises BudgetExceededError when λ^n exceeds the work budget.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if lambda_max < 0:
        raise ValueError(f"lambda_max must be >= 0, got {lambda_max}")
    report = VerifyReport(n_max, lambda_max)
    lambdas = range(lambda_max + 1)
    ns = range(1, n_max + 1)

    for name, fn in _polynomial_methods().items():
        t0 = time.perf_counter()
        polys = {n: fn(n) for n in ns}
        report.polynomials[name] = polys
        report.counts[name] = {n: {lam: evaluate(p, lam) for lam in lambdas} for n, p in polys.items()}
        report.timings[name] = time.perf_counter() - t0

    for name, fn in _count_methods(include_oracle).items():
        t0 = time.perf_counter()
        table: dict[int, dict[int, int]] = {}
        for n in ns:
            row = {}
            for lam in lambdas:
                value = fn(n, lam)
                if value is not None:
                    row[lam] = value
            table[n] = row
        report.counts[name] = table
        report.timings[name] = time.perf_counter() - t0

    reference = report.counts["closed-form"]
    for name in METHOD_ORDER:
        if name == "closed-form" or name not in report.counts:
            continue
        for n in ns:
            for lam, value in report.counts[name][n].items():
                if value != reference[n][lam]:
                    report.failures.append((n, lam, name))
    report.failures.sort()
    return report


def format_table(report: VerifyReport) -> str:
    """Methods by n, each cell the count at the largest λ, then the verdict."""
    lam = report.lambda_max
    ns = list(range(1, report.n_max + 1))
    methods = [m for m in METHOD_ORDER if m in report.counts]
    cells = {m: [str(report.counts[m][n].get(lam, "-")) for n in ns] for m in methods}
    widths = [max(len(str(n)), *(len(cells[m][i]) for m in methods)) for i, n in enumerate(ns)]
    label = max(len("method"), *(len(m) for m in methods))
    lines = [f"P(C_n, {lam}) by method"]
    lines.append(f"{'n':<{label}}  " + "  ".join(f"{n:>{w}}" for n, w in zip(ns, widths)))
    for m in methods:
        lines.append(f"{m:<{label}}  " + "  ".join(f"{c:>{w}}" for c, w in zip(cells[m], widths)))
    if report.agree:
        lines.append(f"OK: all methods agree for n <= {report.n_max}, λ <= {report.lambda_max}")
    else:
        for n, bad_lam, m in report.failures:
            lines.append(f"DISAGREE: n={n} λ={bad_lam} method={m}")
    return "\n".join(lines)
