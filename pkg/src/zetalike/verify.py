"""End-to-end identity verification with structured, serializable reports.

Every cross-family identity the library implements is checked here in exact
arithmetic wherever both sides are exact; the only numeric acceptance path is
the 2-D quadrature check, which carries its own tolerance.  A failed check is
data, not an exception: the report records both sides and their exact
discrepancy so convention ambiguities surface as reviewable artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Union

import mpmath
import numpy as np

from .compositions import compositions, weak_compositions
from .errors import FixtureError
from .eta import (
    ZetaExpr,
    eta_hook_closed_form,
    eta_restricted_triple_sum,
    eta_symbolic,
)
from .harmonic import bell_polynomial, harmonic, harmonic_vector
from .numeric import ApproxReal, Rational, factorial
from .quadrature import integrate_unit_square
from .rho import (
    rho_exact,
    rho_sum_fixed_weight,
    rho_sum_general,
    rho_weighted_sum,
    suffix_balance_sum,
)
from . import tables

Value = Union[Rational, ZetaExpr, ApproxReal]

__all__ = [
    "VerificationReport",
    "verify_rho_eta_connection",
    "verify_eta_hook_sum",
    "verify_weighted_eta_sum",
    "verify_weighted_corollaries",
    "verify_remark_chain",
    "verify_tables",
    "quadrature_check_integral",
    "verify_rho_sum_fixed_weight",
    "verify_rho_sum_general",
    "verify_rho_weighted_sum",
    "verify_suffix_balance",
    "verify_eta_triple_sum",
    "verify_eta_hook_closed_form",
    "value_to_json",
    "value_from_json",
    "SUITES",
    "run_suite",
    "rerun",
]


# --------------------------------------------------------------------------
# Reports
# --------------------------------------------------------------------------

def value_to_json(v: Value) -> dict:
    """Shared value encoding: exact values carry constant + zeta map, numeric
    values carry a decimal string and an error bound."""
    if isinstance(v, ApproxReal):
        return {
            "value": mpmath.nstr(v.value, min(v.dps, 20)),
            "error_bound": mpmath.nstr(v.error_bound, 3),
        }
    if isinstance(v, (int, Fraction)):
        v = ZetaExpr(v)
    if isinstance(v, ZetaExpr):
        return v.to_json_dict()
    raise TypeError(f"cannot serialize {type(v).__name__}")


def value_from_json(obj: dict) -> Value:
    if "error_bound" in obj:
        return ApproxReal(mpmath.mpf(obj["value"]), mpmath.mpf(obj["error_bound"]))
    expr = ZetaExpr.from_json_dict(obj)
    return expr.constant if expr.is_rational() else expr


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check."""

    identity_id: str
    parameters: dict
    lhs: Value
    rhs: Value
    passed: bool
    discrepancy: Value
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity_id,
            "parameters": dict(self.parameters),
            "lhs": value_to_json(self.lhs),
            "rhs": value_to_json(self.rhs),
            "passed": self.passed,
            "discrepancy": value_to_json(self.discrepancy),
        }
        if self.details:
            out["details"] = {k: str(v) for k, v in self.details.items()}
        return out


def _exact_report(identity_id, parameters, lhs, rhs, details=None) -> VerificationReport:
    """Report for two exact values; ZetaExpr lhs must also be purely rational
    when rhs is rational (zeta-cancellation is part of the check)."""
    lhs_e = ZetaExpr.coerce(lhs)
    rhs_e = ZetaExpr.coerce(rhs)
    diff = lhs_e - rhs_e
    passed = diff.is_zero()
    return VerificationReport(
        identity_id, dict(parameters), lhs, rhs, passed, diff, details or {}
    )


# --------------------------------------------------------------------------
# Enumeration helpers
# --------------------------------------------------------------------------

def _eta_sum(indices: Iterable[tuple[int, ...]]) -> ZetaExpr:
    total = ZetaExpr(0)
    for idx in indices:
        total = total + eta_symbolic(idx)
    return total


def _hook_lhs(n: int, q: int) -> ZetaExpr:
    # indices (a_1+1, ..., a_r+1, a_{r+1}+2, {1}^s) over r+s=n, |a|=q
    total = ZetaExpr(0)
    for r in range(n + 1):
        s = n - r
        for comp in weak_compositions(q, r + 1):
            idx = tuple(c + 1 for c in comp[:-1]) + (comp[-1] + 2,) + (1,) * s
            total = total + eta_symbolic(idx)
    return total


def _flat_eta_sum(weight_free: int, depth: int) -> ZetaExpr:
    # sum over |a| = weight_free of eta(a_1+1, ..., a_depth+1)
    return _eta_sum(
        tuple(c + 1 for c in comp) for comp in weak_compositions(weight_free, depth)
    )


# --------------------------------------------------------------------------
# Cross-family identities
# --------------------------------------------------------------------------

def verify_rho_eta_connection(q: int, r: int) -> VerificationReport:
    """Fixed-weight eta-sums over depth r+2 equal rho-sums over depth q+1:

        sum_{|s|=q} eta(s_1+1, ..., s_{r+2}+1)
            = sum_{|a|=r} rho(a_1+1, ..., a_q+1, a_{q+1}+2).

    Passing requires the eta side's zeta-coefficients to cancel exactly, not
    just the totals to agree numerically.
    """
    if q < 0 or r < 0:
        raise ValueError(f"need q, r >= 0, got ({q}, {r})")
    lhs = _flat_eta_sum(q, r + 2)
    rhs = Fraction(0)
    for comp in weak_compositions(r, q + 1):
        rhs += rho_exact(tuple(c + 1 for c in comp[:-1]) + (comp[-1] + 2,))
    return _exact_report("rho-eta-connection", {"q": q, "r": r}, lhs, rhs)


def verify_eta_hook_sum(n: int, q: int) -> VerificationReport:
    """Hook-shaped eta-sums against the cycle-index closed form:

        sum_{r+s=n, |a|=q} eta(a_1+1, ..., a_r+1, a_{r+1}+2, {1}^s)
            = P_{q+1}(H_n^(1), ..., H_n^(q+1)) / (n n!).
    """
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0, got ({n}, {q})")
    lhs = _hook_lhs(n, q)
    rhs = bell_polynomial(q + 1, harmonic_vector(n, q + 1)) / (n * factorial(n))
    return _exact_report("eta-hook-sum", {"n": n, "q": q}, lhs, rhs)


def verify_weighted_eta_sum(n: int, q: int) -> VerificationReport:
    """Trailing-ones variant:

        sum_{r+s=n, |a|=q} eta(a_1+1, ..., a_{r+1}+1, {1}^(s+1))
            = (-1)^(q+1)/(n (n+1)!)
              + (1/(n n!)) sum_{k=0}^q (-1)^(q-k) P_k(H_n^(1), ..., H_n^(k)).

    The left side counts each printed index once per (r, s, a) that generates
    it; that multiplicity is what turns into the (b+1)-style weights of the
    specialized corollaries, which pin this reading down.
    """
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0, got ({n}, {q})")
    lhs = ZetaExpr(0)
    for r in range(n + 1):
        s = n - r
        for comp in weak_compositions(q, r + 1):
            idx = tuple(c + 1 for c in comp) + (1,) * (s + 1)
            lhs = lhs + eta_symbolic(idx)
    rhs = Fraction((-1) ** (q + 1), n * factorial(n + 1))
    acc = Fraction(0)
    for k in range(q + 1):
        acc += (-1) ** (q - k) * bell_polynomial(k, harmonic_vector(n, k))
    rhs += acc / (n * factorial(n))
    return _exact_report(
        "weighted-eta-sum",
        {"n": n, "q": q},
        lhs,
        rhs,
        details={"index_layout": "(a_1+1..a_{r+1}+1, {1}^(s+1)) over r+s=n"},
    )


def verify_weighted_corollaries(kind: str, param: int) -> VerificationReport:
    """The printed specializations of the trailing-ones identity.

    kind="w121" (param=n): sum (b+1) eta({1}^a, 2, {1}^(b+1)) over a+b=n
        equals ((n+1) H_n - n) / (n (n+1)!).
    kind="w122" (param=n): the analogous order-3 combination equals
        (2n + (n+1)(H_n^2 - 2 H_n + H_n^(2))) / (2n (n+1)!).
    kind="e38" (param=q): sum_{a1+a2=q} eta(a1+1, a2+1, 1) + eta(q+1, 1, 1)
        equals 1/2.
    """
    if kind == "w121":
        n = param
        if n < 1:
            raise ValueError(f"w121 needs n >= 1, got {n}")
        lhs = ZetaExpr(0)
        for a in range(n + 1):
            b = n - a
            lhs = lhs + eta_symbolic((1,) * a + (2,) + (1,) * (b + 1)) * (b + 1)
        rhs = ((n + 1) * harmonic(n) - n) / (n * factorial(n + 1))
        return _exact_report("w121", {"n": n}, lhs, rhs)
    if kind == "w122":
        n = param
        if n < 1:
            raise ValueError(f"w122 needs n >= 1, got {n}")
        lhs = ZetaExpr(0)
        for a in range(n + 1):
            b = n - a
            lhs = lhs + eta_symbolic((1,) * a + (3,) + (1,) * (b + 1)) * (b + 1)
        for a in range(n):
            for b in range(n - a):
                c = n - 1 - a - b
                idx = (1,) * a + (2,) + (1,) * b + (2,) + (1,) * (c + 1)
                lhs = lhs + eta_symbolic(idx) * (c + 1)
        h1, h2 = harmonic(n), harmonic(n, 2)
        rhs = (2 * n + (n + 1) * (h1**2 - 2 * h1 + h2)) / (2 * n * factorial(n + 1))
        return _exact_report("w122", {"n": n}, lhs, rhs)
    if kind == "e38":
        q = param
        if q < 0:
            raise ValueError(f"e38 needs q >= 0, got {q}")
        lhs = ZetaExpr(0)
        for a1, a2 in weak_compositions(q, 2):
            lhs = lhs + eta_symbolic((a1 + 1, a2 + 1, 1))
        lhs = lhs + eta_symbolic((q + 1, 1, 1))
        return _exact_report("e38", {"q": q}, lhs, Fraction(1, 2))
    raise ValueError(f"unknown corollary kind {kind!r}")


def verify_remark_chain(n: int, q: int) -> VerificationReport:
    """Four independent computations of one quantity, checked pairwise equal:

    A: the hook-shaped eta-enumeration over r+s=n, |a|=q;
    B: P_{q+1}(H_n^(1..q+1)) / (n n!);
    C: sum_{|s|=n-1} rho(s_1+1, ..., s_{q+1}+1, s_{q+2}+2);
    D: sum_{|a|=q+1} eta(a_1+1, ..., a_{n+1}+1).
    """
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0, got ({n}, {q})")
    a_val = _hook_lhs(n, q)
    b_val = bell_polynomial(q + 1, harmonic_vector(n, q + 1)) / (n * factorial(n))
    c_val = rho_sum_fixed_weight(n - 1, q + 2)[0]
    d_val = _flat_eta_sum(q + 1, n + 1)
    values = [a_val, ZetaExpr.coerce(b_val), ZetaExpr.coerce(c_val), d_val]
    passed = all(v == values[0] for v in values[1:])
    worst = ZetaExpr(0)
    for v in values[1:]:
        diff = v - values[0]
        if not diff.is_zero():
            worst = diff
    return VerificationReport(
        "remark-chain",
        {"n": n, "q": q},
        a_val,
        d_val,
        passed,
        worst,
        details={
            "eta_hook_enumeration": a_val.render(),
            "bell_closed_form": str(b_val),
            "rho_enumeration": str(c_val),
            "eta_flat_enumeration": d_val.render(),
        },
    )


# --------------------------------------------------------------------------
# Table reproduction
# --------------------------------------------------------------------------

def _admissible_rho_indices(weight: int) -> list[tuple[int, ...]]:
    return [c for c in compositions(weight) if c[-1] >= 2]


def _admissible_eta_indices(weight: int) -> list[tuple[int, ...]]:
    return list(compositions(weight))


def verify_tables(weight_min: int = 2, weight_max: int = 6) -> list[VerificationReport]:
    """Compare computed values against the shipped printed-value fixtures for
    every admissible index in the weight range."""
    if not (2 <= weight_min <= weight_max <= 6):
        raise FixtureError(
            f"fixtures cover weights 2..6, requested {weight_min}..{weight_max}"
        )
    reports = []
    for w in range(weight_min, weight_max + 1):
        for idx in _admissible_rho_indices(w):
            reports.append(
                _exact_report(
                    "table-rho",
                    {"index": ",".join(map(str, idx)), "weight": w},
                    rho_exact(idx),
                    tables.rho_reference(idx),
                )
            )
        for idx in _admissible_eta_indices(w):
            reports.append(
                _exact_report(
                    "table-eta",
                    {"index": ",".join(map(str, idx)), "weight": w},
                    eta_symbolic(idx),
                    tables.eta_reference(idx),
                )
            )
    return reports


# --------------------------------------------------------------------------
# Quadrature check
# --------------------------------------------------------------------------

def quadrature_check_integral(n: int, q: int, tol: float = 1e-6) -> VerificationReport:
    """Check the double-integral representation

        sum_{|a|=q+1} eta(a_1+1, ..., a_{n+1}+1)
            = (1/(n! q!)) int_{0<t1<t2<1} (log(t2/t1))^q (1-t1)^n
                                          dt1 dt2 / ((1-t1) t2)

    numerically.  The substitution t1 = u t2 maps the triangle onto the unit
    square with integrand (log(1/u))^q (1 - u t2)^(n-1), which tanh-sinh
    handles at both singular corners.
    """
    if n < 0 or q < 0:
        raise ValueError(f"need n, q >= 0, got ({n}, {q})")
    if tol < 1e-9:
        raise ValueError(f"tolerance below the float64 quadrature floor: {tol}")
    lhs_expr = _flat_eta_sum(q + 1, n + 1)
    lhs = lhs_expr.numeric(14)

    def integrand(u, uc, v, vc):
        s = uc + vc - uc * vc  # = 1 - u*v without cancellation
        if n == 0:
            base = 1.0 / s
        elif n == 1:
            base = np.ones_like(s)
        else:
            base = s ** (n - 1)
        if q == 0:
            return base
        return (-np.log(u)) ** q * base

    value, est, level = integrate_unit_square(integrand, tol / 4)
    scale = 1.0 / (factorial(n) * factorial(q))
    rhs = ApproxReal(mpmath.mpf(value * scale), mpmath.mpf(est * scale * 2 + 1e-14), 17)
    gap = abs(lhs.value - rhs.value)
    passed = gap <= mpmath.mpf(tol) + lhs.error_bound + rhs.error_bound
    return VerificationReport(
        "quadrature-integral",
        {"n": n, "q": q},
        lhs,
        rhs,
        bool(passed),
        ApproxReal(gap, lhs.error_bound + rhs.error_bound, 17),
        details={"quadrature_level": level, "tolerance": tol},
    )


# --------------------------------------------------------------------------
# Same-family wrappers (rho sum formulas, balance, eta closed forms)
# --------------------------------------------------------------------------

def verify_rho_sum_fixed_weight(m: int, r: int) -> VerificationReport:
    lhs, rhs = rho_sum_fixed_weight(m, r)
    return _exact_report("rho-sum-fixed-weight", {"m": m, "r": r}, lhs, rhs)


def verify_rho_sum_general(r: int, s: int, q: int) -> VerificationReport:
    lhs, rhs = rho_sum_general(r, s, q)
    return _exact_report("rho-sum-general", {"r": r, "s": s, "q": q}, lhs, rhs)


def verify_rho_weighted_sum(n: int, q: int) -> VerificationReport:
    lhs, rhs = rho_weighted_sum(n, q)
    return _exact_report("rho-weighted-sum", {"n": n, "q": q}, lhs, rhs)


def verify_suffix_balance(q: int, n: int) -> VerificationReport:
    return _exact_report(
        "suffix-balance", {"q": q, "n": n}, suffix_balance_sum(q, n), Fraction(1)
    )


def verify_eta_triple_sum(q: int) -> VerificationReport:
    closed = eta_restricted_triple_sum(q)
    direct = _eta_sum(
        (a1 + 1, a2 + 1, 1) for a1, a2 in weak_compositions(q, 2)
    )
    return _exact_report("eta-triple-sum", {"q": q}, direct, closed)


def verify_eta_hook_closed_form(p: int, a: int) -> VerificationReport:
    closed = eta_hook_closed_form(p, a)
    direct = eta_symbolic((p,) + (1,) * a)
    return _exact_report("eta-hook-closed-form", {"p": p, "a": a}, direct, closed)


# --------------------------------------------------------------------------
# Suites
# --------------------------------------------------------------------------

def _capped(cells, weight_of, max_weight):
    if max_weight is None:
        return list(cells)
    return [c for c in cells if weight_of(c) <= max_weight]


def suite_tables(max_weight: int | None = None) -> list[VerificationReport]:
    top = 6 if max_weight is None else min(6, max_weight)
    if top < 2:
        raise FixtureError(f"table fixtures start at weight 2, got cap {top}")
    return verify_tables(2, top)


def suite_rho_sum(max_weight: int | None = None) -> list[VerificationReport]:
    reports = []
    cells = [(m, r) for m in range(11) for r in range(1, 7)]
    for m, r in _capped(cells, lambda c: c[0] + c[1] + 1, max_weight):
        reports.append(verify_rho_sum_fixed_weight(m, r))
    cells = [(r, s, q) for r in range(7) for s in range(5) for q in range(5)]
    for r, s, q in _capped(cells, lambda c: c[0] + c[1] + c[2] + 2, max_weight):
        reports.append(verify_rho_sum_general(r, s, q))
    cells = [(n, q) for n in range(11) for q in range(6)]
    for n, q in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight):
        reports.append(verify_rho_weighted_sum(n, q))
    return reports


def suite_rho_eta(max_weight: int | None = None) -> list[VerificationReport]:
    cells = [(q, r) for q in range(5) for r in range(5)]
    return [
        verify_rho_eta_connection(q, r)
        for q, r in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight)
    ]


def suite_hook(max_weight: int | None = None) -> list[VerificationReport]:
    reports = []
    cells = [(n, q) for n in range(1, 6) for q in range(4)]
    for n, q in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight):
        reports.append(verify_eta_hook_sum(n, q))
    cells = [(n, q) for n in range(1, 5) for q in range(4)]
    for n, q in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight):
        reports.append(verify_remark_chain(n, q))
    cells = [(p, a) for p in range(2, 7) for a in range(6)]
    for p, a in _capped(cells, lambda c: c[0] + c[1], max_weight):
        reports.append(verify_eta_hook_closed_form(p, a))
    return reports


def suite_weighted(max_weight: int | None = None) -> list[VerificationReport]:
    reports = []
    cells = [(n, q) for n in range(1, 5) for q in range(4)]
    for n, q in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight):
        reports.append(verify_weighted_eta_sum(n, q))
    for n in _capped(range(1, 7), lambda n: n + 3, max_weight):
        reports.append(verify_weighted_corollaries("w121", n))
    for n in _capped(range(1, 5), lambda n: n + 4, max_weight):
        reports.append(verify_weighted_corollaries("w122", n))
    for q in _capped(range(7), lambda q: q + 3, max_weight):
        reports.append(verify_weighted_corollaries("e38", q))
    for q in _capped(range(1, 7), lambda q: q + 3, max_weight):
        reports.append(verify_eta_triple_sum(q))
    return reports


def suite_balance(max_weight: int | None = None) -> list[VerificationReport]:
    cells = [(q, n) for q in range(7) for n in range(11)]
    return [
        verify_suffix_balance(q, n)
        for q, n in _capped(cells, lambda c: c[1], max_weight)
    ]


def suite_quadrature(
    max_weight: int | None = None, tol: float = 1e-6
) -> list[VerificationReport]:
    cells = [(n, q) for n in range(4) for q in range(3)]
    return [
        quadrature_check_integral(n, q, tol)
        for n, q in _capped(cells, lambda c: c[0] + c[1] + 2, max_weight)
    ]


SUITES: dict[str, Callable[..., list[VerificationReport]]] = {
    "tables": suite_tables,
    "rho-sum": suite_rho_sum,
    "rho-eta": suite_rho_eta,
    "hook": suite_hook,
    "weighted": suite_weighted,
    "balance": suite_balance,
    "quadrature": suite_quadrature,
}


def run_suite(name: str, max_weight: int | None = None) -> list[VerificationReport]:
    """Run one named suite, or all of them in a fixed order."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](max_weight))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected all|{'|'.join(SUITES)}")
    return SUITES[name](max_weight)


# --------------------------------------------------------------------------
# Re-verification from a serialized report
# --------------------------------------------------------------------------

def _parse_index(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split(","))


_RERUNNERS: dict[str, Callable[[dict], VerificationReport]] = {
    "rho-eta-connection": lambda p: verify_rho_eta_connection(p["q"], p["r"]),
    "eta-hook-sum": lambda p: verify_eta_hook_sum(p["n"], p["q"]),
    "weighted-eta-sum": lambda p: verify_weighted_eta_sum(p["n"], p["q"]),
    "w121": lambda p: verify_weighted_corollaries("w121", p["n"]),
    "w122": lambda p: verify_weighted_corollaries("w122", p["n"]),
    "e38": lambda p: verify_weighted_corollaries("e38", p["q"]),
    "remark-chain": lambda p: verify_remark_chain(p["n"], p["q"]),
    "rho-sum-fixed-weight": lambda p: verify_rho_sum_fixed_weight(p["m"], p["r"]),
    "rho-sum-general": lambda p: verify_rho_sum_general(p["r"], p["s"], p["q"]),
    "rho-weighted-sum": lambda p: verify_rho_weighted_sum(p["n"], p["q"]),
    "suffix-balance": lambda p: verify_suffix_balance(p["q"], p["n"]),
    "eta-triple-sum": lambda p: verify_eta_triple_sum(p["q"]),
    "eta-hook-closed-form": lambda p: verify_eta_hook_closed_form(p["p"], p["a"]),
    "quadrature-integral": lambda p: quadrature_check_integral(p["n"], p["q"]),
    "table-rho": lambda p: _exact_report(
        "table-rho",
        dict(p),
        rho_exact(_parse_index(p["index"])),
        tables.rho_reference(_parse_index(p["index"])),
    ),
    "table-eta": lambda p: _exact_report(
        "table-eta",
        dict(p),
        eta_symbolic(_parse_index(p["index"])),
        tables.eta_reference(_parse_index(p["index"])),
    ),
}


def rerun(report: VerificationReport) -> VerificationReport:
    """Recompute a report from its own parameters (reports are re-verifiable)."""
    try:
        runner = _RERUNNERS[report.identity_id]
    except KeyError:
        raise ValueError(f"no re-runner for identity {report.identity_id!r}") from None
    return runner(report.parameters)
