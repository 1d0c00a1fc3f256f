"""Upper bounds on the size of k-uniform L-intersecting families.

Every bound is evaluated in exact integer or rational arithmetic and returned
as a :class:`BoundReport` carrying its hypothesis and whether that hypothesis
is met. Non-integral bounds are floored.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .core import as_lspec

YES, NO, UNKNOWN = "yes", "no", "unknown"


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: int
    applicable: str
    condition: str
    citation: str

    def __post_init__(self):
        if self.value < 0:
            raise BoundError(f"{self.name}: negative bound {self.value}")
        if self.applicable not in (YES, NO, UNKNOWN):
            raise BoundError(f"bad applicability {self.applicable!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["value"] = str(self.value)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        return cls(d["name"], int(d["value"]), d["applicable"], d["condition"], d["citation"])


def binomial(n: int, r: int) -> int:
    """Exact ``C(n, r)``, zero when ``r`` lies outside ``0..n``."""
    if n < 0:
        raise BoundError(f"binomial needs n >= 0, got {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _verdict(ok: bool) -> str:
    return YES if ok else NO


def bound_rw(n: int, s: int) -> BoundReport:
    if not 0 < s <= n:
        raise BoundError(f"Ray-Chaudhuri-Wilson bound needs 0 < s <= n, got s={s}, n={n}")
    return BoundReport(
        "rw", binomial(n, s), YES,
        f"|L| = s = {s}, L nonnegative (no side condition)",
        "Ray-Chaudhuri-Wilson: m <= C(n, s)",
    )


def bound_main(n: int, k: int, L) -> BoundReport:
    """``C(n - l1, s)``, valid once ``n >= C(k^2, l1 + 1) s + l1``."""
    L = as_lspec(L)
    if not L.positive:
        raise BoundError(f"main bound needs positive L, got {L}")
    if L.ls >= k:
        raise BoundError(f"L values must be at most k-1 = {k - 1}, got {L}")
    if not L.s <= k <= n:
        raise BoundError(f"main bound needs s <= k <= n, got s={L.s}, k={k}, n={n}")
    s, l1 = L.s, L.l1
    thresh = binomial(k * k, l1 + 1) * s + l1
    return BoundReport(
        "main", binomial(n - l1, s), _verdict(n >= thresh),
        f"n >= C(k^2, l1+1)*s + l1 = C({k * k},{l1 + 1})*{s} + {l1} = {thresh}",
        "uniform positive-L bound: m <= C(n - l1, s)",
    )


def bound_frankl_furedi(n: int, s: int) -> BoundReport:
    if not 1 <= s < n:
        raise BoundError(f"Frankl-Furedi bound needs 1 <= s < n, got s={s}, n={n}")
    value = sum(binomial(n - 1, i) for i in range(s + 1))
    return BoundReport(
        "frankl_furedi", value, YES,
        f"L a set of s = {s} positive integers",
        "Ramanan / Snevily (Frankl-Furedi conjecture): m <= sum_{i<=s} C(n-1, i)",
    )


def bound_bose(n: int) -> BoundReport:
    if n < 1:
        raise BoundError(f"n must be positive, got {n}")
    return BoundReport(
        "bose", n, YES, "L = {lambda} with lambda > 0",
        "Bose (uniform) / Majumdar (nonuniform): m <= n",
    )


def bound_fisher_uniform(n: int, k: int, lam: int) -> BoundReport:
    if not 0 < lam < k:
        raise BoundError(f"need 0 < lambda < k, got lambda={lam}, k={k}")
    if k > n:
        raise BoundError(f"need k <= n, got k={k}, n={n}")
    thresh = binomial(k * k, lam + 1) + lam
    return BoundReport(
        "fisher_uniform", n - lam, _verdict(n >= thresh),
        f"n >= C(k^2, lambda+1) + lambda = C({k * k},{lam + 1}) + {lam} = {thresh}",
        "uniform Fisher inequality: m <= n - lambda",
    )


def bound_ekr(n: int, k: int, t: int) -> BoundReport:
    if not 0 < t < k:
        raise BoundError(f"EKR bound needs 0 < t < k, got t={t}, k={k}")
    if k > n:
        raise BoundError(f"EKR bound needs k <= n, got k={k}, n={n}")
    thresh = (k - t) * binomial(k * k, t + 1) + t
    return BoundReport(
        "ekr", binomial(n - t, k - t), _verdict(n >= thresh),
        f"n >= (k-t)*C(k^2, t+1) + t = {k - t}*C({k * k},{t + 1}) + {t} = {thresh}"
        f" (the classical threshold n0({k},{t}) is not quantified)",
        "Erdos-Ko-Rado, t-intersecting: m <= C(n-t, k-t)",
    )


def bound_edf(n: int, k: int, L) -> BoundReport:
    L = as_lspec(L)
    if L.ls >= k:
        raise BoundError(f"EDF bound needs every l < k = {k}, got {L}")
    prod = Fraction(1)
    for l in L:
        prod *= Fraction(n - l, k - l)
    return BoundReport(
        "edf", _floor(prod), UNKNOWN,
        f"n > n0({k}, {L}); threshold not quantified",
        "Deza-Erdos-Frankl: m <= prod (n - l_i)/(k - l_i)",
    )


def barg_musin_lhs(n: int, k: int, s: int) -> Fraction:
    """Left side ``s(k^2-(s-1))(2k-n/2) / (n-2(s-1))`` of the hypothesis."""
    den = n - 2 * (s - 1)
    if den <= 0:
        raise BoundError(f"condition denominator nonpositive: n - 2(s-1) = {den}")
    return Fraction(s * (k * k - (s - 1))) * (2 * k - Fraction(n, 2)) / den


def bound_barg_musin(n: int, k: int, L) -> BoundReport:
    L = as_lspec(L)
    s = L.s
    lhs = barg_musin_lhs(n, k, s)
    rhs = sum(L)
    value = Fraction(binomial(n, s)) - binomial(n, s - 1) * Fraction(n - 2 * s + 3, n - s + 2)
    return BoundReport(
        "barg_musin", max(_floor(value), 0), _verdict(lhs <= rhs),
        f"s(k^2-(s-1))(2k-n/2)/(n-2(s-1)) = {lhs} <= sum(L) = {rhs}"
        f" ({'holds' if lhs <= rhs else 'fails'})",
        "Barg-Musin: m <= C(n,s) - C(n,s-1)(n-2s+3)/(n-s+2)",
    )


@dataclass(frozen=True)
class BoundTable:
    reports: tuple[BoundReport, ...]
    errors: tuple[tuple[str, str], ...]

    @property
    def minimum(self) -> BoundReport | None:
        """Smallest applicable report; earliest in evaluation order on ties."""
        best = None
        for r in self.reports:
            if r.applicable == YES and (best is None or r.value < best.value):
                best = r
        return best


def best_bound(n: int, k: int, L) -> BoundTable:
    """Evaluate every bound whose hypotheses make sense for ``(n, k, L)``.

    A bound that raises on these parameters is recorded in ``errors`` rather
    than aborting the table.
    """
    L = as_lspec(L)
    s, l1 = L.s, L.l1
    candidates = []
    if L.positive:
        candidates.append(("main", lambda: bound_main(n, k, L)))
    candidates.append(("rw", lambda: bound_rw(n, s)))
    if L.positive:
        candidates.append(("frankl_furedi", lambda: bound_frankl_furedi(n, s)))
    if s == 1 and l1 > 0:
        candidates.append(("bose", lambda: bound_bose(n)))
        candidates.append(("fisher_uniform", lambda: bound_fisher_uniform(n, k, l1)))
    if L.positive:
        candidates.append(("ekr", lambda: bound_ekr(n, k, l1)))
    candidates.append(("edf", lambda: bound_edf(n, k, L)))
    candidates.append(("barg_musin", lambda: bound_barg_musin(n, k, L)))

    reports, errors = [], []
    for name, fn in candidates:
        try:
            reports.append(fn())
        except BoundError as exc:
            errors.append((name, str(exc)))
    return BoundTable(tuple(reports), tuple(errors))
