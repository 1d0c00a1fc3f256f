"""Small-case scan of the conjecture ``m <= C(n - l1, s)`` for ``n > k^2 - k + 1``.

For each n the exact optimum is compared with ``C(n - l1, s)``; when the
optima can be listed, their kernels are inspected for a common
``l1``-subset. Outcomes are recorded as found.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .bounds import binomial
from .core import FamilyError, as_lspec, is_l_intersecting, is_uniform, kernel
from .familyio import format_family, parse_family
from .solver import (
    DEFAULT_ENUM_CAP,
    DEFAULT_VERTEX_CAP,
    SolverTimeout,
    enumerate_maximum,
    max_family,
)

NOT_ENUMERATED = "not-enumerated"


@dataclass
class ScanRow:
    n: int
    optimum: int | None
    conjectured_bound: int
    bound_holds: bool | None
    further_clause_applies: bool | None = None
    optima_count: int | None = None
    enumeration_complete: bool | None = None
    extremal_kernel_sizes: list[int] | None = None
    conjecture_kernel_holds: str = NOT_ENUMERATED
    witness: str | None = None
    lower_bound: int | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("n", "optimum", "conjectured_bound", "optima_count", "lower_bound"):
            if d[key] is not None:
                d[key] = str(d[key])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRow":
        d = dict(d)
        for key in ("n", "optimum", "conjectured_bound", "optima_count", "lower_bound"):
            if d[key] is not None:
                d[key] = int(d[key])
        return cls(**d)


@dataclass
class ScanReport:
    k: int
    L: list[int]
    n_from: int
    n_to: int
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        opts = [r.optimum for r in self.rows if r.optimum is not None]
        return all(a <= b for a, b in zip(opts, opts[1:]))

    def to_dict(self) -> dict:
        return {
            "k": str(self.k),
            "L": [str(v) for v in self.L],
            "n_from": str(self.n_from),
            "n_to": str(self.n_to),
            "monotone": self.monotone,
            "rows": [r.to_dict() for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        return cls(int(d["k"]), [int(v) for v in d["L"]], int(d["n_from"]), int(d["n_to"]),
                   [ScanRow.from_dict(r) for r in d["rows"]])


def _kernel_verdict(optimum, bound, l1, sizes, complete) -> str:
    # the kernel clause only speaks about families of size exactly C(n - l1, s)
    if optimum > bound:
        return NOT_ENUMERATED
    if optimum < bound:
        return "yes"
    if not complete:
        return NOT_ENUMERATED
    return "yes" if all(sz >= l1 for sz in sizes) else "no"


def scan_conjecture(
    k: int,
    L,
    n_from: int,
    n_to: int,
    *,
    cap: int = DEFAULT_VERTEX_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
    timeout: float | None = None,
    workers: int = 1,
    enumerate_optima: bool = True,
) -> ScanReport:
    """Run the exact solver for every ``n_from <= n <= n_to``.

    ``conjecture_kernel_holds`` is ``"yes"`` when the clause is vacuous
    (optimum below the bound) or every optimum has a kernel of size at
    least ``l1``; ``"no"`` when some optimum of size ``C(n - l1, s)`` has a
    smaller kernel. Per-n failures land in ``error`` and the scan goes on.
    """
    L = as_lspec(L)
    if not L.positive:
        raise FamilyError(f"scan needs positive L, got {L}")
    if L.ls > k - 1:
        raise FamilyError(f"L values must be at most k-1 = {k - 1}, got {L}")
    threshold = k * k - k + 1
    if n_from <= threshold:
        raise FamilyError(f"hypothesis n > k^2-k+1 = {threshold} violated (n_from = {n_from})")
    if n_to < n_from:
        raise FamilyError(f"empty range {n_from}..{n_to}")

    report = ScanReport(k, list(L.values), n_from, n_to)
    for n in range(n_from, n_to + 1):
        bound = binomial(n - L.l1, L.s)
        row = ScanRow(n, None, bound, None)
        report.rows.append(row)
        try:
            cert = max_family(n, k, L, cap=cap, timeout=timeout, workers=workers)
        except SolverTimeout as exc:
            row.error = str(exc)
            row.lower_bound = exc.certificate.optimum
            continue
        except (FamilyError, RuntimeError) as exc:
            row.error = str(exc)
            continue
        assert is_uniform(cert.witness, k) and is_l_intersecting(cert.witness, L)
        row.optimum = cert.optimum
        row.witness = format_family(cert.witness)
        row.bound_holds = cert.optimum <= bound
        row.further_clause_applies = cert.optimum == bound
        if not enumerate_optima:
            continue
        try:
            en = enumerate_maximum(n, k, L, enum_cap, vertex_cap=cap, timeout=timeout)
        except (SolverTimeout, FamilyError, RuntimeError) as exc:
            row.error = f"enumeration failed: {exc}"
            continue
        if en.optimum != cert.optimum:
            raise AssertionError(f"n={n}: enumeration optimum {en.optimum} != {cert.optimum}")
        row.optima_count = len(en.families)
        row.enumeration_complete = en.complete
        row.extremal_kernel_sizes = [len(kernel(f)) for f in en.families]
        row.conjecture_kernel_holds = _kernel_verdict(
            cert.optimum, bound, L.l1, row.extremal_kernel_sizes, en.complete
        )
    return report


def row_witness(row: ScanRow):
    return None if row.witness is None else parse_family(row.witness)
