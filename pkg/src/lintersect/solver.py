"""Exact maximum L-intersecting k-uniform families via maximum clique search.

The compatibility graph has one vertex per k-subset of [n] (colex order, so
vertex 0 is {1..k}) and an edge between two blocks whose intersection size
lies in L. Cliques are exactly the L-intersecting families.

The search is a bitset branch-and-bound in the MCQ style: candidates are
greedily colored, branched on in descending color order, and a branch is cut
when ``|R| + color <= best``.
"""

from __future__ import annotations

import math
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bounds import YES, best_bound, bound_main, bound_rw
from .core import CapExceededError, Family, FamilyError, LSpec, as_lspec, is_l_intersecting, is_uniform

DEFAULT_VERTEX_CAP = 2**20
DEFAULT_ENUM_CAP = 100_000
_CHECK_EVERY = 256


class SolverTimeout(RuntimeError):
    """Raised on timeout; ``certificate`` holds the best family found so far."""

    def __init__(self, msg: str, certificate: "SolveCertificate"):
        super().__init__(msg)
        self.certificate = certificate


class _Timeout(Exception):
    pass


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class CompatGraph:
    n: int
    k: int
    L: LSpec
    vertices: tuple[int, ...]
    adj: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def family(self, indices) -> Family:
        from .core import BlockSet

        return Family(self.n, [BlockSet(self.vertices[i]) for i in indices])


def _validate(n: int, k: int, L: LSpec) -> None:
    if not 1 <= k <= n:
        raise FamilyError(f"need 1 <= k <= n, got k={k}, n={n}")
    if L.ls > k - 1:
        raise FamilyError(f"L values must be at most k-1 = {k - 1}, got {L}")


def compat_graph(n: int, k: int, L, cap: int = DEFAULT_VERTEX_CAP, deadline: float | None = None) -> CompatGraph:
    L = as_lspec(L)
    _validate(n, k, L)
    nv = math.comb(n, k)
    if nv > cap:
        raise CapExceededError(f"C({n},{k}) = {nv} exceeds vertex cap {cap}")
    combos = np.array(list(combinations(range(n), k)), dtype=np.int64).reshape(nv, k)
    # lexsort keys on the last row first: largest element primary, i.e. colex
    combos = combos[np.lexsort(combos.T)]
    vertices = tuple(sum(1 << int(c) for c in row) for row in combos)
    inc = np.zeros((nv, n), dtype=np.int32)
    inc[np.arange(nv)[:, None], combos] = 1
    allowed = np.array(L.values, dtype=np.int32)
    adj = []
    chunk = max(1, 2**22 // max(nv, 1))
    for start in range(0, nv, chunk):
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        inter = inc[start:start + chunk] @ inc.T
        rows = np.isin(inter, allowed)
        rows[np.arange(rows.shape[0]), np.arange(start, start + rows.shape[0])] = False
        packed = np.packbits(rows, axis=1, bitorder="little")
        adj.extend(int.from_bytes(r.tobytes(), "little") for r in packed)
    return CompatGraph(n, k, L, vertices, tuple(adj))


class _Search:
    """Single-threaded branch-and-bound over a bitset adjacency list."""

    def __init__(self, adj, best=0, deadline=None, target=None, shared=None):
        full = (1 << len(adj)) - 1
        self.adj = adj
        # neighbors removed and the vertex itself removed
        self.nadj = [full ^ a ^ (1 << v) for v, a in enumerate(adj)]
        self.best = best
        self.best_clique: tuple[int, ...] = ()
        self.nodes = 0
        self.deadline = deadline
        self.target = target
        self.shared = shared
        self.enum_target = None
        self.enum_cap = None
        self.found: list[tuple[int, ...]] = []

    def _tick(self):
        self.nodes += 1
        if self.nodes % _CHECK_EVERY == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Timeout
            if self.shared is not None and self.shared.value > self.best:
                self.best = self.shared.value

    def color_sort(self, P: int):
        nadj = self.nadj
        order, colors = [], []
        color = 0
        U = P
        while U:
            color += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= nadj[v]
                U ^= low
                order.append(v)
                colors.append(color)
        return order, colors

    def _improve(self, R):
        self.best = len(R)
        self.best_clique = tuple(R)
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value < self.best:
                    self.shared.value = self.best
        if self.target is not None and self.best >= self.target:
            raise _Stop

    def expand(self, R: list, P: int):
        self._tick()
        adj = self.adj
        order, colors = self.color_sort(P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colors[i] <= self.best:
                return
            v = order[i]
            R.append(v)
            NP = P & adj[v]
            if NP:
                self.expand(R, NP)
            elif len(R) > self.best:
                self._improve(R)
            R.pop()
            P &= ~(1 << v)

    def expand_all(self, R: list, P: int):
        """Collect every clique of size ``enum_target`` extending ``R``."""
        self._tick()
        adj, target = self.adj, self.enum_target
        order, colors = self.color_sort(P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colors[i] < target:
                return
            v = order[i]
            R.append(v)
            NP = P & adj[v]
            if NP:
                self.expand_all(R, NP)
            elif len(R) == target:
                self.found.append(tuple(R))
                if len(self.found) > self.enum_cap:
                    raise _Stop
            R.pop()
            P &= ~(1 << v)


@dataclass
class SolveCertificate:
    n: int
    k: int
    L: LSpec
    optimum: int
    witness: Family
    nodes_explored: int
    upper_bound_used: tuple[str, int] | None
    elapsed: float
    optimal: bool = True
    anchored: bool = True
    workers: int = 1

    def to_dict(self) -> dict:
        from .familyio import format_family

        return {
            "n": str(self.n),
            "k": str(self.k),
            "L": [str(v) for v in self.L],
            "optimum": str(self.optimum),
            "optimal": self.optimal,
            "witness": format_family(self.witness),
            "nodes_explored": str(self.nodes_explored),
            "upper_bound_used": None if self.upper_bound_used is None else {
                "name": self.upper_bound_used[0], "value": str(self.upper_bound_used[1]),
            },
            "elapsed": round(self.elapsed, 6),
            "anchored": self.anchored,
            "workers": self.workers,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SolveCertificate":
        from .familyio import parse_family

        ub = d["upper_bound_used"]
        return cls(
            int(d["n"]), int(d["k"]), LSpec(int(v) for v in d["L"]), int(d["optimum"]),
            parse_family(d["witness"]), int(d["nodes_explored"]),
            None if ub is None else (ub["name"], int(ub["value"])),
            float(d["elapsed"]), d["optimal"], d["anchored"], d["workers"],
        )


# -- process pool plumbing ----------------------------------------------------

_W: dict = {}


def _init_worker(adj, shared, deadline, target):
    _W.update(adj=adj, shared=shared, deadline=deadline, target=target)


def _run_task(task):
    R, P, bound = task
    shared = _W["shared"]
    if bound <= shared.value:
        return 0, (), 0, False
    s = _Search(_W["adj"], best=shared.value, deadline=_W["deadline"],
                target=_W["target"], shared=shared)
    timed_out = False
    try:
        if P:
            s.expand(list(R), P)
        elif len(R) > s.best:
            s._improve(list(R))
    except _Stop:
        pass
    except _Timeout:
        timed_out = True
    return len(s.best_clique), s.best_clique, s.nodes, timed_out


def _root_tasks(search: _Search, R: list[int], P: int):
    order, colors = search.color_sort(P)
    tasks = []
    for i in range(len(order) - 1, -1, -1):
        v = order[i]
        tasks.append((tuple(R) + (v,), P & search.adj[v], len(R) + colors[i]))
        P &= ~(1 << v)
    return tasks


def _parallel(graph: CompatGraph, R, P, workers, deadline, target):
    root = _Search(graph.adj)
    tasks = _root_tasks(root, R, P)
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", 0)
    best, clique, nodes, timed_out = 0, (), 1, False
    with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker,
                             initargs=(graph.adj, shared, deadline, target)) as ex:
        for size, cl, nd, to in ex.map(_run_task, tasks, chunksize=1):
            nodes += nd
            timed_out |= to
            if size > best:
                best, clique = size, cl
    return clique, nodes, timed_out


def _check_sandwich(cert: SolveCertificate) -> None:
    rw = bound_rw(cert.n, cert.L.s)
    if cert.optimum > rw.value:
        raise AssertionError(f"optimum {cert.optimum} exceeds RW bound {rw.value}")
    if cert.L.positive and cert.L.s <= cert.k:
        main = bound_main(cert.n, cert.k, cert.L)
        if main.applicable == YES and cert.optimum > main.value:
            raise AssertionError(f"optimum {cert.optimum} exceeds applicable main bound {main.value}")


# Only unconditional classical theorems may stop the search early; a bound
# whose stated form is wrong would otherwise hide larger families.
STOP_BOUNDS = ("rw", "frankl_furedi", "bose")


def _static_bound(n, k, L):
    if k == n:
        return ("trivial", 1)
    best = None
    for r in best_bound(n, k, L).reports:
        if r.name in STOP_BOUNDS and r.applicable == YES and (best is None or r.value < best[1]):
            best = (r.name, r.value)
    return best


def max_family(
    n: int,
    k: int,
    L,
    *,
    cap: int = DEFAULT_VERTEX_CAP,
    timeout: float | None = None,
    workers: int = 1,
    anchor: bool = True,
    use_bound: bool = True,
) -> SolveCertificate:
    """Exact maximum size of a k-uniform L-intersecting family on [n].

    With ``anchor`` the search is restricted to families containing
    {1..k}; any family can be relabelled to contain it, so the optimum is
    unchanged. With ``use_bound`` the search stops as soon as it meets the
    smallest of the unconditional bounds in ``STOP_BOUNDS``.

    Raises :class:`SolverTimeout` carrying a non-optimal certificate when
    ``timeout`` (seconds) elapses first.
    """
    L = as_lspec(L)
    t0 = time.monotonic()
    deadline = None if timeout is None else t0 + timeout
    ub = _static_bound(n, k, L) if use_bound else None
    target = ub[1] if ub else None

    def certificate(clique, nodes, optimal):
        witness = graph.family(sorted(clique))
        return SolveCertificate(n, k, L, len(clique), witness, nodes, ub,
                                time.monotonic() - t0, optimal, anchor, workers)

    try:
        graph = compat_graph(n, k, L, cap=cap, deadline=deadline)
    except _Timeout:
        graph = None
    if graph is None:
        raise SolverTimeout("timeout while building the compatibility graph",
                            SolveCertificate(n, k, L, 0, Family(n), 0, ub,
                                             time.monotonic() - t0, False, anchor, workers))

    R = [0] if anchor else []
    P = graph.adj[0] if anchor else (1 << len(graph)) - 1
    if workers > 1:
        clique, nodes, timed_out = _parallel(graph, R, P, workers, deadline, target)
        if not clique:
            clique = tuple(R) or (0,)
    else:
        s = _Search(graph.adj, deadline=deadline, target=target)
        timed_out = False
        try:
            if P:
                s.expand(R, P)
            else:
                s._improve(R)
        except _Stop:
            pass
        except _Timeout:
            timed_out = True
        clique, nodes = s.best_clique or tuple(R), s.nodes

    cert = certificate(clique, nodes, not timed_out)
    if timed_out:
        raise SolverTimeout(f"timeout after {timeout}s; best family found has size {cert.optimum}"
                            " (lower bound, not optimal)", cert)
    assert is_uniform(cert.witness, k) and is_l_intersecting(cert.witness, L)
    _check_sandwich(cert)
    return cert


@dataclass
class Enumeration:
    optimum: int
    families: list[Family] = field(default_factory=list)
    complete: bool = True
    timed_out: bool = False
    nodes_explored: int = 0


def enumerate_maximum(
    n: int,
    k: int,
    L,
    cap: int = DEFAULT_ENUM_CAP,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    timeout: float | None = None,
) -> Enumeration:
    """All maximum k-uniform L-intersecting families on [n].

    When more than ``cap`` optima exist, the first ``cap`` are returned and
    the result is flagged incomplete; the same happens on timeout.
    """
    L = as_lspec(L)
    t0 = time.monotonic()
    cert = max_family(n, k, L, cap=vertex_cap, timeout=timeout)
    remaining = None if timeout is None else max(0.0, timeout - (time.monotonic() - t0))
    graph = compat_graph(n, k, L, cap=vertex_cap)
    s = _Search(graph.adj, deadline=None if remaining is None else time.monotonic() + remaining)
    s.enum_target = cert.optimum
    s.enum_cap = cap
    result = Enumeration(cert.optimum)
    try:
        s.expand_all([], (1 << len(graph)) - 1)
    except _Stop:
        result.complete = False
    except _Timeout:
        result.complete = False
        result.timed_out = True
    seen = set()
    for clique in s.found[:cap]:
        key = frozenset(clique)
        if key in seen:
            continue
        seen.add(key)
        fam = graph.family(sorted(clique))
        assert is_uniform(fam, k) and is_l_intersecting(fam, L)
        result.families.append(fam)
    result.nodes_explored = s.nodes
    return result
