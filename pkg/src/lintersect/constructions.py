"""Stars, sunflowers and the line families of Desarguesian projective planes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .core import Family, FamilyError
from .galois import GaloisField, prime_power

MAX_PLANE_ORDER = 16


def star(n: int, k: int, t: int) -> Family:
    """All k-subsets of [n] containing {1, ..., t}, in lexicographic order."""
    if not 0 < t < k:
        raise FamilyError(f"star needs 0 < t < k, got t={t}, k={k}")
    if k > n:
        raise FamilyError(f"star needs k <= n, got k={k}, n={n}")
    core = tuple(range(1, t + 1))
    return Family(n, [core + rest for rest in combinations(range(t + 1, n + 1), k - t)])


def sunflower(n: int, k: int, lam: int, m: int) -> Family:
    """``m`` blocks sharing the core {1..lam}, with consecutive disjoint petals."""
    if not 0 < lam < k:
        raise FamilyError(f"sunflower needs 0 < lambda < k, got lambda={lam}, k={k}")
    if m < 0:
        raise FamilyError(f"m must be nonnegative, got {m}")
    petal = k - lam
    if lam + m * petal > n:
        max_m = (n - lam) // petal
        raise FamilyError(
            f"capacity exceeded: {m} petals of size {petal} need {lam + m * petal} > n = {n}"
            f" points; maximum feasible m = {max_m}"
        )
    core = list(range(1, lam + 1))
    blocks = []
    for i in range(m):
        start = lam + 1 + i * petal
        blocks.append(core + list(range(start, start + petal)))
    return Family(n, blocks)


def _normalized(gf: GaloisField) -> list[tuple[int, int, int]]:
    """Projective triples with first nonzero coordinate 1, lexicographic."""
    return [
        v for v in product(gf.elements, repeat=3)
        if any(v) and next(c for c in v if c) == 1
    ]


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    line_coords: tuple[tuple[int, int, int], ...]
    lines: Family

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return self.q + 1

    def incidences(self) -> list[tuple[int, int]]:
        """All ``(point, line)`` label pairs, both 1-based."""
        return [(p, j) for j, line in enumerate(self.lines, start=1) for p in line]

    def incidence_text(self) -> str:
        return "".join(f"{p} {j}\n" for p, j in self.incidences())

    def point_degrees(self) -> list[int]:
        deg = [0] * self.n
        for line in self.lines:
            for p in line:
                deg[p - 1] += 1
        return deg

    def check(self) -> dict[str, bool]:
        """The four incidence axioms, evaluated directly."""
        n, q = self.n, self.q
        masks = [b.mask for b in self.lines]
        lines_meet_once = all((a & b).bit_count() == 1 for a, b in combinations(masks, 2))
        pair_count = Counter(pair for b in self.lines for pair in combinations(b.elements, 2))
        points_share_one_line = (
            len(pair_count) == n * (n - 1) // 2 and all(c == 1 for c in pair_count.values())
        )
        return {
            "counts": n == q * q + q + 1 and len(masks) == n,
            "line_size": all(len(b) == q + 1 for b in self.lines),
            "lines_meet_once": lines_meet_once,
            "points_share_one_line": points_share_one_line,
            "point_degree": all(d == q + 1 for d in self.point_degrees()),
        }


def projective_plane(q: int) -> ProjectivePlane:
    """PG(2, q) with points labelled 1..q^2+q+1 in normalized lexicographic order."""
    if prime_power(q) is None:
        raise FamilyError(f"q = {q} is not a prime power")
    if q > MAX_PLANE_ORDER:
        raise FamilyError(f"q = {q} outside supported range (prime powers <= {MAX_PLANE_ORDER})")
    gf = GaloisField(q)
    points = _normalized(gf)
    mul, add = gf.mul, gf.add
    blocks = []
    for a, b, c in points:
        blocks.append([
            i for i, (x, y, z) in enumerate(points, start=1)
            if add(add(mul(a, x), mul(b, y)), mul(c, z)) == 0
        ])
    return ProjectivePlane(q, tuple(points), tuple(points), Family(len(points), blocks))
