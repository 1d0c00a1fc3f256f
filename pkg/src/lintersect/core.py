"""Set families over [n]: data model, intersection predicates and lemma checks.

Blocks are stored as integer bitmasks with element ``i`` of ``[n]`` at bit
``i - 1``; every public constructor and accessor speaks 1-based elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

HELLY_CAP = 10**7


class FamilyError(ValueError):
    """Invalid family, block or parameter."""


class DuplicateBlockError(FamilyError):
    pass


class CapExceededError(RuntimeError):
    """A search would exceed its configured size cap."""


def _mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class BlockSet:
    """A finite subset of the positive integers, bit-indexed internally."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise FamilyError("negative mask")

    @classmethod
    def of(cls, elements: Iterable[int]) -> "BlockSet":
        mask = 0
        for e in elements:
            e = int(e)
            if e < 1:
                raise FamilyError(f"element {e} is not a positive integer")
            bit = 1 << (e - 1)
            if mask & bit:
                raise FamilyError(f"element {e} repeated")
            mask |= bit
        return cls(mask)

    @property
    def elements(self) -> tuple[int, ...]:
        return _mask_elements(self.mask)

    @property
    def max_element(self) -> int:
        return self.mask.bit_length()

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and e >= 1 and bool(self.mask >> (e - 1) & 1)

    def __and__(self, other: "BlockSet") -> "BlockSet":
        return BlockSet(self.mask & other.mask)

    def __or__(self, other: "BlockSet") -> "BlockSet":
        return BlockSet(self.mask | other.mask)

    def __sub__(self, other: "BlockSet") -> "BlockSet":
        return BlockSet(self.mask & ~other.mask)

    def __le__(self, other: "BlockSet") -> bool:
        return self.mask & ~other.mask == 0

    def issubset(self, other: "BlockSet") -> bool:
        return self <= other

    def sort_key(self) -> tuple[int, ...]:
        return self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __repr__(self) -> str:
        return f"BlockSet({self})"


EMPTY = BlockSet(0)


def _as_block(b) -> BlockSet:
    return b if isinstance(b, BlockSet) else BlockSet.of(b)


class Family:
    """An ordered collection of distinct blocks over the ground set ``[n]``.

    Blocks may be given as :class:`BlockSet` objects or as iterables of
    1-based integers. A repeated block raises :class:`DuplicateBlockError`.
    """

    __slots__ = ("n", "blocks", "_masks")

    def __init__(self, n: int, blocks: Iterable = ()):
        if n < 1:
            raise FamilyError(f"ground set size must be positive, got {n}")
        seen = set()
        out = []
        for b in blocks:
            b = _as_block(b)
            if b.max_element > n:
                raise FamilyError(f"block {b} not contained in [{n}]")
            if b.mask in seen:
                raise DuplicateBlockError(f"duplicate block {b}")
            seen.add(b.mask)
            out.append(b)
        self.n = n
        self.blocks: tuple[BlockSet, ...] = tuple(out)
        self._masks = frozenset(seen)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[BlockSet]:
        return iter(self.blocks)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Family(self.n, self.blocks[i])
        return self.blocks[i]

    def __contains__(self, b) -> bool:
        return _as_block(b).mask in self._masks

    def __eq__(self, other) -> bool:
        """Set equality: same ground set and same blocks, in any order."""
        if not isinstance(other, Family):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        inner = ", ".join(str(b) for b in self.blocks)
        return f"Family(n={self.n}, [{inner}])"

    @property
    def masks(self) -> frozenset[int]:
        return self._masks

    def canonical(self) -> "Family":
        return Family(self.n, sorted(self.blocks, key=BlockSet.sort_key))

    def subfamily(self, indices: Iterable[int]) -> "Family":
        return Family(self.n, [self.blocks[i] for i in indices])

    def union(self) -> BlockSet:
        m = 0
        for b in self.blocks:
            m |= b.mask
        return BlockSet(m)

    def to_lists(self) -> list[list[int]]:
        return [list(b.elements) for b in self.blocks]


class LSpec:
    """Allowed pairwise intersection sizes, strictly increasing."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise FamilyError("L must be nonempty")
        if vals[0] < 0:
            raise FamilyError("L values must be nonnegative")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise FamilyError(f"L must be strictly increasing, got {list(vals)}")
        self.values = vals

    @classmethod
    def of(cls, values: Iterable[int]) -> "LSpec":
        """Build from any iterable, sorting and dropping repeats."""
        return cls(sorted(set(int(v) for v in values)))

    @property
    def s(self) -> int:
        return len(self.values)

    @property
    def l1(self) -> int:
        return self.values[0]

    @property
    def ls(self) -> int:
        return self.values[-1]

    @property
    def positive(self) -> bool:
        return self.values[0] >= 1

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, v) -> bool:
        return v in self.values

    def __eq__(self, other) -> bool:
        return isinstance(other, LSpec) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"LSpec({list(self.values)})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


def as_lspec(L) -> LSpec:
    return L if isinstance(L, LSpec) else LSpec.of(L)


# -- predicates ---------------------------------------------------------------

def is_uniform(F: Family, k: int) -> bool:
    return all(len(b) == k for b in F)


def _check_uniform(F: Family, k: int) -> None:
    for i, b in enumerate(F):
        if len(b) != k:
            raise FamilyError(f"block #{i + 1} {b} has size {len(b)}, expected {k}")


_NUMPY_THRESHOLD = 64


def _incidence(masks: list[int], n: int) -> np.ndarray:
    if n <= 62:
        arr = np.array(masks, dtype=np.int64)
        return ((arr[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int32)
    inc = np.zeros((len(masks), n), dtype=np.int32)
    for i, m in enumerate(masks):
        inc[i, [e - 1 for e in _mask_elements(m)]] = 1
    return inc


def _pair_size_blocks(masks: list[int], n: int):
    """Yield arrays of ``|F_i & F_j|`` for ``i < j``, row-chunked."""
    inc = _incidence(masks, n)
    m = len(masks)
    chunk = max(1, 2**22 // m)
    for start in range(0, m, chunk):
        block = inc[start:start + chunk] @ inc.T
        rows = np.arange(start, min(start + chunk, m))
        upper = np.arange(m)[None, :] > rows[:, None]
        yield block[upper]


def intersection_sizes(F: Family) -> list[int]:
    """Sorted distinct values of ``|F_i & F_j|`` over pairs ``i < j``."""
    if len(F) < 2:
        raise FamilyError("family too small: need at least 2 blocks")
    masks = [b.mask for b in F]
    if len(masks) > _NUMPY_THRESHOLD:
        sizes = set()
        for vals in _pair_size_blocks(masks, F.n):
            sizes.update(np.unique(vals).tolist())
        return sorted(sizes)
    sizes = set()
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            sizes.add((a & b).bit_count())
    return sorted(sizes)


def is_l_intersecting(F: Family, L) -> bool:
    """True when every pairwise intersection size of ``F`` lies in ``L``.

    ``L`` may be an :class:`LSpec` or any iterable of integers (possibly
    empty, in which case only families with fewer than two blocks pass).
    """
    allowed = frozenset(L)
    masks = [b.mask for b in F]
    if len(masks) > _NUMPY_THRESHOLD:
        ok = np.array(sorted(allowed), dtype=np.int32)
        return all(np.isin(vals, ok).all() for vals in _pair_size_blocks(masks, F.n))
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if (a & b).bit_count() not in allowed:
                return False
    return True


def kernel(F: Family) -> BlockSet:
    if len(F) == 0:
        raise FamilyError("kernel undefined for empty family")
    m = F.blocks[0].mask
    for b in F.blocks[1:]:
        m &= b.mask
    return BlockSet(m)


# -- lemma checks -------------------------------------------------------------

def helly_witness(F: Family, k: int, cap: int = HELLY_CAP) -> Family | None:
    """Return a subfamily of at most ``k + 1`` blocks with empty intersection.

    Returns ``None`` when the whole family has a common point. Sizes are
    scanned upward from 2 and, within a size, index combinations in
    lexicographic order; the first hit is returned.
    """
    if len(F) == 0:
        raise FamilyError("helly_witness needs a nonempty family")
    _check_uniform(F, k)
    if kernel(F).mask:
        return None
    top = min(k + 1, len(F))
    if math.comb(len(F), top) > cap:
        raise CapExceededError(
            f"cap exceeded: C({len(F)}, {top}) = {math.comb(len(F), top)} > {cap}"
        )
    masks = [b.mask for b in F]
    full = (1 << F.n) - 1
    for size in range(2, top + 1):
        for idx in combinations(range(len(masks)), size):
            m = full
            for i in idx:
                m &= masks[i]
                if not m:
                    break
            if not m:
                return F.subfamily(idx)
    # unreachable for a k-uniform family with empty kernel
    raise AssertionError("no Helly witness found; lemma violated")


@dataclass(frozen=True)
class UnionCheck:
    union_size: int
    bound: int
    holds: bool


def union_size_check(H: Family, k: int) -> UnionCheck:
    """Compare ``|union H|`` with ``k + (t-1)(k-1)`` for intersecting ``H``."""
    t = len(H)
    if t < 2:
        raise FamilyError(f"need at least 2 blocks, got {t}")
    _check_uniform(H, k)
    for (i, a), (j, b) in combinations(enumerate(H.blocks), 2):
        if not (a.mask & b.mask):
            raise FamilyError(f"blocks #{i + 1} {a} and #{j + 1} {b} are disjoint")
    size = len(H.union())
    bound = k + (t - 1) * (k - 1)
    return UnionCheck(size, bound, size <= bound)


@dataclass(frozen=True)
class TraceCheck:
    trace_size: int
    holds: bool


def trace_bound_check(H: Family, F, l1: int) -> TraceCheck:
    """Check ``|F & union H| >= l1 + 1`` given the hypotheses on ``H`` and ``F``."""
    F = _as_block(F)
    if l1 < 1:
        raise FamilyError("l1 must be positive")
    if len(H) == 0:
        raise FamilyError("H must be nonempty")
    if kernel(H).mask:
        raise FamilyError(f"kernel nonempty: {kernel(H)}")
    if F in H:
        raise FamilyError(f"F = {F} is a member of H")
    for i, h in enumerate(H):
        if len(h & F) < l1:
            raise FamilyError(f"|F & H_{i + 1}| = {len(h & F)} < l1 = {l1} for H_{i + 1} = {h}")
    size = len(H.union() & F)
    return TraceCheck(size, size >= l1 + 1)


def decompose(F: Family, M, l1: int) -> dict[BlockSet, Family]:
    """Split ``F`` into the parts ``F(T) = {B in F : T <= M & B}``.

    ``T`` runs over the ``(l1 + 1)``-subsets of ``M`` in lexicographic order;
    empty parts are left out. Every block must meet ``M`` in more than ``l1``
    points.
    """
    M = _as_block(M)
    for i, b in enumerate(F):
        if len(b & M) <= l1:
            raise FamilyError(
                f"block #{i + 1} {b} has trace {len(b & M)} <= l1 = {l1} on M = {M}"
            )
    parts: dict[BlockSet, Family] = {}
    for T in combinations(M.elements, l1 + 1):
        tb = BlockSet.of(T)
        members = [b for b in F if tb.mask & ~b.mask == 0]
        if members:
            parts[tb] = Family(F.n, members)
    return parts
