"""Text format for families.

::

    # optional comments
    n=7
    1,2,3
    1,4,5

The first non-comment line fixes ``n``; each further nonempty line is one
block as comma-separated ascending integers in ``1..n``.
"""

from __future__ import annotations

from pathlib import Path

from .core import BlockSet, Family, FamilyError


class FamilyFormatError(FamilyError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_family(text: str) -> Family:
    n = None
    blocks: list[BlockSet] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, eq, val = line.partition("=")
            if key.strip() != "n" or not eq:
                raise FamilyFormatError(lineno, f"expected 'n=<integer>', got {line!r}")
            try:
                n = int(val.strip())
            except ValueError:
                raise FamilyFormatError(lineno, f"bad ground set size {val.strip()!r}") from None
            if n < 1:
                raise FamilyFormatError(lineno, f"ground set size must be positive, got {n}")
            continue
        try:
            elems = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise FamilyFormatError(lineno, f"bad block {line!r}") from None
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise FamilyFormatError(lineno, f"block elements must be strictly ascending: {line!r}")
        if elems[0] < 1 or elems[-1] > n:
            raise FamilyFormatError(lineno, f"block {line!r} not contained in [{n}]")
        b = BlockSet.of(elems)
        if b.mask in seen:
            raise FamilyFormatError(
                lineno, f"duplicate block {b} (first seen on line {seen[b.mask]})"
            )
        seen[b.mask] = lineno
        blocks.append(b)
    if n is None:
        raise FamilyFormatError(1, "missing 'n=<integer>' header")
    return Family(n, blocks)


def format_family(F: Family, comments: list[str] | None = None) -> str:
    """Canonical text: blocks sorted lexicographically."""
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"n={F.n}")
    for b in sorted(F.blocks, key=BlockSet.sort_key):
        lines.append(",".join(map(str, b.elements)))
    return "\n".join(lines) + "\n"


def read_family(path) -> Family:
    return parse_family(Path(path).read_text(encoding="utf-8"))


def write_family(F: Family, path, comments: list[str] | None = None) -> None:
    Path(path).write_text(format_family(F, comments), encoding="utf-8")
