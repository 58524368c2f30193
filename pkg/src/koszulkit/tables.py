"""Bigraded Betti tables and their fixed-layout text rendering.

Layout convention: an 11-character right-aligned label field, one space,
then per-column right-aligned entries separated by single spaces.  The
header row carries the homological degrees, the `total:` row sums each
column, and strand rows run contiguously from d = 0 to the largest
nonzero strand with `.` for zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

_LABEL_WIDTH = 11


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers beta_{i,j} keyed by (homological degree, internal degree)."""

    entries: dict
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           {k: v for k, v in self.entries.items() if v})

    @property
    def max_hom_degree(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_strand(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.max_hom_degree + 1)]

    def strand_row(self, d: int) -> list[int]:
        return [self.get(i, i + d) for i in range(self.max_hom_degree + 1)]

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return "<BettiTable %s>" % (self.label or self.entries)


def emit_betti_table(table: BettiTable) -> str:
    ncols = table.max_hom_degree + 1
    rows = [[str(i) for i in range(ncols)], [str(t) for t in table.totals()]]
    labels = ["", "total:"]
    for d in range(table.max_strand + 1):
        rows.append([str(v) if v else "." for v in table.strand_row(d)])
        labels.append("%d:" % d)
    widths = [max(len(r[c]) for r in rows) for c in range(ncols)]
    lines = []
    for label, row in zip(labels, rows):
        cells = " ".join(cell.rjust(w) for cell, w in zip(row, widths))
        lines.append("%s %s" % (label.rjust(_LABEL_WIDTH), cells))
    return "\n".join(lines) + "\n"
