"""Young diagrams, plane partitions, and r-tuples of diagrams.

Boxes are (row, column) pairs, zero-indexed. Entries read outside the
stored support are 0, so every object behaves as if extended by zeros in
all directions. All types are immutable after construction and all
operations are pure; enumerators are restartable and deterministic.
"""

from __future__ import annotations

from typing import Iterator, Sequence


class YoungDiagram:
    """Weakly decreasing finite sequence of positive row lengths."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[int] = ()):
        cleaned = [int(v) for v in rows]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        for a, b in zip(cleaned, cleaned[1:]):
            if a < b:
                raise ValueError(f"row lengths must be weakly decreasing: {list(rows)}")
        if cleaned and cleaned[-1] < 1:
            raise ValueError(f"row lengths must be positive: {list(rows)}")
        self.rows: tuple[int, ...] = tuple(cleaned)

    @property
    def weight(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def row(self, i: int) -> int:
        """Length of row i; 0 outside the diagram."""
        return self.rows[i] if 0 <= i < len(self.rows) else 0

    def column(self, j: int) -> int:
        """Height of column j; 0 outside the diagram."""
        return sum(1 for v in self.rows if v > j)

    def part(self, k: int) -> int:
        """One-based part, 0 beyond the last row."""
        return self.row(k - 1)

    def contains(self, i: int, j: int) -> bool:
        return 0 <= i and 0 <= j < self.row(i)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, length in enumerate(self.rows):
            for j in range(length):
                yield (i, j)

    def arm(self, i: int, j: int) -> int:
        """Signed distance to the right edge: row(i) - j - 1; negative outside."""
        return self.row(i) - j - 1

    def leg(self, i: int, j: int) -> int:
        """Signed distance to the bottom edge: column(j) - i - 1; negative outside."""
        return self.column(j) - i - 1

    def to_list(self) -> list[int]:
        return list(self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, YoungDiagram) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("YoungDiagram", self.rows))

    def __repr__(self) -> str:
        return f"YoungDiagram({list(self.rows)})"


class PlanePartition:
    """2-D array of nonnegative integers with nonincreasing rows and columns.

    Stored dense, with trailing zero rows and columns trimmed to a canonical
    form. Out-of-range reads return 0.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        trimmed: list[tuple[int, ...]] = []
        for raw in rows:
            row = [int(v) for v in raw]
            while row and row[-1] == 0:
                row.pop()
            trimmed.append(tuple(row))
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        for row in trimmed:
            if any(v < 0 for v in row):
                raise ValueError("entries must be nonnegative")
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must be weakly decreasing: {row}")
            if not row:
                raise ValueError("interior all-zero row")
        for upper, lower in zip(trimmed, trimmed[1:]):
            if len(lower) > len(upper):
                raise ValueError("columns must be weakly decreasing")
            if any(a < b for a, b in zip(upper, lower)):
                raise ValueError("columns must be weakly decreasing")
        self.rows: tuple[tuple[int, ...], ...] = tuple(trimmed)

    def entry(self, i: int, j: int) -> int:
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return 0

    @property
    def weight(self) -> int:
        return sum(sum(row) for row in self.rows)

    @property
    def first_entry(self) -> int:
        """The corner entry; bounds every other entry."""
        return self.entry(0, 0)

    def is_empty(self) -> bool:
        return not self.rows

    def support(self) -> Iterator[tuple[int, int]]:
        """Boxes with a positive entry, in row-major order."""
        for i, row in enumerate(self.rows):
            for j in range(len(row)):
                yield (i, j)

    def transpose(self) -> PlanePartition:
        if not self.rows:
            return self
        width = len(self.rows[0])
        out = [[self.entry(i, j) for i in range(len(self.rows))] for j in range(width)]
        return PlanePartition(out)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanePartition) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("PlanePartition", self.rows))

    def __repr__(self) -> str:
        return f"PlanePartition({self.to_lists()})"


class DiagramTuple:
    """Ordered tuple of Young diagrams; indexes a big-torus fixed point."""

    __slots__ = ("diagrams",)

    def __init__(self, diagrams: Sequence[YoungDiagram]):
        if not diagrams:
            raise ValueError("a diagram tuple needs at least one slot")
        self.diagrams: tuple[YoungDiagram, ...] = tuple(diagrams)

    @property
    def rank(self) -> int:
        return len(self.diagrams)

    @property
    def total_weight(self) -> int:
        return sum(d.weight for d in self.diagrams)

    def to_lists(self) -> list[list[int]]:
        return [d.to_list() for d in self.diagrams]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DiagramTuple) and self.diagrams == other.diagrams

    def __hash__(self) -> int:
        return hash(("DiagramTuple", self.diagrams))

    def __repr__(self) -> str:
        return f"DiagramTuple({self.to_lists()})"


def _decreasing_rows(
    bound: tuple[int, ...] | None, head_cap: int, budget: int
) -> Iterator[tuple[int, ...]]:
    # Nonempty weakly decreasing positive rows, pointwise below `bound`
    # (None = no bound), first entry <= head_cap, sum <= budget.
    # Emitted in descending lexicographic order.
    if budget == 0 or head_cap == 0:
        return
    if bound is not None and (not bound or bound[0] == 0):
        return
    top = min(head_cap, budget)
    if bound is not None:
        top = min(top, bound[0])
    tail_bound = bound[1:] if bound is not None else None
    for v in range(top, 0, -1):
        for rest in _decreasing_rows(tail_bound, v, budget - v):
            yield (v,) + rest
        yield (v,)


def enumerate_plane_partitions(
    n: int, max_first_entry: int | None = None
) -> Iterator[PlanePartition]:
    """All plane partitions of weight exactly n, each exactly once.

    With max_first_entry given, only partitions whose corner entry is at
    most that bound are produced. Order is deterministic: descending
    lexicographic on the tuple of rows, so the largest entries come first
    ([[2]], [[1,1]], [[1],[1]] for n = 2).
    """
    if n < 0:
        raise ValueError("weight must be nonnegative")
    cap = n if max_first_entry is None else min(int(max_first_entry), n)

    def rec(prev: tuple[int, ...] | None, remaining: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if remaining == 0:
            yield ()
            return
        head = cap if prev is None else remaining
        for row in _decreasing_rows(prev, head, remaining):
            for tail in rec(row, remaining - sum(row)):
                yield (row,) + tail

    for rows in rec(None, n):
        yield PlanePartition(rows)


def enumerate_young_diagrams(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def rec(head: int, budget: int) -> Iterator[tuple[int, ...]]:
        if budget == 0:
            yield ()
            return
        for v in range(min(head, budget), 0, -1):
            for rest in rec(v, budget - v):
                yield (v,) + rest

    for rows in rec(n if max_part is None else min(max_part, n), n):
        yield YoungDiagram(rows)


def enumerate_diagram_tuples(r: int, n: int) -> Iterator[DiagramTuple]:
    """All r-tuples of Young diagrams with total weight n, each exactly once.

    Deterministic order: weight of the leading diagram descends first, then
    diagrams in descending lexicographic order, then the remaining slots
    recursively.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if n < 0:
        raise ValueError("weight must be nonnegative")
    by_weight = {w: list(enumerate_young_diagrams(w)) for w in range(n + 1)}

    def rec(slots: int, remaining: int) -> Iterator[tuple[YoungDiagram, ...]]:
        if slots == 1:
            for d in by_weight[remaining]:
                yield (d,)
            return
        for w in range(remaining, -1, -1):
            for d in by_weight[w]:
                for rest in rec(slots - 1, remaining - w):
                    yield (d,) + rest

    for diagrams in rec(r, n):
        yield DiagramTuple(diagrams)


def partition_of_tuple(tup: DiagramTuple) -> PlanePartition:
    """Plane partition counting, per box, how many diagrams contain it.

    Membership indicators of Young diagrams are monotone in both directions,
    so the counts always form a valid plane partition; the constructor
    validation makes any violation a loud internal error rather than a
    silent wrong answer.
    """
    depth = max((len(d.rows) for d in tup.diagrams), default=0)
    width = max((d.row(0) for d in tup.diagrams), default=0)
    rows = [
        [sum(1 for d in tup.diagrams if d.contains(i, j)) for j in range(width)]
        for i in range(depth)
    ]
    return PlanePartition(rows)


def diagonal_partitions(
    pi: PlanePartition, i: int, j: int
) -> tuple[YoungDiagram, YoungDiagram, YoungDiagram]:
    """Diagonal slices through (i, j) and through its two neighbors.

    Returns (through, below, right): the entries (pi[i,j], pi[i+1,j+1], ...),
    (pi[i+1,j], pi[i+2,j+1], ...) and (pi[i,j+1], pi[i+1,j+2], ...) with
    trailing zeros trimmed. The box must lie in the support.
    """
    if pi.entry(i, j) <= 0:
        raise ValueError(f"box ({i}, {j}) outside the support")

    def slice_from(i0: int, j0: int) -> YoungDiagram:
        vals = []
        k = 0
        while pi.entry(i0 + k, j0 + k) > 0:
            vals.append(pi.entry(i0 + k, j0 + k))
            k += 1
        return YoungDiagram(vals)

    return slice_from(i, j), slice_from(i + 1, j), slice_from(i, j + 1)


def chi(pi: PlanePartition) -> int:
    """Sum of entry * (entry - right neighbor) over all boxes."""
    return sum(
        pi.entry(i, j) * (pi.entry(i, j) - pi.entry(i, j + 1)) for i, j in pi.support()
    )
