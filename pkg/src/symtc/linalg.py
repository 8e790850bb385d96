"""Sparse exact linear algebra over Q and Z2.

Vectors are dicts ``column -> nonzero coefficient``.  The workhorse is an
incremental echelon form with deterministic pivoting (smallest column), plus
reduced-row-echelon finalization, nullspace extraction and a column-connected
component splitter used to keep row reduction local.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Row = Dict[int, object]


def row_scale(field, row: Row, factor) -> Row:
    if field.is_zero(factor):
        return {}
    return {c: field.mul(v, factor) for c, v in row.items()}


def row_add_scaled(field, target: Row, source: Row, factor) -> None:
    """target += factor * source, dropping zeros in place."""
    if field.is_zero(factor):
        return
    for c, v in source.items():
        new = field.add(target.get(c, field.zero), field.mul(v, factor))
        if field.is_zero(new):
            target.pop(c, None)
        else:
            target[c] = new


class Echelon:
    """Incrementally built echelon basis of a subspace of F^columns.

    Rows are normalized to leading coefficient 1 at their pivot (the smallest
    column in the row).  Insertion order does not affect the resulting row
    space; the reduced form produced by :meth:`rref` is canonical.
    """

    def __init__(self, field):
        self.field = field
        self.pivots: Dict[int, Row] = {}
        self._reduced = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        """Return ``row`` reduced against the current basis (a fresh dict)."""
        field = self.field
        row = dict(row)
        while row:
            lead = min(row)
            pivot_row = self.pivots.get(lead)
            if pivot_row is None:
                return row
            row_add_scaled(field, row, pivot_row, field.neg(row[lead]))
        return row

    def insert(self, row: Row) -> Optional[Row]:
        """Reduce ``row`` and adjoin it if independent.

        Returns the stored normalized row, or None if ``row`` was dependent.
        """
        row = self.reduce(row)
        if not row:
            return None
        lead = min(row)
        inv = self.field.inv(row[lead])
        row = row_scale(self.field, row, inv)
        self.pivots[lead] = row
        self._reduced = False
        return row

    def extend(self, rows: Iterable[Row]) -> None:
        for row in rows:
            self.insert(row)

    def rref(self) -> Dict[int, Row]:
        """Back-substitute so every stored row is zero on other pivots."""
        if not self._reduced:
            field = self.field
            for lead in sorted(self.pivots, reverse=True):
                row = self.pivots[lead]
                for c in [c for c in row if c != lead and c in self.pivots]:
                    row_add_scaled(field, row, self.pivots[c], field.neg(row[c]))
            self._reduced = True
        return self.pivots

    def rows(self) -> List[Row]:
        return [self.pivots[lead] for lead in sorted(self.pivots)]

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def nullspace(rows: Sequence[Row], field) -> List[Dict[int, object]]:
    """Kernel of x -> sum_i x_i * rows[i], as sparse vectors over row indices.

    Row coordinates are kept in an augmented block while the main block is
    echelonized; rows that reduce to zero yield kernel vectors.
    """
    ech = Echelon(field)
    kernel: List[Dict[int, object]] = []
    for i, row in enumerate(rows):
        work = dict(row)
        tag: Dict[int, object] = {i: field.one}
        while work:
            lead = min(work)
            pivot = ech.pivots.get(lead)
            if pivot is None:
                break
            factor = field.neg(work[lead])
            row_add_scaled(field, work, pivot, factor)
            row_add_scaled(field, tag, pivot.tag, factor)  # type: ignore[attr-defined]
        if not work:
            kernel.append(tag)
            continue
        inv = field.inv(work[min(work)])
        stored = row_scale(field, work, inv)
        stored_tag = row_scale(field, tag, inv)
        stored = _TaggedRow(stored, stored_tag)
        ech.pivots[min(stored)] = stored
    return kernel


class _TaggedRow(dict):
    """A sparse row carrying the combination of inputs that produced it."""

    def __init__(self, data: Row, tag: Row):
        super().__init__(data)
        self.tag = tag


def split_components(rows: Sequence[Row]) -> List[List[int]]:
    """Group row indices whose column supports are transitively linked.

    Rows in different groups share no columns, so they can be reduced
    independently.  Returns groups sorted by their smallest column.
    """
    parent: Dict[int, int] = {}

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for row in rows:
        cols = list(row)
        for c in cols:
            parent.setdefault(c, c)
        for c in cols[1:]:
            union(cols[0], c)

    groups: Dict[int, List[int]] = {}
    for i, row in enumerate(rows):
        if not row:
            continue
        root = find(min(row))
        groups.setdefault(root, []).append(i)
    return [groups[r] for r in sorted(groups)]
