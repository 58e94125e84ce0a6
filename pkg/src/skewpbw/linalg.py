"""Exact linear algebra over Q and F_p.

The public surface is dense (:class:`ExactMatrix`, :func:`rref`,
:func:`nullspace_basis`, :func:`rank`); internally rows are sparse dicts
``{column: value}`` because the systems built by the center and Ore solvers
are very sparse.  Over F_p elimination is plain Gauss-Jordan.  Over Q rows
are scaled to primitive integer vectors and eliminated fraction-free
(``a*r - b*s`` followed by content removal); fractions only appear in the
final normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .coeff import Field


@dataclass
class ExactMatrix:
    field: Field
    rows: list[list]

    def __post_init__(self):
        self.rows = [[self.field(x) for x in row] for row in self.rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> ExactMatrix:
        m = cls(field, [])
        m.rows = [[field.zero] * ncols for _ in range(nrows)]
        m._ncols = ncols
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> ExactMatrix:
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        if self.rows:
            return len(self.rows[0])
        return getattr(self, "_ncols", 0)

    def apply(self, v: list) -> list:
        F = self.field
        out = []
        for row in self.rows:
            acc = F.zero
            for a, b in zip(row, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def sparse_rows(self) -> list[dict]:
        return [{j: x for j, x in enumerate(row) if x} for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.field == other.field and self.rows == other.rows


# -- sparse kernels ---------------------------------------------------------


def _primitive(row: dict) -> dict:
    """Scale an integer row so its content is 1 and its leading entry is positive."""
    g = reduce(math.gcd, row.values(), 0)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _to_integer_row(row: dict) -> dict:
    den = math.lcm(*(Fraction(v).denominator for v in row.values()))
    return _primitive({k: int(Fraction(v) * den) for k, v in row.items() if v})


def _combine_fp(r: dict, f, s: dict, p: int) -> dict:
    """r - f*s over F_p, dropping zeros."""
    out = dict(r)
    for k, v in s.items():
        x = (out.get(k, 0) - f * v) % p
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def _combine_int(a: int, r: dict, b: int, s: dict) -> dict:
    """a*r - b*s over Z, made primitive."""
    out = {k: a * v for k, v in r.items()}
    for k, v in s.items():
        x = out.get(k, 0) - b * v
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return _primitive(out) if out else out


class Echelon:
    """Incrementally maintained row echelon form over a field.

    Each stored row's pivot is its least column, and no two rows share a
    pivot.  Columns may be any mutually comparable keys.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _prepare(self, vec: dict) -> dict:
        if self.field.p is None:
            vec = {k: v for k, v in vec.items() if v}
            return _to_integer_row(vec) if vec else vec
        p = self.field.p
        return {k: v % p for k, v in vec.items() if v % p}

    def reduce(self, vec: dict) -> dict:
        """Reduce ``vec`` against the stored rows (leading-column elimination)."""
        row = self._prepare(vec)
        p = self.field.p
        piv = self.pivots
        while row:
            c = min(row)
            prow = piv.get(c)
            if prow is None:
                return row
            if p is None:
                row = _combine_int(prow[c], row, row[c], prow)
            else:
                row = _combine_fp(row, row[c], prow, p)
        return row

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True if it enlarged the span."""
        row = self.reduce(vec)
        if not row:
            return False
        c = min(row)
        if self.field.p is not None:
            inv = pow(row[c], -1, self.field.p)
            row = {k: v * inv % self.field.p for k, v in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def reduced_rows(self) -> list[dict]:
        """Fully reduced rows (RREF), pivot entry 1, sorted by pivot."""
        F = self.field
        p = F.p
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            prow = rows[c]
            for d in cols:
                if d >= c:
                    break
                r = rows[d]
                if c in r:
                    if p is None:
                        rows[d] = _combine_int(prow[c], r, r[c], prow)
                    else:
                        rows[d] = _combine_fp(r, r[c], prow, p)
        out = []
        for c in cols:
            r = rows[c]
            if p is None:
                lead = r[c]
                out.append({k: Fraction(v, lead) for k, v in r.items()})
            else:
                inv = pow(r[c], -1, p)
                out.append({k: v * inv % p for k, v in r.items()})
        return out


def sparse_rref(rows, field: Field) -> list[dict]:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.reduced_rows()


def sparse_nullspace(rows, ncols: int, field: Field) -> list[dict]:
    """Basis of {v : row . v = 0 for all rows}, columns 0..ncols-1.

    One vector per free column f, with v[f] = 1 and pivot entries set from the
    RREF; vectors are returned in increasing order of their free column.
    """
    reduced = sparse_rref(rows, field)
    pivot_of = {min(r): r for r in reduced}
    out = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        v = {f: field.one}
        for c, r in pivot_of.items():
            x = r.get(f)
            if x:
                v[c] = field.neg(x)
        out.append(v)
    return out


def sparse_rank(rows, field: Field) -> int:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


# -- dense API ------------------------------------------------------------------


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    F = m.field
    reduced = sparse_rref(m.sparse_rows(), F)
    ncols = m.ncols
    dense = []
    for r in reduced:
        dense.append([r.get(j, F.zero) for j in range(ncols)])
    dense += [[F.zero] * ncols for _ in range(m.nrows - len(reduced))]
    out = ExactMatrix.zeros(F, 0, ncols)
    out.rows = dense
    return out, [min(r) for r in reduced]


def nullspace_basis(m: ExactMatrix) -> list[list]:
    F = m.field
    ncols = m.ncols
    return [[v.get(j, F.zero) for j in range(ncols)] for v in sparse_nullspace(m.sparse_rows(), ncols, F)]


def rank(m: ExactMatrix) -> int:
    return sparse_rank(m.sparse_rows(), m.field)
