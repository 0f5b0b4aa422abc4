"""
Exact sparse linear algebra over Q(q,t).

Rows are dicts column -> QtRational.  Elimination keeps a reduced row echelon
form incrementally, which is all the eigen-solver and the basis expansions need.
"""

from __future__ import annotations

from .qtfield import ONE, ZERO


class Echelon:
    """Incremental reduced row echelon form of a set of sparse rows."""

    def __init__(self, ncols, col_rank=None):
        self.ncols = ncols
        self.rows = {}            # pivot column -> row (pivot entry 1)
        # pivot choice: lowest rank value among the row's columns
        self.col_rank = col_rank or (lambda c: c)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v}
        for p in [c for c in row if c in self.rows]:
            v = row.get(p)
            if not v:
                continue
            for c, w in self.rows[p].items():
                nv = row.get(c, ZERO) - v * w
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row):
        """Insert a row; returns True if it increased the rank."""
        row = self.reduce(row)
        while row and any(c in self.rows for c in row):
            row = self.reduce(row)
        if not row:
            return False
        p = min(row, key=self.col_rank)
        inv = ONE / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q_, r in self.rows.items():
            v = r.get(p)
            if v:
                for c, w in row.items():
                    nv = r.get(c, ZERO) - v * w
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        self.rows[p] = row
        return True

    def null_vector(self, free):
        """Kernel vector with the given free column set to 1 (others free = 0)."""
        vec = {free: ONE}
        for p, r in self.rows.items():
            v = r.get(free)
            if v:
                vec[p] = -v
        return vec

    def free_columns(self):
        return [c for c in range(self.ncols) if c not in self.rows]


def solve_expansion(target, basis_vectors, col_rank=None):
    """Coefficients x with sum_k x_k basis_vectors[k] = target.

    Vectors are dicts key -> scalar over a common key set.  Raises ValueError
    when target is not in the span.
    """
    keys = sorted({k for v in basis_vectors for k in v} | set(target))
    index = {k: j for j, k in enumerate(keys)}
    m = len(basis_vectors)
    # augmented system: one row per key, columns = basis index, plus rhs column m
    ech = Echelon(m + 1, col_rank=lambda c: c)
    for k in keys:
        row = {}
        for j, v in enumerate(basis_vectors):
            c = v.get(k)
            if c:
                row[j] = c
        rhs = target.get(k)
        if rhs:
            row[m] = -rhs
        if row:
            ech.add(row)
    if m in ech.rows:
        raise ValueError("target is not in the span of the basis")
    x = [ZERO] * m
    for p, r in ech.rows.items():
        if any(c != m and c != p for c in r):
            raise ValueError("basis vectors are linearly dependent")
        v = r.get(m)
        x[p] = -v if v else ZERO
    if len(ech.rows) != m:
        raise ValueError("basis vectors are linearly dependent")
    return x
