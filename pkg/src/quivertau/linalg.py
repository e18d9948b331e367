"""Exact rational linear algebra over sparse vectors.

Vectors are dicts mapping an arbitrary hashable key (here: paths) to a
nonzero Fraction.  A subspace is kept as a reduced row basis, one row per
pivot key.  Keys carry a total order supplied by the caller so that pivot
selection, and hence the surviving quotient basis, is deterministic.
"""

from __future__ import annotations

from fractions import Fraction


class SparseSpace:
    """Row space in reduced echelon form with deterministic pivot order.

    ``key_order(k)`` must give a total order on keys; elimination always
    pivots on the largest key of a row, so the lexicographically smallest
    keys survive as representatives of the quotient.
    """

    def __init__(self, key_order):
        self.key_order = key_order
        self.rows = {}  # pivot key -> reduced row (dict key->Fraction)

    def _reduce(self, vec):
        """Reduce vec against the current rows; returns a new dict."""
        vec = dict(vec)
        for pivot in sorted(vec, key=self.key_order, reverse=True):
            if pivot not in vec:
                continue
            row = self.rows.get(pivot)
            if row is None:
                continue
            coef = vec[pivot]
            for k, c in row.items():
                new = vec.get(k, Fraction(0)) - coef * c
                if new:
                    vec[k] = new
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        """Insert vec into the space; returns True if the rank grew."""
        vec = self._reduce(vec)
        if not vec:
            return False
        pivot = max(vec, key=self.key_order)
        inv = Fraction(1) / vec[pivot]
        row = {k: c * inv for k, c in vec.items()}
        # keep existing rows reduced against the new pivot
        for p, other in list(self.rows.items()):
            if pivot in other:
                coef = other[pivot]
                for k, c in row.items():
                    new = other.get(k, Fraction(0)) - coef * c
                    if new:
                        other[k] = new
                    else:
                        other.pop(k, None)
        self.rows[pivot] = row
        return True

    def contains(self, vec):
        return not self._reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return set(self.rows)


def span_rank(vectors, key_order):
    """Rank of a list of sparse vectors."""
    space = SparseSpace(key_order)
    for v in vectors:
        space.add(v)
    return space.rank


def subspace_contained(vectors, space):
    """True if every vector reduces to zero against ``space``."""
    return all(space.contains(v) for v in vectors)
