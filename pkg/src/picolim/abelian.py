"""Integer matrix normal forms and abelian invariants.

Everything here is exact: plain Python ints, no floats.  Pivots are chosen
by minimal absolute value to keep entries small.  Row vectors are lists of
ints; matrices are lists of rows of equal length.
"""

from fractions import Fraction
from math import gcd


class AbelianInvariants:
    """free_rank copies of Z plus cyclic torsion in a divisibility chain."""

    def __init__(self, free_rank, torsion):
        torsion = tuple(int(d) for d in torsion)
        for d in torsion:
            if d < 2:
                raise ValueError("torsion entries must be at least 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError("torsion must form a divisibility chain")
        self.free_rank = free_rank
        self.torsion = torsion

    @classmethod
    def from_relation_matrix(cls, rows, ncols):
        """Invariants of Z^ncols modulo the row lattice."""
        divisors = smith_normal_form(rows, ncols)
        torsion = tuple(d for d in divisors if d > 1)
        return cls(ncols - len(divisors), torsion)

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __eq__(self, other):
        return (
            isinstance(other, AbelianInvariants)
            and self.free_rank == other.free_rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianInvariants(free_rank={self.free_rank}, torsion={self.torsion})"


def hermite_reduce(rows, ncols):
    """Row-style echelon basis of the lattice spanned by `rows`.

    Returns rows sorted by pivot column, pivots positive, entries above each
    pivot reduced into [0, pivot).  This is the canonical (row) Hermite form
    of the lattice.
    """
    basis = {}  # pivot column -> row

    def insert(vec):
        vec = list(vec)
        while True:
            col = next((j for j, v in enumerate(vec) if v), None)
            if col is None:
                return
            if col not in basis:
                if vec[col] < 0:
                    vec = [-v for v in vec]
                basis[col] = vec
                return
            row = basis[col]
            a, b = row[col], vec[col]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
                continue
            # replace the pivot row by the gcd combination, recycle the rest
            g = gcd(a, b)
            x, y = _bezout(a, b, g)
            comb = [x * r + y * v for r, v in zip(row, vec)]
            vec = [v - (b // g) * c for v, c in zip(vec, comb)]
            leftover = [r - (a // g) * c for r, c in zip(row, comb)]
            basis[col] = comb
            insert(leftover)

    for vec in rows:
        if len(vec) != ncols:
            raise ValueError("ragged matrix")
        insert(vec)

    cols = sorted(basis)
    # reduce above-pivot entries
    for i, ci in enumerate(cols):
        for cj in cols[i + 1 :]:
            row = basis[ci]
            piv = basis[cj][cj]
            q = row[cj] // piv
            if q:
                basis[ci] = [v - q * r for v, r in zip(row, basis[cj])]
    return [basis[c] for c in cols]


def _bezout(a, b, g):
    """x, y with x*a + y*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r == g:
        return old_s, old_t
    return -old_s, -old_t


def smith_normal_form(rows, ncols):
    """Nonzero diagonal of the Smith form (d1 | d2 | ...), all positive.

    Rows are reduced to a Hermite basis first so the core elimination works
    on at most ncols rows.
    """
    m = [list(r) for r in hermite_reduce(rows, ncols)]
    if not m:
        return []
    nrows = len(m)
    divisors = []
    top = 0
    while top < nrows and top < ncols:
        # minimal absolute value nonzero entry in the remaining block
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[bj], row[top] = row[top], row[bj]
        piv = m[top][top]
        dirty = False
        for i in range(top + 1, nrows):
            if m[i][top]:
                q = m[i][top] // piv
                m[i] = [v - q * p for v, p in zip(m[i], m[top])]
                if m[i][top]:
                    dirty = True
        for j in range(top + 1, ncols):
            if m[top][j]:
                q = m[top][j] // piv
                for row in m:
                    row[j] -= q * row[top]
                if m[top][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry, else absorb and retry
        absorbed = False
        for i in range(top + 1, nrows):
            if any(v % piv for v in m[i][top + 1 :]):
                m[top] = [a + b for a, b in zip(m[top], m[i])]
                absorbed = True
                break
        if absorbed:
            continue
        divisors.append(abs(piv))
        top += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(divisors) - 1):
            a, b = divisors[i], divisors[i + 1]
            if b % a:
                g = gcd(a, b)
                divisors[i], divisors[i + 1] = g, a * b // g
                changed = True
    return divisors


def in_lattice(vec, basis):
    """Membership of an integer vector in a Hermite-basis lattice."""
    vec = list(vec)
    for row in basis:
        col = next(j for j, v in enumerate(row) if v)
        if vec[col]:
            if vec[col] % row[col]:
                return False
            q = vec[col] // row[col]
            vec = [v - q * r for v, r in zip(vec, row)]
    return not any(vec)


def order_in_quotient(vec, rows, ncols):
    """Order of vec + L in Z^ncols / L, where L is spanned by `rows`.

    Returns a positive int, or None for infinite order.
    """
    basis = hermite_reduce(rows, ncols)
    if not any(vec):
        return 1
    # solve k * vec in L over Q: project through the echelon basis
    residual = [Fraction(v) for v in vec]
    denom = 1
    for row in basis:
        col = next(j for j, v in enumerate(row) if v)
        if residual[col]:
            q = residual[col] / row[col]
            denom = denom * q.denominator // gcd(denom, q.denominator)
            residual = [v - q * r for v, r in zip(residual, row)]
    if any(residual):
        return None
    k = denom
    assert in_lattice([k * v for v in vec], basis)
    return k
