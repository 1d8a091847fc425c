"""Explicitly enumerated finite groups and their subgroup calculus.

A FiniteGroup carries elements 0..n-1 with identity 0, full multiplication
data and images of its presentation generators.  Groups are realized from a
completed coset table over the trivial subgroup, so element i is the coset
reached from the identity by the i-th Schreier representative.

FinSubgroup is an element set inside a parent FiniteGroup; the operations
(closure, normal closure, intersection, product, commutator subgroup) are
exact set computations.  Abelian invariants of a quotient A/B go through
the Smith normal form of the multiplication-table relation matrix of A/B.
"""

import random

from .abelian import AbelianInvariants
from .coset import schreier_representatives, todd_coxeter
from .errors import BudgetError

ORDER_CAP = 20_000
_MUL_TABLE_CAP = 1500


class FiniteGroup:
    def __init__(self, perms, gen_images, name=None):
        """perms: one permutation of 0..n-1 per table column (g0, g0^-1, ...)."""
        self.n = len(perms[0]) if perms else 1
        if self.n > ORDER_CAP:
            raise BudgetError(f"group order {self.n} exceeds cap {ORDER_CAP}")
        self.perms = [tuple(p) for p in perms]
        self.gen_images = dict(gen_images)
        self.name = name
        self._rep_cols = self._representative_columns()
        self._mul = None
        if self.n <= _MUL_TABLE_CAP:
            self._mul = [
                [self._trace(i, self._rep_cols[j]) for j in range(self.n)]
                for i in range(self.n)
            ]
        self._inv = [self._find_inverse(i) for i in range(self.n)]
        self._subgroups = None
        self._check_axioms()

    @classmethod
    def from_coset_table(cls, table, name=None):
        if table.status != "complete":
            raise BudgetError("cannot realize a group from an incomplete table")
        ncols = 2 * len(table.generators)
        perms = [[row[x] for row in table.rows] for x in range(ncols)]
        gen_images = {g: table.rows[0][2 * i] for i, g in enumerate(table.generators)}
        return cls(perms, gen_images, name=name)

    @classmethod
    def from_presentation(cls, presentation, limit=1_000_000, name=None):
        table = todd_coxeter(presentation, (), limit=limit)
        if table.status != "complete":
            raise BudgetError(
                f"coset enumeration hit the {limit} row limit; group may be too large"
            )
        return cls.from_coset_table(table, name=name)

    def _representative_columns(self):
        reps = {0: ()}
        order = [0]
        i = 0
        while i < len(order):
            a = order[i]
            i += 1
            for x, perm in enumerate(self.perms):
                b = perm[a]
                if b not in reps:
                    reps[b] = reps[a] + (x,)
                    order.append(b)
        if len(reps) != self.n:
            raise ValueError("generator permutations do not act transitively")
        return [reps[i] for i in range(self.n)]

    def _trace(self, start, cols):
        for x in cols:
            start = self.perms[x][start]
        return start

    def _find_inverse(self, i):
        # follow the representative word of i backwards from the identity
        cols = self._rep_cols[i]
        out = 0
        for x in reversed(cols):
            out = self.perms[x ^ 1][out]
        assert self.mul(i, out) == 0
        return out

    def _check_axioms(self):
        for i in range(self.n):
            if self.mul(0, i) != i or self.mul(i, 0) != i:
                raise ValueError("identity axiom fails")
            if self.mul(i, self._inv[i]) != 0 or self.mul(self._inv[i], i) != 0:
                raise ValueError("inverse axiom fails")
        rng = random.Random(7)
        for _ in range(64):
            a = rng.randrange(self.n)
            b = rng.randrange(self.n)
            c = rng.randrange(self.n)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError("associativity spot check fails")

    # -- element arithmetic -------------------------------------------------

    def mul(self, i, j):
        if self._mul is not None:
            return self._mul[i][j]
        return self._trace(i, self._rep_cols[j])

    def inv(self, i):
        return self._inv[i]

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self._inv[g])

    def comm(self, x, y):
        """x y x^-1 y^-1."""
        return self.mul(self.mul(x, y), self.mul(self._inv[x], self._inv[y]))

    def element_order(self, i):
        k = 1
        j = i
        while j != 0:
            j = self.mul(j, i)
            k += 1
        return k

    def word_image(self, word):
        out = 0
        for name, exp in word.syllables:
            g = self.gen_images[name]
            step = g if exp > 0 else self._inv[g]
            for _ in range(abs(exp)):
                out = self.mul(out, step)
        return out

    def is_abelian(self):
        gens = list(self.gen_images.values())
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def abelian_invariants(self):
        """Invariants of G/[G,G]."""
        return abelian_invariants_of_quotient(
            self.full_subgroup(), self.derived_subgroup()
        )

    # -- distinguished subgroups -------------------------------------------

    def trivial_subgroup(self):
        return FinSubgroup(self, (0,))

    def full_subgroup(self):
        return FinSubgroup(self, range(self.n))

    def center(self):
        members = [
            x
            for x in range(self.n)
            if all(self.mul(x, g) == self.mul(g, x) for g in self.gen_images.values())
        ]
        return FinSubgroup(self, members)

    def derived_subgroup(self):
        return self.full_subgroup().commutator(self.full_subgroup())

    def subgroup(self, elements):
        """Closure of the given element ids."""
        return FinSubgroup(self, _closure(self, set(elements) | {0}))

    def normal_closure(self, elements):
        seeds = set(elements) | {0}
        conj = {self.conj(g, s) for s in seeds for g in range(self.n)}
        return FinSubgroup(self, _closure(self, conj))

    def all_subgroups(self):
        """Every subgroup, as FinSubgroups sorted by (order, element tuple)."""
        if self._subgroups is None:
            found = {frozenset([0])}
            frontier = [frozenset([0])]
            while frontier:
                nxt = []
                for h in frontier:
                    for g in range(1, self.n):
                        if g in h:
                            continue
                        grown = frozenset(_closure(self, set(h) | {g}))
                        if grown not in found:
                            found.add(grown)
                            nxt.append(grown)
                frontier = nxt
            self._subgroups = sorted(
                (FinSubgroup(self, fs) for fs in found),
                key=lambda s: (s.order(), s.members),
            )
        return self._subgroups

    def normal_subgroups(self):
        return [h for h in self.all_subgroups() if h.is_normal()]

    def quotient(self, normal):
        """Quotient group with its projection list (element -> coset id)."""
        if normal.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not normal.is_normal():
            raise ValueError("quotient by a non-normal subgroup")
        nset = normal.member_set
        coset_rep = {}
        reps = []
        for x in range(self.n):
            r = min(self.mul(x, h) for h in nset)
            if r == x:
                coset_rep[x] = len(reps)
                reps.append(x)
        proj = [coset_rep[min(self.mul(x, h) for h in nset)] for x in range(self.n)]
        perms = []
        for perm in self.perms:
            perms.append([proj[perm[r]] for r in reps])
        gen_images = {g: proj[i] for g, i in self.gen_images.items()}
        q = FiniteGroup(perms, gen_images, name=None)
        return q, proj

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.n}>"


def _closure(group, seed):
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (group.mul(a, b), group.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return members


class FinSubgroup:
    """A subgroup of a FiniteGroup, stored as its full element set."""

    def __init__(self, parent, members):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.member_set = frozenset(self.members)
        if 0 not in self.member_set:
            raise ValueError("subgroup must contain the identity")
        for a in self.members:
            for b in self.members:
                if parent.mul(a, b) not in self.member_set:
                    raise ValueError("element set is not closed under multiplication")

    def order(self):
        return len(self.members)

    def contains(self, x):
        return x in self.member_set

    def issubset(self, other):
        self._same_parent(other)
        return self.member_set <= other.member_set

    def contains_subgroup(self, other):
        self._same_parent(other)
        return other.member_set <= self.member_set

    def _same_parent(self, other):
        if self.parent is not other.parent:
            raise ValueError("subgroups live in different groups")

    def is_normal(self):
        g = self.parent
        return all(
            g.conj(a, x) in self.member_set
            for a in g.gen_images.values()
            for x in self.members
        )

    def intersect(self, other):
        self._same_parent(other)
        return FinSubgroup(self.parent, self.member_set & other.member_set)

    def product(self, other):
        """Set product HK; requires at least one factor normal."""
        self._same_parent(other)
        if not (self.is_normal() or other.is_normal()):
            raise ValueError("product requires one normal factor")
        g = self.parent
        out = {g.mul(a, b) for a in self.members for b in other.members}
        return FinSubgroup(g, out)

    def commutator(self, other):
        """[H, K]: closure of all [h, k], normalized inside <H, K>."""
        self._same_parent(other)
        g = self.parent
        comms = {g.comm(a, b) for a in self.members for b in other.members}
        members = _closure(g, comms)
        # normalize within the join until stable
        join = _closure(g, self.member_set | other.member_set)
        while True:
            extra = {
                g.conj(j, x) for j in join for x in members if g.conj(j, x) not in members
            }
            if not extra:
                break
            members = _closure(g, members | extra)
        return FinSubgroup(g, members)

    def conjugate_by(self, g_elt):
        g = self.parent
        return FinSubgroup(g, {g.conj(g_elt, x) for x in self.members})

    def __eq__(self, other):
        return (
            isinstance(other, FinSubgroup)
            and self.parent is other.parent
            and self.member_set == other.member_set
        )

    def __hash__(self):
        return hash((id(self.parent), self.member_set))

    def __repr__(self):
        return f"<subgroup of order {self.order()}>"


def abelian_invariants_of_quotient(a, b):
    """Elementary divisors of A/B (B normal in A, quotient abelian).

    A greedy generating set of A/B keeps the relation matrix narrow; the
    rows are the Cayley-graph relations vec(q) + e_i - vec(q * gen_i) over
    a spanning tree of coset representatives.
    """
    a._same_parent(b)
    if not b.issubset(a):
        raise ValueError("B is not contained in A")
    g = a.parent
    for x in a.members:
        for y in b.members:
            if g.conj(x, y) not in b.member_set:
                raise ValueError("B is not normal in A")
    for x in a.members:
        for y in a.members:
            if g.comm(x, y) not in b.member_set:
                raise ValueError("A/B is not abelian")
    # enumerate the cosets of B in A
    bset = b.member_set
    coset_id = {}
    reps = []
    for x in a.members:
        r = min(g.mul(x, h) for h in bset)
        if r not in coset_id:
            coset_id[r] = len(reps)
            reps.append(r)
    k = len(reps)
    if k == 1:
        return AbelianInvariants(0, ())
    proj = [0] * a.parent.n
    for x in a.members:
        proj[x] = coset_id[min(g.mul(x, h) for h in bset)]

    def q_mul(i, j):
        return proj[g.mul(reps[i], reps[j])]

    gens = []
    closed = {0}
    for i in range(1, k):
        if i in closed:
            continue
        gens.append(i)
        grown = set(closed)
        p = i
        while p not in closed:
            grown.update(q_mul(c, p) for c in closed)
            p = q_mul(p, i)
        closed = grown
    m = len(gens)
    vec = {0: (0,) * m}
    rows = []
    queue = [0]
    while queue:
        q = queue.pop()
        for pos, i in enumerate(gens):
            s = q_mul(q, i)
            step = tuple(
                e + 1 if t == pos else e for t, e in enumerate(vec[q])
            )
            if s not in vec:
                vec[s] = step
                queue.append(s)
            else:
                row = [x - y for x, y in zip(step, vec[s])]
                if any(row):
                    rows.append(row)
    assert len(vec) == k, "generators fail to span the quotient"
    inv = AbelianInvariants.from_relation_matrix(rows, m)
    assert inv.order() == k, "quotient order mismatch after Smith reduction"
    return inv


def realize(presentation, limit=1_000_000, name=None):
    """Enumerate the presented group and wrap it as a FiniteGroup."""
    return FiniteGroup.from_presentation(presentation, limit=limit, name=name)
