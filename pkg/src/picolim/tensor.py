"""Presented tensor group of a tuple of normal subgroups.

For normal subgroups N_1..N_n of a finite group G the tensor group T is
generated by symbols a (x) b, one per ordered partition (A, B) of the
index set into nonempty blocks and per pair a in N_A = cap_{i in A} N_i,
b in N_B, subject to four relator families (inverse symmetry of the two
orientations, biadditivity after conjugation, a three-block cyclic
relation, and conjugation of one symbol by another through the boundary).
The boundary sends a (x) b to the commutator [a, b] and makes T -> G a
crossed module under the diagonal conjugation action on symbols.

Relators are instantiated exhaustively over the finite element ranges and
deduplicated by free reduction; identity-element symbols are kept and
collapse through the biadditive family.  kernel_of_boundary enumerates T
by coset enumeration, rewrites the kernel through a Schreier transversal
of the boundary image, and cross-checks against a direct realization of T
whenever the order cap admits one.
"""

from typing import NamedTuple

from .abelian import AbelianInvariants
from .coset import coset_table_from_action, schreier_rewrite_matrix, todd_coxeter
from .errors import BudgetError
from .finite import FiniteGroup, abelian_invariants_of_quotient
from .presentations import Presentation
from .words import Word

SYMBOL_BUDGET = 100_000


class TensorSymbol(NamedTuple):
    """a (x) b at the ordered partition (A, B); index sets are 1-based."""

    A: tuple
    B: tuple
    a: int
    b: int

    @property
    def name(self):
        ab = "".join(str(i) for i in self.A)
        bb = "".join(str(i) for i in self.B)
        return f"t_{ab}_{bb}_{self.a}_{self.b}"


class TensorPresentation:
    def __init__(self, ambient, subgroups, partitions, blocks, symbols,
                 relators, families):
        self.ambient = ambient
        self.subgroups = tuple(subgroups)
        self.partitions = partitions
        self.blocks = blocks
        self.symbols = symbols
        self.symbol_set = set(symbols)
        self.base = Presentation([s.name for s in symbols], relators)
        self.families = families
        self._name_map = None

    @property
    def n(self):
        return len(self.subgroups)

    def symbol(self, A, B, a, b):
        s = TensorSymbol(tuple(A), tuple(B), a, b)
        if s not in self.symbol_set:
            raise KeyError(f"no symbol {s.name}")
        return s

    def by_name(self, name):
        if self._name_map is None:
            self._name_map = {s.name: s for s in self.symbols}
        return self._name_map[name]

    def boundary_of(self, sym):
        return self.ambient.comm(sym.a, sym.b)

    def act(self, g, sym):
        """Diagonal conjugation ^g(a (x) b) = (gag^-1) (x) (gbg^-1)."""
        G = self.ambient
        return self.symbol(sym.A, sym.B, G.conj(g, sym.a), G.conj(g, sym.b))

    def boundary_word_image(self, word):
        """Image of a word in the symbols under the boundary."""
        G = self.ambient
        out = 0
        for name, exp in word.syllables:
            d = self.boundary_of(self.by_name(name))
            step = d if exp > 0 else G.inv(d)
            for _ in range(abs(exp)):
                out = G.mul(out, step)
        return out


def _block_subgroup(subgroups, A):
    acc = subgroups[A[0] - 1]
    for i in A[1:]:
        acc = acc.intersect(subgroups[i - 1])
    return acc


def _ordered_partitions(n):
    """All (A, B), A disjoint from B, both nonempty, union {1..n}."""
    out = []
    for mask in range(1, (1 << n) - 1):
        A = tuple(i + 1 for i in range(n) if mask >> i & 1)
        B = tuple(i + 1 for i in range(n) if not mask >> i & 1)
        out.append((A, B))
    return out


def _three_block_partitions(n):
    """Ordered triples (U, V, W) of disjoint nonempty sets covering {1..n}."""
    out = []
    for mask_u in range(1, 1 << n):
        rest = ((1 << n) - 1) ^ mask_u
        if not rest:
            continue
        sub = rest
        while sub:
            mask_v = sub
            mask_w = rest ^ mask_v
            if mask_w:
                U = tuple(i + 1 for i in range(n) if mask_u >> i & 1)
                V = tuple(i + 1 for i in range(n) if mask_v >> i & 1)
                W = tuple(i + 1 for i in range(n) if mask_w >> i & 1)
                out.append((U, V, W))
            sub = (sub - 1) & rest
    return out


def build_T(t, symbol_budget=SYMBOL_BUDGET):
    """Tensor presentation of a NormalTuple over the finite engine."""
    G = t.ambient
    if not isinstance(G, FiniteGroup):
        raise TypeError("tensor builder needs the finite engine")
    n = t.n
    if n < 2:
        raise ValueError("need at least two subgroups")
    if n > 9:
        raise ValueError("index sets are printed as digit strings; n must be <= 9")
    subs = t.subgroups
    partitions = _ordered_partitions(n)
    blocks = {}
    for parts in partitions:
        for A in parts:
            if A not in blocks:
                blocks[A] = _block_subgroup(subs, A)
    count = sum(blocks[A].order() * blocks[B].order() for A, B in partitions)
    if count > symbol_budget:
        raise BudgetError(
            f"{count} tensor symbols exceed the budget of {symbol_budget}"
        )
    symbols = [
        TensorSymbol(A, B, a, b)
        for A, B in partitions
        for a in blocks[A].members
        for b in blocks[B].members
    ]
    symbol_set = set(symbols)

    relators = []
    seen = set()
    families = {"inverse": 0, "biadditive": 0, "threefold": 0, "conjugation": 0}

    def emit(word, family):
        if word.is_identity() or word.syllables in seen:
            return
        seen.add(word.syllables)
        relators.append(word)
        families[family] += 1

    def w(sym):
        return Word.gen(sym.name)

    # a (x) b equals the inverse of b (x) a at the flipped partition
    for s in symbols:
        mirror = TensorSymbol(s.B, s.A, s.b, s.a)
        emit(w(s) * w(mirror), "inverse")

    # aa' (x) b = (^a a' (x) ^a b)(a (x) b)
    for A, B in partitions:
        na, nb = blocks[A].members, blocks[B].members
        for a in na:
            for a2 in na:
                for b in nb:
                    left = TensorSymbol(A, B, G.mul(a, a2), b)
                    r1 = TensorSymbol(A, B, G.conj(a, a2), G.conj(a, b))
                    r2 = TensorSymbol(A, B, a, b)
                    emit(w(left) * w(r2).inverse() * w(r1).inverse(), "biadditive")

    # three-block cyclic relation over U | V | W = {1..n}
    if n >= 3:
        for U, V, W in _three_block_partitions(n):
            for X in (U, V, W):
                if X not in blocks:
                    blocks[X] = _block_subgroup(subs, X)
            UV = tuple(sorted(U + V))
            WU = tuple(sorted(W + U))
            VW = tuple(sorted(V + W))
            for u in blocks[U].members:
                for v in blocks[V].members:
                    for x in blocks[W].members:
                        s1 = TensorSymbol(
                            UV, W, G.conj(u, G.comm(G.inv(u), v)), G.conj(u, x)
                        )
                        s2 = TensorSymbol(
                            WU, V, G.conj(x, G.comm(G.inv(x), u)), G.conj(x, v)
                        )
                        s3 = TensorSymbol(
                            VW, U, G.conj(v, G.comm(G.inv(v), x)), G.conj(v, u)
                        )
                        assert {s1, s2, s3} <= symbol_set
                        emit(w(s1) * w(s2) * w(s3), "threefold")

    # conjugation of one symbol by another goes through the boundary
    for s1 in symbols:
        g = G.comm(s1.a, s1.b)
        for s2 in symbols:
            s3 = TensorSymbol(s2.A, s2.B, G.conj(g, s2.a), G.conj(g, s2.b))
            emit(w(s1) * w(s2) * w(s1).inverse() * w(s3).inverse(), "conjugation")

    return TensorPresentation(G, subs, partitions, blocks, symbols, relators, families)


def build_E(G, M, N, symbol_budget=SYMBOL_BUDGET):
    """build_T for (G, M, N) plus the square relators x (x) x = 1 for
    nontrivial x in M cap N, at every partition whose two blocks both
    contain x."""
    from .colimit import NormalTuple

    t = NormalTuple(G, (G.full_subgroup(), M, N))
    tp = build_T(t, symbol_budget=symbol_budget)
    inter = M.intersect(N)
    extra = []
    seen = {r.syllables for r in tp.base.relators}
    for x in inter.members:
        if x == 0:
            continue
        for A, B in tp.partitions:
            if tp.blocks[A].contains(x) and tp.blocks[B].contains(x):
                rel = Word.gen(TensorSymbol(A, B, x, x).name)
                if rel.syllables not in seen:
                    seen.add(rel.syllables)
                    extra.append(rel)
    tp.base = Presentation(tp.base.generators, tp.base.relators + tuple(extra))
    tp.families = dict(tp.families, square=len(extra))
    return tp


def boundary_image(tp):
    """Subgroup of the ambient group generated by all boundary values."""
    return tp.ambient.subgroup(tp.boundary_of(s) for s in tp.symbols)


def relator_soundness(tp):
    """Relators that fail to map to the ambient identity (must be none)."""
    return [rel for rel in tp.base.relators if tp.boundary_word_image(rel) != 0]


def crossed_module_check(tp):
    """The compatibility boundary(^g t) = g boundary(t) g^-1, exhaustively."""
    G = tp.ambient
    for g in range(G.n):
        for s in tp.symbols:
            if tp.boundary_of(tp.act(g, s)) != G.conj(g, tp.boundary_of(s)):
                return False, (g, s)
    return True, None


def one_orientation_presentation(tp):
    """Rewrite onto the symbols whose first block contains index 1.

    The inverse-symmetry family makes the flipped-orientation symbols
    redundant; this gives a smaller presentation of the same group (a
    check target, not the primary object).
    """
    keep = [s for s in tp.symbols if 1 in s.A]
    keep_names = {s.name for s in keep}

    def translate(word):
        out = Word()
        for name, exp in word.syllables:
            if name in keep_names:
                out = out * Word(((name, exp),))
            else:
                s = tp.by_name(name)
                mirror = TensorSymbol(s.B, s.A, s.b, s.a)
                out = out * Word.gen(mirror.name, -exp)
        return out

    relators = []
    seen = set()
    for rel in tp.base.relators:
        tw = translate(rel)
        if not tw.is_identity() and tw.syllables not in seen:
            seen.add(tw.syllables)
            relators.append(tw)
    return Presentation([s.name for s in keep], relators)


def kernel_of_boundary(tp, limit=1_000_000, strategy="hlt"):
    """Order and abelian invariants of the kernel of the boundary T -> G.

    The order of T comes from coset enumeration of the presentation; the
    kernel is rewritten through the Schreier transversal of its cosets
    (one coset per element of the boundary image).  When T fits under the
    realization cap the kernel is also built explicitly, its abelianness
    verified, and the invariants cross-checked; otherwise the result is
    the kernel's abelianization with the abelianness left unverified.
    """
    table = todd_coxeter(tp.base, (), limit=limit, strategy=strategy)
    if table.status != "complete":
        raise BudgetError(
            f"coset enumeration exceeded {limit} rows after {table.defined} definitions"
        )
    t_order = table.n_cosets()
    image = boundary_image(tp)
    image_order = image.order()
    if t_order % image_order:
        raise AssertionError("image order does not divide the order of T")
    kernel_order = t_order // image_order

    G = tp.ambient
    elt_pos = {e: i for i, e in enumerate(image.members)}
    assert elt_pos[0] == 0
    rows = []
    for e in image.members:
        row = []
        for s in tp.symbols:
            d = tp.boundary_of(s)
            row.append(elt_pos[G.mul(e, d)])
            row.append(elt_pos[G.mul(e, G.inv(d))])
        rows.append(row)
    pullback = coset_table_from_action([s.name for s in tp.symbols], rows)
    mat, ncols = schreier_rewrite_matrix(pullback, tp.base.relators)
    invariants = AbelianInvariants.from_relation_matrix(mat, ncols)

    kernel_abelian = None
    verified = False
    notes = []
    try:
        T = FiniteGroup.from_coset_table(table)
    except BudgetError:
        T = None
        notes.append("T too large to realize; abelianness of the kernel unverified")
    if T is not None:
        dval = _boundary_values(tp, table)
        members = [j for j in range(T.n) if dval[j] == 0]
        assert len(members) == kernel_order
        ker = T.subgroup(members)
        assert ker.order() == kernel_order
        kernel_abelian = all(
            T.mul(a, b) == T.mul(b, a) for a in ker.members for b in ker.members
        )
        if kernel_abelian:
            direct = abelian_invariants_of_quotient(ker, T.trivial_subgroup())
            assert direct == invariants, (direct, invariants)
            verified = True
        else:
            notes.append("kernel is nonabelian; reporting its abelianization")
    return {
        "t_order": t_order,
        "image_order": image_order,
        "kernel_order": kernel_order,
        "invariants": invariants,
        "kernel_abelian": kernel_abelian,
        "verified": verified,
        "strategy": strategy,
        "notes": notes,
    }


def _boundary_values(tp, table):
    """Boundary image of every element of T, indexed by coset id."""
    G = tp.ambient
    steps = []
    for s in tp.symbols:
        d = tp.boundary_of(s)
        steps.append(d)
        steps.append(G.inv(d))
    dval = [None] * table.n_cosets()
    dval[0] = 0
    queue = [0]
    while queue:
        a = queue.pop()
        for x, step in enumerate(steps):
            b = table.rows[a][x]
            if dval[b] is None:
                dval[b] = G.mul(dval[a], step)
                queue.append(b)
    return dval
