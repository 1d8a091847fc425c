"""Truncated evaluation of the sphere formula pi_{n+1}(S^2) as a quotient
of intersected normal closures in a free group.

Everything runs in the free nilpotent quotient F/gamma_{c+1} of the free
group on y0..y_{n-1}, with the extra letter y_{-1} standing for the word
(y0 ... y_{n-1})^-1.  The numerator is the intersection of the n+1 normal
closures <y_i>^F; the denominator is the normal closure of all left-normed
commutators over tuples of signed letters, of length at most c, in which
every letter occurs.  Results are quotients of the untruncated group: a
nontrivial element found here is genuine, while collapse at class c proves
nothing about higher classes.
"""

from functools import reduce

from .abelian import order_in_quotient
from .nilpotent import (
    free_nilpotent,
    intersect_pc,
    normal_closure_pc,
)
from .words import Word


class WuConfiguration:
    """Rank n and truncation class c, with lazily computed subgroups."""

    def __init__(self, n, class_bound):
        if n < 1:
            raise ValueError("n must be at least 1")
        if class_bound < n:
            raise ValueError(
                "class bound below n leaves the denominator degenerate"
            )
        self.n = n
        self.class_bound = class_bound
        self.names = tuple(f"y{i}" for i in range(n))
        self._group = None
        self._den = None
        self._num = None
        self._closures = None
        self._den_stats = None

    def group(self):
        if self._group is None:
            self._group = free_nilpotent(self.n, self.class_bound, names=self.names)
        return self._group

    def y_minus1_word(self):
        return Word(tuple((nm, 1) for nm in self.names)).inverse()

    def y_minus1(self):
        G = self.group()
        return G.collect(self.y_minus1_word())

    def signed_letters(self):
        """(coverage bit, element) for y_-1, y0, ..., both signs."""
        G = self.group()
        base = [self.y_minus1()] + [G.collect(Word.gen(nm)) for nm in self.names]
        out = []
        for i, elt in enumerate(base):
            out.append((1 << i, elt))
            out.append((1 << i, G.inv(elt)))
        return out

    def closures(self):
        if self._closures is None:
            G = self.group()
            seeds = [self.y_minus1()] + [G.collect(Word.gen(nm)) for nm in self.names]
            self._closures = tuple(normal_closure_pc(G, [s]) for s in seeds)
        return self._closures

    def denominator(self):
        if self._den is None:
            self._den = wu_denominator(self)
        return self._den

    def numerator(self):
        if self._num is None:
            self._num = wu_numerator(self)
        return self._num


def _denominator_generators(cfg, max_length=None):
    """Distinct nontrivial left-normed commutators over covering tuples.

    Returns (generators, stats).  A subtree is abandoned once the partial
    commutator collapses, since extending the identity only yields the
    identity again.
    """
    G = cfg.group()
    signed = cfg.signed_letters()
    full = (1 << (cfg.n + 1)) - 1
    limit = cfg.class_bound if max_length is None else max_length
    gens = []
    seen = set()
    stats = {"nodes": 0, "covering_nontrivial": 0}

    def extend(acc, cover, depth):
        if depth >= limit:
            return
        for bit, elt in signed:
            stats["nodes"] += 1
            nxt = G.comm(acc, elt)
            if not nxt:
                continue
            cov = cover | bit
            if cov == full:
                stats["covering_nontrivial"] += 1
                if nxt not in seen:
                    seen.add(nxt)
                    gens.append(nxt)
            extend(nxt, cov, depth + 1)

    for bit, elt in signed:
        extend(elt, bit, 1)
    return gens, stats


def wu_denominator(cfg, max_length=None):
    """Normal closure of the covering left-normed commutators."""
    gens, stats = _denominator_generators(cfg, max_length=max_length)
    cfg._den_stats = dict(stats, distinct_generators=len(gens))
    return normal_closure_pc(cfg.group(), gens)


def wu_numerator(cfg):
    """Intersection of the n+1 normal closures."""
    return reduce(intersect_pc, cfg.closures())


def wu_group(cfg):
    """Abelian invariants of numerator/denominator at this truncation.

    Asserts the containment of the denominator and the centrality of the
    numerator modulo the denominator; a centrality failure would mean the
    computation is wrong, not the configuration.
    """
    G = cfg.group()
    num = cfg.numerator()
    den = cfg.denominator()
    if not num.contains_subgroup(den):
        raise RuntimeError("denominator escapes the numerator; this is a bug")
    for row in num.igs:
        for g in G.gens():
            if not den.contains(G.comm(row, g)):
                raise RuntimeError(
                    "centrality violation for igs row "
                    f"{G.element_text(row)}; this is a bug"
                )
    from .nilpotent import central_quotient_invariants

    return central_quotient_invariants(num, den)


def wu_report(cfg):
    """JSON-ready summary of the truncated computation."""
    invariants = wu_group(cfg)
    num = cfg.numerator()
    den = cfg.denominator()
    return {
        "n": cfg.n,
        "class": cfg.class_bound,
        "numerator": {"igs_rows": len(num.pivots)},
        "denominator": dict(cfg._den_stats, igs_rows=len(den.pivots)),
        "invariants": {
            "free_rank": invariants.free_rank,
            "torsion": list(invariants.torsion),
        },
        "label": (
            f"truncated at class {cfg.class_bound}; the reported group is a "
            "quotient of the untruncated one"
        ),
    }


def membership_check(w, cfg):
    """Membership of a word in the truncated numerator and denominator,
    with its order in the quotient when it lies in the numerator."""
    G = cfg.group()
    u = G.collect(w)
    den = cfg.denominator()
    num = cfg.numerator()
    in_den = den.contains(u)
    in_num = num.contains(u)
    order = None
    note = None
    if in_num:
        vec = num.coords_of(u)
        rows = [num.coords_of(r) for r in den.igs]
        order = order_in_quotient(vec, rows, len(num.igs))
        if order is None:
            note = f"infinite order at class {cfg.class_bound}"
    else:
        note = "not in the numerator; no order in the quotient"
    return {
        "in_denominator": in_den,
        "in_numerator": in_num,
        "order_in_quotient": order,
        "note": note,
    }


def check_equality_13(n, c):
    """Compare the tuple-generated denominator with the symmetric
    commutator of the n+1 closures; exact igs comparison."""
    from .colimit import NormalTuple, symmetric_commutator

    cfg = WuConfiguration(n, c)
    G = cfg.group()
    den = cfg.denominator()
    sym = symmetric_commutator(NormalTuple(G, cfg.closures()))
    equal = den == sym
    report = {
        "n": n,
        "class": c,
        "equal": equal,
        "denominator_rows": len(den.pivots),
        "symmetric_rows": len(sym.pivots),
        "denominator_only": [
            G.element_text(r) for r in den.igs if not sym.contains(r)
        ],
        "symmetric_only": [
            G.element_text(r) for r in sym.igs if not den.contains(r)
        ],
    }
    return equal, report


def braid_check(c):
    """Pairwise intersection-equals-commutator check for the three relator
    closures of the 4-string braid presentation, truncated at class c."""
    x, y, z = Word.gen("x"), Word.gen("y"), Word.gen("z")
    words = [
        x * y * x * (y * x * y).inverse(),
        y * z * y * (z * y * z).inverse(),
        x * z * (z * x).inverse(),
    ]
    G = free_nilpotent(3, c, names=("x", "y", "z"))
    closures = [normal_closure_pc(G, [G.collect(w)]) for w in words]
    pairs = []
    for i in range(3):
        for j in range(i + 1, 3):
            inter = intersect_pc(closures[i], closures[j])
            comm = closures[i].commutator(closures[j])
            assert inter.contains_subgroup(comm)
            pairs.append({
                "pair": [i + 1, j + 1],
                "equal": inter == comm,
                "intersection_rows": len(inter.pivots),
                "commutator_rows": len(comm.pivots),
            })
    return {
        "class": c,
        "pairs": pairs,
        "all_equal": all(p["equal"] for p in pairs),
    }
