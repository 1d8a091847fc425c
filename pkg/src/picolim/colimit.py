"""Homotopy invariants of a union of aspherical spaces glued along
normal subgroups N_1,...,N_n of a common fundamental group.

The formulas work over either engine: finite permutation groups or free
nilpotent pc groups.  Both subgroup types expose the same interface
(intersect, product, commutator, is_normal, containment), so everything
here is engine-agnostic.

The n-th homotopy group of the union is (cap N_i) / (symmetric commutator)
provided every (n-1)-subtuple satisfies the connectivity condition: for
all index sets I (|I| >= 2) and J (|J| >= 1),

    (cap_{i in I} N_i) (prod_{j in J} N_j) = cap_{i in I} (N_i prod_{j in J} N_j).

The check is mandatory; on failure the computation refuses with the
offending subtuple and witness rather than report a number the formula
does not cover.
"""

from functools import reduce
from itertools import combinations

from .errors import ConnectivityError
from .words import render_word
from .finite import FiniteGroup, FinSubgroup, abelian_invariants_of_quotient
from .nilpotent import (
    PcGroup,
    PcSubgroup,
    central_quotient_invariants,
    commutator_subgroup_pc,
    free_nilpotent,
    full_subgroup_pc,
    intersect_pc,
    normal_closure_pc,
)


class NormalTuple:
    """An ambient group with an ordered tuple of normal subgroups."""

    def __init__(self, ambient, subgroups):
        subgroups = tuple(subgroups)
        if not subgroups:
            raise ValueError("need at least one subgroup")
        for idx, s in enumerate(subgroups):
            if getattr(s, "parent", None) is not ambient:
                raise ValueError(f"subgroup {idx + 1} does not live in the ambient group")
            if not s.is_normal():
                raise ValueError(f"subgroup {idx + 1} is not normal in the ambient group")
        self.ambient = ambient
        self.subgroups = subgroups

    @property
    def n(self):
        return len(self.subgroups)

    def subtuple(self, omit):
        t = object.__new__(NormalTuple)
        t.ambient = self.ambient
        t.subgroups = self.subgroups[:omit] + self.subgroups[omit + 1:]
        return t


def full_subgroup(ambient):
    if isinstance(ambient, FiniteGroup):
        return ambient.full_subgroup()
    if isinstance(ambient, PcGroup):
        return full_subgroup_pc(ambient)
    raise TypeError(f"unsupported ambient group {type(ambient).__name__}")


def quotient_invariants(A, B):
    """Abelian invariants of A/B on whichever engine the inputs live."""
    if isinstance(A, FinSubgroup):
        return abelian_invariants_of_quotient(A, B)
    if isinstance(A, PcSubgroup):
        return central_quotient_invariants(A, B)
    raise TypeError(f"unsupported subgroup {type(A).__name__}")


def _intersection(subs):
    return reduce(lambda a, b: a.intersect(b), subs)


def _product(subs):
    return reduce(lambda a, b: a.product(b), subs)


def subgroup_descriptor(s):
    if isinstance(s, FinSubgroup):
        return {"order": s.order()}
    return {"igs_rows": len(s.pivots), "pivots": list(s.pivots)}


class Report:
    """Uniform result record; `invariants` is AbelianInvariants or None."""

    def __init__(self, formula, inputs, hypothesis_checks=None, numerator=None,
                 denominator=None, invariants=None, finding=None, notes=None):
        self.formula = formula
        self.inputs = inputs
        self.hypothesis_checks = hypothesis_checks or []
        self.numerator = numerator
        self.denominator = denominator
        self.invariants = invariants
        self.finding = finding
        self.notes = notes or []

    def to_json_dict(self):
        out = {
            "formula": self.formula,
            "inputs": self.inputs,
            "hypothesis_checks": self.hypothesis_checks,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "invariants": None,
            "finding": self.finding,
            "notes": self.notes,
        }
        if self.invariants is not None:
            out["invariants"] = {
                "free_rank": self.invariants.free_rank,
                "torsion": list(self.invariants.torsion),
            }
        return out


def is_connected_tuple(t):
    """(ok, witness): witness is a violating (I, J) of 1-based indices."""
    m = t.n
    if m <= 2:
        return True, None
    subs = t.subgroups
    indices = range(m)
    inter_cache = {}
    prod_cache = {}

    def inter(I):
        got = inter_cache.get(I)
        if got is None:
            got = inter_cache[I] = _intersection([subs[i] for i in I])
        return got

    def prod(J):
        got = prod_cache.get(J)
        if got is None:
            got = prod_cache[J] = _product([subs[j] for j in J])
        return got

    for isize in range(2, m + 1):
        for I in combinations(indices, isize):
            for jsize in range(1, m + 1):
                for J in combinations(indices, jsize):
                    pj = prod(J)
                    lhs = inter(I).product(pj)
                    rhs = _intersection([subs[i].product(pj) for i in I])
                    if not lhs == rhs:
                        witness = (tuple(i + 1 for i in I), tuple(j + 1 for j in J))
                        return False, witness
    return True, None


def symmetric_commutator(t):
    """Product over two-block partitions {I, J} of the index set of
    [cap_I N_i, cap_J N_j]."""
    n = t.n
    if n < 2:
        raise ValueError("symmetric commutator needs at least two subgroups")
    subs = t.subgroups
    rest = range(1, n)
    acc = None
    # fix index 0 in I so each unordered partition appears once
    for isize in range(0, n):
        for extra in combinations(rest, isize):
            I = (0,) + extra
            J = tuple(j for j in rest if j not in extra)
            if not J:
                continue
            c = _intersection([subs[i] for i in I]).commutator(_intersection([subs[j] for j in J]))
            acc = c if acc is None else acc.product(c)
    return acc


def check_hypothesis(t):
    """Connectivity of every (n-1)-subtuple; transcript for reporting."""
    transcript = []
    for omit in range(t.n):
        ok, witness = is_connected_tuple(t.subtuple(omit))
        transcript.append({
            "omitted": omit + 1,
            "connected": ok,
            "witness": None if witness is None else {"I": list(witness[0]), "J": list(witness[1])},
        })
        if not ok:
            raise ConnectivityError(
                f"the subtuple omitting N_{omit + 1} is not connected; "
                f"violating (I, J) = {witness}",
                omitted=omit + 1,
                witness=witness,
                transcript=transcript,
            )
    return transcript


def pi_n_colimit(t):
    """Invariants of (cap N_i) / (symmetric commutator), gated on the
    connectivity hypothesis."""
    transcript = check_hypothesis(t)
    numerator = _intersection(t.subgroups)
    if t.n == 1:
        denominator = _trivial_like(t.ambient)
    else:
        denominator = symmetric_commutator(t)
    assert numerator.contains_subgroup(denominator), "denominator must lie in the intersection"
    invariants = quotient_invariants(numerator, denominator)
    return Report(
        formula="pi_n_colimit",
        inputs={"n": t.n},
        hypothesis_checks=transcript,
        numerator=subgroup_descriptor(numerator),
        denominator=subgroup_descriptor(denominator),
        invariants=invariants,
    )


def _trivial_like(ambient):
    if isinstance(ambient, FiniteGroup):
        return ambient.trivial_subgroup()
    from .nilpotent import trivial_subgroup_pc

    return trivial_subgroup_pc(ambient)


def pi_1_colimit(t):
    """Quotient G / (N_1 ... N_n); stated in the source formula for n = 3,
    reported as an extension otherwise."""
    product = _product(t.subgroups)
    notes = [] if t.n == 3 else ["extension of the n=3 formula to general n"]
    report = Report(
        formula="pi_1_colimit",
        inputs={"n": t.n},
        numerator={"ambient": True},
        denominator=subgroup_descriptor(product),
        notes=notes,
    )
    if isinstance(t.ambient, FiniteGroup):
        quotient, _ = t.ambient.quotient(product)
        report.inputs["quotient_order"] = quotient.n
        return report, quotient
    return report, None


def pi_2_colimit_n3(L, M, N):
    """Invariants of (LM cap MN) / (M (L cap N)); symmetric in L, M, N.

    If the quotient turns out nonabelian the report carries a finding
    instead of invariants.
    """
    for nm, s in (("L", L), ("M", M), ("N", N)):
        if not s.is_normal():
            raise ValueError(f"{nm} is not normal")
    numerator = L.product(M).intersect(M.product(N))
    denominator = M.product(L.intersect(N))
    assert numerator.contains_subgroup(denominator)
    try:
        invariants = quotient_invariants(numerator, denominator)
        finding = None
    except ValueError as exc:
        invariants = None
        finding = f"quotient is not abelian: {exc}"
    return Report(
        formula="pi_2_colimit_n3",
        inputs={},
        numerator=subgroup_descriptor(numerator),
        denominator=subgroup_descriptor(denominator),
        invariants=invariants,
        finding=finding,
    )


def h1_GMN(ambient, M, N):
    """Invariants of (M cap N) / ([G, M cap N][M, N])."""
    for nm, s in (("M", M), ("N", N)):
        if not s.is_normal():
            raise ValueError(f"{nm} is not normal")
    full = full_subgroup(ambient)
    numerator = M.intersect(N)
    denominator = full.commutator(numerator).product(M.commutator(N))
    assert numerator.contains_subgroup(denominator)
    invariants = quotient_invariants(numerator, denominator)
    return Report(
        formula="h1_GMN",
        inputs={},
        numerator=subgroup_descriptor(numerator),
        denominator=subgroup_descriptor(denominator),
        invariants=invariants,
    )


def hopf_h3_check(rank, r_word, s_word, cls, names=None):
    """Invariants of (R cap S cap [F,F]) / ([R,S][R cap S, F]) computed in
    the free nilpotent quotient of the given class.

    A trivial result is consistent with vanishing H3 of F/RS; the value is
    a truncation, so triviality at one class proves nothing beyond it.
    """
    F = free_nilpotent(rank, cls, names=names)
    R = normal_closure_pc(F, [F.collect(r_word)])
    S = normal_closure_pc(F, [F.collect(s_word)])
    full = full_subgroup_pc(F)
    derived = commutator_subgroup_pc(full, full)
    rs = intersect_pc(R, S)
    numerator = intersect_pc(rs, derived)
    denominator = commutator_subgroup_pc(R, S).product(commutator_subgroup_pc(rs, full))
    assert numerator.contains_subgroup(denominator)
    invariants = central_quotient_invariants(numerator, denominator)
    return Report(
        formula="hopf_h3_check",
        inputs={"rank": rank, "r": render_word(r_word), "s": render_word(s_word), "class": cls},
        numerator=subgroup_descriptor(numerator),
        denominator=subgroup_descriptor(denominator),
        invariants=invariants,
        notes=[f"truncated at class {cls}; triviality here is evidence, not proof"],
    )


def search_disconnected_triple(max_order=16, stop_at_first=True):
    """Exhaustive scan of normal-subgroup triples of the catalog groups of
    order <= max_order for a connectivity violation.

    Returns a list of findings, each (group name, triple of subgroup
    orders, witness).  The connectivity condition is invariant under
    permutations of the tuple, so unordered triples suffice.
    """
    from itertools import combinations_with_replacement

    from .catalog import catalog_group, groups_of_order_at_most

    findings = []
    for name in groups_of_order_at_most(max_order):
        g = catalog_group(name)
        normals = g.normal_subgroups()
        for triple in combinations_with_replacement(normals, 3):
            t = NormalTuple(g, triple)
            ok, witness = is_connected_tuple(t)
            if not ok:
                findings.append((name, tuple(s.order() for s in triple), witness))
                if stop_at_first:
                    return findings
    return findings
