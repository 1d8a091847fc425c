import random

import pytest

from picolim.abelian import AbelianInvariants
from picolim.magnus import TruncatedAlgebra
from picolim.nilpotent import (
    central_quotient_invariants,
    commutator_subgroup_pc,
    consistency_report,
    free_nilpotent,
    full_subgroup_pc,
    intersect_pc,
    normal_closure_pc,
    product_pc,
    project_element,
    project_subgroup,
    subgroup,
    trivial_subgroup_pc,
)
from picolim.words import Word, commutator


@pytest.fixture(scope="module")
def g22():
    return free_nilpotent(2, 2)


@pytest.fixture(scope="module")
def g23():
    return free_nilpotent(2, 3)


def _random_word(rng, names, length):
    w = Word(())
    for _ in range(length):
        w = w * Word.gen(rng.choice(names), rng.randint(-2, 2) or 1)
    return w


# -- truncated power series ------------------------------------------------


def test_algebra_units():
    alg = TruncatedAlgebra(2, 3)
    x, y = alg.gen(0), alg.gen(1)
    assert alg.mul(alg.one(), x) == x
    assert alg.mul(x, alg.inv(x)) == alg.one()
    assert alg.mul(alg.inv(y), y) == alg.one()


def test_algebra_associative_random():
    alg = TruncatedAlgebra(2, 4)
    rng = random.Random(2)
    els = [alg.one(), alg.gen(0), alg.gen(1)]
    for _ in range(8):
        a, b = rng.choice(els), rng.choice(els)
        els.append(alg.mul(a, alg.inv(b)))
    for _ in range(40):
        a, b, c = rng.choice(els), rng.choice(els), rng.choice(els)
        assert alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c))


def test_algebra_pow():
    alg = TruncatedAlgebra(2, 3)
    x = alg.gen(0)
    assert alg.pow(x, 3) == alg.mul(alg.mul(x, x), x)
    assert alg.pow(x, -2) == alg.inv(alg.mul(x, x))
    assert alg.pow(x, 0) == alg.one()


# -- collection ------------------------------------------------------------


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _mat_inv_unitri(a):
    # inverse of an upper unitriangular 3x3 integer matrix
    p, q, r = a[0][1], a[1][2], a[0][2]
    return [[1, -p, p * q - r], [0, 1, -q], [0, 0, 1]]


_MX = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
_MY = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]


def _heisenberg_image(word):
    out = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    mats = {"x1": _MX, "x2": _MY}
    for name, exp in word.syllables:
        m = mats[name] if exp > 0 else _mat_inv_unitri(mats[name])
        for _ in range(abs(exp)):
            out = _mat_mul(out, m)
    return out


def test_collect_matches_heisenberg_matrices(g22):
    # the free class-2 group of rank 2 is the integer Heisenberg group
    rng = random.Random(7)
    zmat = _mat_mul(
        _mat_mul(_MX, _MY), _mat_mul(_mat_inv_unitri(_MX), _mat_inv_unitri(_MY))
    )
    basis_mats = [_MX, _MY, zmat]
    for _ in range(60):
        w = _random_word(rng, ["x1", "x2"], rng.randint(0, 6))
        u = g22.collect(w)
        direct = _heisenberg_image(w)
        via_nf = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        for idx, e in u:
            m = basis_mats[idx] if e > 0 else _mat_inv_unitri(basis_mats[idx])
            for _ in range(abs(e)):
                via_nf = _mat_mul(via_nf, m)
        assert direct == via_nf


def test_collect_basics(g22):
    assert g22.collect(Word(())) == ()
    x, y = Word.gen("x1"), Word.gen("x2")
    assert g22.collect(commutator(x, y)) == ((2, 1),)
    # x y x^-1 = y [x,y]
    assert g22.exponents(g22.collect(x * y * x**-1)) == [0, 1, 1]


def test_collect_unknown_name(g22):
    with pytest.raises(ValueError):
        g22.collect(Word.gen("q"))


def test_group_laws_random(g23):
    rng = random.Random(13)
    els = [g23.collect(_random_word(rng, ["x1", "x2"], rng.randint(1, 5))) for _ in range(12)]
    for _ in range(60):
        u, v, w = rng.choice(els), rng.choice(els), rng.choice(els)
        assert g23.mul(g23.mul(u, v), w) == g23.mul(u, g23.mul(v, w))
        assert g23.mul(u, g23.inv(u)) == ()
        assert g23.pow(u, 3) == g23.mul(g23.mul(u, u), u)
        assert g23.pow(u, -2) == g23.inv(g23.mul(u, u))
        assert g23.comm(u, v) == g23.mul(
            g23.mul(u, v), g23.mul(g23.inv(u), g23.inv(v))
        )


def test_consistency_report_clean():
    for rank, cls in ((2, 2), (2, 3), (3, 2)):
        assert consistency_report(free_nilpotent(rank, cls)) == []


def test_commutation_table_weights(g23):
    # collected [a_j, a_i] only involves deeper basis elements
    for j in range(1, g23.basis.size):
        for i in range(j):
            u = g23.commutation_table(j, i)
            for idx, _ in u:
                assert g23.basis.weight(idx) >= g23.basis.weight(i) + g23.basis.weight(j)


def test_element_text(g22):
    assert g22.element_text(()) == "1"
    u = g22.collect(Word.gen("x1") * Word.gen("x2") * Word.gen("x1", -1))
    assert g22.element_text(u) == "x2*[x1,x2]"
    named = free_nilpotent(2, 2, names=["y0", "y1"])
    assert named.element_text(named.gen(0)) == "y0"


def test_custom_names_validation():
    with pytest.raises(ValueError):
        free_nilpotent(2, 2, names=["only_one"])


# -- subgroups -------------------------------------------------------------


def test_cyclic_subgroup(g22):
    x = g22.gen(0)
    h = subgroup(g22, [x])
    assert h.pivots == [0]
    assert h.contains(g22.pow(x, 5))
    assert not h.contains(g22.gen(1))
    assert not h.contains(g22.basis_element(2))
    assert not h.is_trivial()


def test_trivial_and_full(g22):
    t = trivial_subgroup_pc(g22)
    assert t.is_trivial()
    assert t.contains(())
    assert not t.contains(g22.gen(0))
    f = full_subgroup_pc(g22)
    assert f.pivots == [0, 1, 2]
    assert f.contains(g22.collect(Word.gen("x1", 3) * Word.gen("x2", -2)))


def test_normal_closure(g22):
    h = normal_closure_pc(g22, [g22.gen(0)])
    assert h.pivots == [0, 2]
    assert h.is_normal()
    assert h.contains(g22.basis_element(2))
    plain = subgroup(g22, [g22.gen(0)])
    assert not plain.is_normal()


def test_coords_roundtrip(g22):
    h = normal_closure_pc(g22, [g22.gen(0)])
    u = g22.mul(g22.pow(g22.gen(0), 3), g22.pow(g22.basis_element(2), -4))
    coords = h.coords_of(u)
    rebuilt = ()
    for row, c in zip(h.igs, coords):
        rebuilt = g22.mul(rebuilt, g22.pow(row, c))
    assert rebuilt == u
    with pytest.raises(ValueError):
        h.coords_of(g22.gen(1))


def test_lower_central_series_dual_route(g23):
    # commutator route vs weight-filtration route
    full = full_subgroup_pc(g23)
    gamma2 = commutator_subgroup_pc(full, full)
    gamma3 = commutator_subgroup_pc(gamma2, full)
    by_weight2 = subgroup(
        g23, [g23.basis_element(i) for i in range(g23.basis.size) if g23.basis.weight(i) >= 2]
    )
    by_weight3 = subgroup(
        g23, [g23.basis_element(i) for i in range(g23.basis.size) if g23.basis.weight(i) >= 3]
    )
    assert gamma2 == by_weight2
    assert gamma3 == by_weight3
    assert commutator_subgroup_pc(gamma3, full).is_trivial()


def test_product_contains_factors(g23):
    h = normal_closure_pc(g23, [g23.gen(0)])
    k = normal_closure_pc(g23, [g23.gen(1)])
    p = product_pc(h, k)
    assert p.contains_subgroup(h)
    assert p.contains_subgroup(k)
    assert p == product_pc(k, h)
    assert p == full_subgroup_pc(g23)


def test_intersection_known(g22):
    h = normal_closure_pc(g22, [g22.gen(0)])
    k = normal_closure_pc(g22, [g22.gen(1)])
    i = intersect_pc(h, k)
    assert i == subgroup(g22, [g22.basis_element(2)])


def test_intersection_membership_random(g23):
    rng = random.Random(19)
    for _ in range(6):
        seeds_h = [
            g23.collect(_random_word(rng, ["x1", "x2"], rng.randint(1, 3)))
            for _ in range(rng.randint(1, 2))
        ]
        seeds_k = [
            g23.collect(_random_word(rng, ["x1", "x2"], rng.randint(1, 3)))
            for _ in range(rng.randint(1, 2))
        ]
        h = normal_closure_pc(g23, seeds_h)
        k = normal_closure_pc(g23, seeds_k)
        i = intersect_pc(h, k)
        assert h.contains_subgroup(i)
        assert k.contains_subgroup(i)
        # elements of H lie in the intersection exactly when K holds them
        for _ in range(10):
            w = ()
            for row in h.igs:
                w = g23.mul(w, g23.pow(row, rng.randint(-2, 2)))
            assert i.contains(w) == k.contains(w)


def test_intersect_idempotent(g23):
    h = normal_closure_pc(g23, [g23.gen(0)])
    assert intersect_pc(h, h) == h
    assert intersect_pc(h, trivial_subgroup_pc(g23)).is_trivial()
    assert intersect_pc(h, full_subgroup_pc(g23)) == h


# -- quotients -------------------------------------------------------------


def test_central_quotient_invariants(g23):
    full = full_subgroup_pc(g23)
    gamma2 = commutator_subgroup_pc(full, full)
    gamma3 = commutator_subgroup_pc(gamma2, full)
    assert central_quotient_invariants(full, gamma2) == AbelianInvariants(2, ())
    assert central_quotient_invariants(gamma2, gamma3) == AbelianInvariants(1, ())
    assert central_quotient_invariants(gamma2, gamma2).is_trivial()


def test_central_quotient_torsion(g22):
    # <x, z> / <x^2, z> has a Z/2 direction
    x = g22.gen(0)
    z = g22.basis_element(2)
    a = subgroup(g22, [x, z])
    b = subgroup(g22, [g22.pow(x, 2), z])
    assert central_quotient_invariants(a, b) == AbelianInvariants(0, (2,))


def test_central_quotient_rejections(g22):
    full = full_subgroup_pc(g22)
    with pytest.raises(ValueError):
        central_quotient_invariants(full, trivial_subgroup_pc(g22))  # nonabelian
    a = subgroup(g22, [g22.gen(0)])
    b = subgroup(g22, [g22.gen(1)])
    with pytest.raises(ValueError):
        central_quotient_invariants(a, b)  # not contained


# -- projections -----------------------------------------------------------


def test_projection_compatible_with_collection(g22, g23):
    rng = random.Random(29)
    for _ in range(30):
        w = _random_word(rng, ["x1", "x2"], rng.randint(0, 5))
        assert project_element(g22, g23.collect(w)) == g22.collect(w)


def test_projection_of_subgroup(g22, g23):
    h3 = normal_closure_pc(g23, [g23.gen(0)])
    h2 = project_subgroup(g22, h3)
    assert h2 == normal_closure_pc(g22, [g22.gen(0)])


def test_to_csv(tmp_path, g22):
    h = normal_closure_pc(g22, [g22.gen(0)])
    path = tmp_path / "igs.csv"
    h.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "pivot,e0,e1,e2"
    assert len(lines) == 3


def test_subgroups_of_different_parents_rejected(g22, g23):
    h = subgroup(g22, [g22.gen(0)])
    k = subgroup(g23, [g23.gen(0)])
    with pytest.raises(ValueError):
        product_pc(h, k)
