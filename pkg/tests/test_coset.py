import pytest

from picolim.abelian import AbelianInvariants
from picolim.coset import (
    coset_table_from_action,
    schreier_representatives,
    schreier_rewrite_matrix,
    todd_coxeter,
)
from picolim.presentations import parse_presentation, parse_word

S3 = "gens: r,s | rels: r^3, s^2, s*r*s^-1*r"


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_cyclic_order(strategy):
    p = parse_presentation("gens: x | rels: x^5")
    t = todd_coxeter(p, strategy=strategy)
    assert t.status == "complete"
    assert t.n_cosets() == 5


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_subgroup_index(strategy):
    p = parse_presentation(S3)
    assert todd_coxeter(p, strategy=strategy).n_cosets() == 6
    assert todd_coxeter(p, [parse_word("s")], strategy=strategy).n_cosets() == 3
    assert todd_coxeter(p, [parse_word("r")], strategy=strategy).n_cosets() == 2


@pytest.mark.parametrize(
    "text,order",
    [
        ("gens: a | rels: a^12", 12),
        ("gens: a,b | rels: a^4, b^2, b*a*b^-1*a", 8),
        ("gens: a,b | rels: a^4, b^4, a^2*b^-2, b*a*b^-1*a", 8),
        ("gens: x,y | rels: x^2, y^3, [x,y]", 6),
        ("gens: x,y | rels: x, y", 1),
    ],
)
def test_strategies_agree(text, order):
    p = parse_presentation(text)
    hlt = todd_coxeter(p, strategy="hlt")
    fel = todd_coxeter(p, strategy="felsch")
    assert hlt.n_cosets() == order
    assert fel.n_cosets() == order


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
@pytest.mark.parametrize(
    "rels",
    [
        "x1^2*x2^-3, x1*x2*x1*x2^-1*x1^-1*x2^-1",
        "x1^3*x2^-4, x1*x2*x1*x2^-1*x1^-1*x2^-1",
        "x1^2*x2^-3, x1^3*x2^-4",
    ],
)
def test_trivial_but_nonobvious_presentations(rels, strategy):
    p = parse_presentation(f"gens: x1,x2 | rels: {rels}")
    t = todd_coxeter(p, strategy=strategy)
    assert t.status == "complete"
    assert t.n_cosets() == 1


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_exceeded_limit(strategy):
    p = parse_presentation("gens: a,b | rels:")
    t = todd_coxeter(p, limit=100, strategy=strategy)
    assert t.status == "exceeded-limit"
    assert t.rows == []
    assert t.defined >= 100


def test_follow_cycles_through_group():
    p = parse_presentation("gens: a | rels: a^6")
    t = todd_coxeter(p)
    a = parse_word("a")
    seen = []
    c = 0
    for _ in range(6):
        seen.append(c)
        c = t.follow(c, a)
    assert c == 0
    assert sorted(seen) == list(range(6))
    assert t.follow(0, parse_word("a^-1")) == t.follow(0, parse_word("a^5"))


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_table_closed_under_relators(strategy):
    p = parse_presentation(S3)
    t = todd_coxeter(p, strategy=strategy)
    for rel in p.relators:
        for c in range(t.n_cosets()):
            assert t.follow(c, rel) == c


def test_deterministic_rows():
    p = parse_presentation(S3)
    t1 = todd_coxeter(p)
    t2 = todd_coxeter(p)
    assert t1.rows == t2.rows
    assert t1.to_csv() == t2.to_csv()


def test_to_csv_shape():
    p = parse_presentation("gens: a | rels: a^3")
    t = todd_coxeter(p)
    lines = t.to_csv().splitlines()
    assert lines[0] == "coset,a,a^-1"
    assert len(lines) == 4
    assert t.to_csv().endswith("\n")


def test_unknown_strategy_rejected():
    p = parse_presentation("gens: a | rels: a^2")
    with pytest.raises(ValueError):
        todd_coxeter(p, strategy="nosuch")


def _swap_fix_table():
    # a swaps the two points, b fixes both
    return coset_table_from_action(("a", "b"), [[1, 1, 0, 0], [0, 0, 1, 1]])


def test_action_table_and_representatives():
    t = _swap_fix_table()
    assert t.status == "complete"
    reps = schreier_representatives(t)
    assert reps[0] == ()
    assert len(reps) == 2


def test_rewrite_free_subgroup_rank():
    # index-2 subgroup of a free group of rank 2 is free of rank 3
    t = _swap_fix_table()
    rows, ncols = schreier_rewrite_matrix(t, [])
    assert ncols == 3
    assert rows == []
    assert AbelianInvariants.from_relation_matrix(rows, ncols) == AbelianInvariants(3, ())


@pytest.mark.parametrize(
    "sub,expected",
    [
        ("r", AbelianInvariants(0, (3,))),
        ("s", AbelianInvariants(0, (2,))),
    ],
)
def test_rewrite_known_subgroups(sub, expected):
    p = parse_presentation(S3)
    t = todd_coxeter(p, [parse_word(sub)])
    rows, ncols = schreier_rewrite_matrix(t, p.relators)
    assert AbelianInvariants.from_relation_matrix(rows, ncols) == expected


def test_rewrite_trivial_subgroup():
    p = parse_presentation(S3)
    t = todd_coxeter(p)
    rows, ncols = schreier_rewrite_matrix(t, p.relators)
    inv = AbelianInvariants.from_relation_matrix(rows, ncols)
    assert inv.is_trivial()
