import random

import pytest

from picolim.words import (
    Word,
    commutator,
    conjugate,
    hopf_element,
    hopf_element_brackets,
    left_normed_commutator,
    render_word,
    reduce_word,
)


def w(text_pairs):
    return Word(tuple(text_pairs))


def test_reduction_merges_and_cancels():
    assert w([("a", 2), ("a", 3)]).syllables == (("a", 5),)
    assert w([("a", 2), ("a", -2)]).is_identity()
    assert w([("a", 1), ("b", 0), ("a", -1)]).is_identity()
    assert w([("a", 1), ("b", 2), ("b", -2), ("a", 1)]).syllables == (("a", 2),)


def test_identity_and_gen():
    assert Word.identity().is_identity()
    assert Word.gen("x").syllables == (("x", 1),)
    assert Word.gen("x", -3).syllables == (("x", -3),)


def test_bad_names_rejected():
    with pytest.raises(ValueError):
        Word((("1bad", 1),))
    with pytest.raises(ValueError):
        Word((("a", 1.5),))


def test_group_laws_random():
    rng = random.Random(11)
    names = ["a", "b", "c"]

    def rand_word():
        return Word(
            tuple((rng.choice(names), rng.randint(-3, 3)) for _ in range(rng.randint(0, 6)))
        )

    for _ in range(200):
        x, y, z = rand_word(), rand_word(), rand_word()
        assert (x * y) * z == x * (y * z)
        assert (x * x.inverse()).is_identity()
        assert (x * y).inverse() == y.inverse() * x.inverse()
        assert x**3 == x * x * x
        assert x**-2 == (x.inverse()) ** 2


def test_commutator_conventions():
    x, y = Word.gen("x"), Word.gen("y")
    assert commutator(x, y) == x * y * x.inverse() * y.inverse()
    assert conjugate(x, y) == y * x * y.inverse()
    # [x,y]^-1 = [y,x]
    assert commutator(x, y).inverse() == commutator(y, x)


def test_left_normed():
    entries = [("a", 1), ("b", 1), ("c", -1)]
    expect = commutator(commutator(Word.gen("a"), Word.gen("b")), Word.gen("c", -1))
    assert left_normed_commutator(entries) == expect
    assert left_normed_commutator([("a", 2)]) == Word.gen("a", 2)
    with pytest.raises(ValueError):
        left_normed_commutator([])
    with pytest.raises(ValueError):
        left_normed_commutator([("a", 0)])


def test_length_letters_generators():
    u = w([("a", -2), ("b", 3)])
    assert u.length() == 5
    assert u.generators() == ["a", "b"]
    assert u.letters() == [("a", -1), ("a", -1), ("b", 1), ("b", 1), ("b", 1)]


def test_render_word():
    u = w([("a", 1), ("b", -2)])
    assert render_word(u) == "a*b^-2"
    assert render_word(Word(), fallback_generator="g") == "g^0"
    with pytest.raises(ValueError):
        render_word(Word())


def test_reduce_word_idempotent():
    u = w([("a", 1), ("b", 2)])
    assert reduce_word(u) == u


def test_hopf_element_base_case():
    assert hopf_element(1) == commutator(Word.gen("y0"), Word.gen("y1"))
    assert hopf_element_brackets(1) == "[y0,y1]"


def test_hopf_element_recursion():
    # h(2) = [[y0,y1],[y0,y1*y2]]
    y0, y1, y2 = Word.gen("y0"), Word.gen("y1"), Word.gen("y2")
    h2 = commutator(commutator(y0, y1), commutator(y0, y1 * y2))
    assert hopf_element(2) == h2
    assert hopf_element_brackets(2) == "[[y0,y1],[y0,y1y2]]"
    # h(3) = [h(2), [[y0,y1],[y0,y1*y2*y3]]]
    right = commutator(commutator(y0, y1), commutator(y0, y1 * y2 * Word.gen("y3")))
    assert hopf_element(3) == commutator(h2, right)


def test_hopf_element_letters():
    for k in range(1, 5):
        assert hopf_element(k).generators() == [f"y{i}" for i in range(k + 1)]
    with pytest.raises(ValueError):
        hopf_element(0)
