"""Freely reduced words over a named generator alphabet.

A word is stored as a tuple of syllables (name, exponent) with nonzero
integer exponents and no two adjacent syllables on the same generator, so
every Word is reduced by construction.  Exponents are plain Python ints and
may be arbitrarily large.  Words are immutable and hashable.

Besides the arithmetic (product, inverse, power) this module provides the
commutator constructors used throughout the package, with the conventions

    commutator(x, y) = x y x^-1 y^-1
    conjugate(x, g)  = g x g^-1

and the family of iterated commutator words hopf_element(k) built from
letters y0, y1, ... by

    h(1) = [y0, y1]
    h(k) = [h(k-1), h(k-1) with its trailing product y1...y(k-1)
            extended by the next letter yk]

so h(2) = [[y0,y1],[y0,y1*y2]], h(3) = [h(2), [[y0,y1],[y0,y1*y2*y3]]] and
so on.  hopf_element_brackets(k) renders the nested bracket expression.
"""

import re

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def valid_generator_name(name):
    return bool(_NAME_RE.match(name))


def _reduce(syllables):
    out = []
    for name, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((name, merged))
        else:
            out.append((name, exp))
    return tuple(out)


class Word:
    """A freely reduced word; the empty word is the identity."""

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        for name, exp in syllables:
            if not valid_generator_name(name):
                raise ValueError(f"bad generator name {name!r}")
            if not isinstance(exp, int):
                raise ValueError(f"exponent {exp!r} is not an int")
        self.syllables = _reduce(syllables)

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def gen(cls, name, exp=1):
        return cls(((name, exp),))

    def is_identity(self):
        return not self.syllables

    def __mul__(self, other):
        return Word(self.syllables + other.syllables)

    def inverse(self):
        return Word(tuple((name, -exp) for name, exp in reversed(self.syllables)))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, n):
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def length(self):
        """Letter count of the reduced word."""
        return sum(abs(exp) for _, exp in self.syllables)

    def generators(self):
        return sorted({name for name, _ in self.syllables})

    def letters(self):
        """Expand to single letters as (name, +1/-1) pairs."""
        out = []
        for name, exp in self.syllables:
            sign = 1 if exp > 0 else -1
            out.extend((name, sign) for _ in range(abs(exp)))
        return out

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __repr__(self):
        return f"Word({render_word(self)!r})"


def reduce_word(w):
    """Re-run free reduction; a no-op on any Word, kept as an explicit op."""
    return Word(w.syllables)


def commutator(x, y):
    return x * y * x.inverse() * y.inverse()


def conjugate(x, g):
    """g x g^-1."""
    return g * x * g.inverse()


def left_normed_commutator(entries):
    """[[...[z1^e1, z2^e2], ...], zt^et] for entries (word_or_name, sign).

    Each entry is a pair (z, e) with z a Word or a generator name and e a
    nonzero int used as the exponent on that letter.  A single entry returns
    the letter power itself.
    """
    if not entries:
        raise ValueError("left-normed commutator needs at least one entry")
    words = []
    for z, e in entries:
        if e == 0:
            raise ValueError("zero exponent in commutator entry")
        w = z if isinstance(z, Word) else Word.gen(z)
        words.append(w**e)
    acc = words[0]
    for w in words[1:]:
        acc = commutator(acc, w)
    return acc


def render_word(w, fallback_generator=None):
    """Render to the text form `a*b^2*c^-1`.

    The identity has no product form in the grammar; it renders as `g^0`
    using the word's first generator, or `fallback_generator` if given.
    """
    if w.is_identity():
        name = fallback_generator
        if name is None:
            raise ValueError("cannot render the identity without a generator name")
        return f"{name}^0"
    parts = []
    for name, exp in w.syllables:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def _hopf_letters(k):
    return [f"y{i}" for i in range(k + 1)]


def _trailing_product(m):
    return Word(tuple((f"y{i}", 1) for i in range(1, m + 1)))


def _hopf_tree(depth, m):
    """Bracket tree: leaves are (word, text), nodes are 2-tuples of trees."""
    if depth == 1:
        left = (Word.gen("y0"), "y0")
        tail = _trailing_product(m)
        right = (tail, "".join(f"y{i}" for i in range(1, m + 1)))
        return (left, right)
    return (_hopf_tree(depth - 1, depth - 1), _hopf_tree(depth - 1, m))


def _tree_word(tree):
    a, b = tree
    wa = _tree_word(a) if isinstance(a[0], tuple) else a[0]
    wb = _tree_word(b) if isinstance(b[0], tuple) else b[0]
    return commutator(wa, wb)


def _tree_text(tree):
    a, b = tree
    ta = _tree_text(a) if isinstance(a[0], tuple) else a[1]
    tb = _tree_text(b) if isinstance(b[0], tuple) else b[1]
    return f"[{ta},{tb}]"


def hopf_element(k):
    """The k-th iterated commutator word, over letters y0..yk."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _tree_word(_hopf_tree(k, k))


def hopf_element_brackets(k):
    """Nested bracket rendering of hopf_element(k), e.g. [[y0,y1],[y0,y1y2]]."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _tree_text(_hopf_tree(k, k))
