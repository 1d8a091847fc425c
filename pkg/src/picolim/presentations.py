"""Finite presentations and their one-line text format.

Grammar (whitespace insignificant, newlines allowed anywhere):

    presentation := 'gens' ':' name (',' name)* '|' 'rels' ':' [word (',' word)*]
    word         := term ('*' term)* | '[' word ',' word ']'
    term         := name ('^' int)?

A bracket [w1, w2] parses to the commutator w1 w2 w1^-1 w2^-1.  Rendering
always emits the flat product form; parse(render(p)) == p.
"""

from .errors import ParseError
from .words import Word, commutator, render_word, valid_generator_name


class Presentation:
    """Generator names plus relator words over them."""

    def __init__(self, generators, relators=()):
        generators = tuple(generators)
        if not generators:
            raise ValueError("a presentation needs at least one generator")
        seen = set()
        for name in generators:
            if not valid_generator_name(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        relators = tuple(relators)
        for rel in relators:
            for name in rel.generators():
                if name not in seen:
                    raise ValueError(f"relator uses unknown generator {name!r}")
        self.generators = generators
        self.relators = relators

    def render(self):
        gens = ",".join(self.generators)
        rels = ",".join(
            render_word(r, fallback_generator=self.generators[0]) for r in self.relators
        )
        return f"gens: {gens} | rels: {rels}"

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self):
        return hash((self.generators, self.relators))

    def __repr__(self):
        return f"Presentation({self.render()!r})"


class _Lexer:
    SYMBOLS = "|:,*^[]"

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens = []
        self._run()
        self.index = 0

    def _advance(self, n):
        for _ in range(n):
            if self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _run(self):
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self._advance(1)
                continue
            start = (self.line, self.col)
            if ch in self.SYMBOLS:
                self.tokens.append((ch, ch, start))
                self._advance(1)
            elif ch.isalpha():
                j = self.pos
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[self.pos : j], start))
                self._advance(j - self.pos)
            elif ch.isdigit() or ch == "-":
                j = self.pos + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                lit = text[self.pos : j]
                if lit == "-":
                    raise ParseError("dangling minus sign", start[0], start[1])
                self.tokens.append(("int", int(lit), start))
                self._advance(j - self.pos)
            else:
                raise ParseError(f"unexpected character {ch!r}", start[0], start[1])
        self.tokens.append(("end", None, (self.line, self.col)))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.next()
        if tok[0] != kind:
            shown = tok[1] if tok[0] != "end" else "end of input"
            raise ParseError(
                f"expected {what or kind}, found {shown!r}", tok[2][0], tok[2][1]
            )
        return tok


def _parse_keyword(lex, keyword):
    tok = lex.expect("name", f"'{keyword}'")
    if tok[1] != keyword:
        raise ParseError(f"expected '{keyword}', found {tok[1]!r}", tok[2][0], tok[2][1])
    lex.expect(":", "':'")


def _parse_term(lex):
    tok = lex.expect("name", "generator name")
    exp = 1
    if lex.peek()[0] == "^":
        lex.next()
        etok = lex.next()
        if etok[0] != "int":
            raise ParseError("expected integer exponent", etok[2][0], etok[2][1])
        exp = etok[1]
    return Word(((tok[1], exp),))


def _parse_word(lex):
    if lex.peek()[0] == "[":
        lex.next()
        left = _parse_word(lex)
        lex.expect(",", "','")
        right = _parse_word(lex)
        lex.expect("]", "']'")
        return commutator(left, right)
    w = _parse_term(lex)
    while lex.peek()[0] == "*":
        lex.next()
        w = w * _parse_term(lex)
    return w


def parse_word(text, generators=None):
    """Parse a single word; optionally restrict to a known alphabet."""
    lex = _Lexer(text)
    w = _parse_word(lex)
    tok = lex.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2][0], tok[2][1])
    _check_alphabet([w], generators, lex)
    return w


def parse_words(text, generators=None):
    """Parse a comma-separated word list (may be empty)."""
    lex = _Lexer(text)
    out = []
    if lex.peek()[0] != "end":
        out.append(_parse_word(lex))
        while lex.peek()[0] == ",":
            lex.next()
            out.append(_parse_word(lex))
    tok = lex.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2][0], tok[2][1])
    _check_alphabet(out, generators, lex)
    return out


def _check_alphabet(ws, generators, lex):
    if generators is None:
        return
    known = set(generators)
    for w in ws:
        for name in w.generators():
            if name not in known:
                raise ParseError(f"unknown generator {name!r}", lex.line, lex.col)


def parse_presentation(text):
    lex = _Lexer(text)
    _parse_keyword(lex, "gens")
    gens = [lex.expect("name", "generator name")[1]]
    while lex.peek()[0] == ",":
        lex.next()
        gens.append(lex.expect("name", "generator name")[1])
    lex.expect("|", "'|'")
    _parse_keyword(lex, "rels")
    rels = []
    if lex.peek()[0] not in ("end",):
        rels.append(_parse_word(lex))
        while lex.peek()[0] == ",":
            lex.next()
            rels.append(_parse_word(lex))
    tok = lex.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2][0], tok[2][1])
    known = set(gens)
    for w in rels:
        for name in w.generators():
            if name not in known:
                # find a position to blame: re-lex is overkill, report at end
                raise ParseError(f"relator uses unknown generator {name!r}", 1, 1)
    try:
        return Presentation(gens, rels)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
