"""Words in the free group on two generators x and y.

A Word is a freely reduced syllable sequence; cyclic reduction produces a
canonical conjugacy-class representative.  The grammar accepted by
parse_word:

    word   := factor+
    factor := atom power?
    atom   := 'x' | 'y' | '(' word ')' | '[' word ',' word ']'
    power  := '^' '-'? digit+

with whitespace insignificant between factors and '[u,v]' denoting
u^-1 v^-1 u v.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Union

from .errors import ParseError


class Gen(Enum):
    X = "x"
    Y = "y"

    def other(self) -> "Gen":
        return Gen.Y if self is Gen.X else Gen.X


class Syllable(NamedTuple):
    gen: Gen
    exp: int


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for s in syllables:
        if s.exp == 0:
            continue
        if stack and stack[-1].gen is s.gen:
            merged = stack[-1].exp + s.exp
            stack.pop()
            if merged:
                stack.append(Syllable(s.gen, merged))
        else:
            stack.append(s)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; the empty tuple is the identity."""

    syllables: tuple[Syllable, ...] = ()

    @classmethod
    def from_syllables(cls, syllables: Iterable[Syllable]) -> "Word":
        return cls(_reduce(syllables))

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def x_pow(cls, e: int) -> "Word":
        return cls((Syllable(Gen.X, e),) if e else ())

    @classmethod
    def y_pow(cls, e: int) -> "Word":
        return cls((Syllable(Gen.Y, e),) if e else ())

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word.from_syllables(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple(Syllable(s.gen, -s.exp) for s in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = Word.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def conjugated_by(self, v: "Word") -> "Word":
        return v.inverse() * self * v

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(
            s.gen.value if s.exp == 1 else f"{s.gen.value}^{s.exp}"
            for s in self.syllables
        )

    def __repr__(self) -> str:
        return f"Word({self})"


def commutator(u: Word, v: Word) -> Word:
    return u.inverse() * v.inverse() * u * v


def swap_generators(w: Word) -> Word:
    """Exchange x and y in every syllable."""
    return Word(tuple(Syllable(s.gen.other(), s.exp) for s in w.syllables))


def double_commutator(k: int, l: int, m: int, n: int) -> Word:
    """The freely reduced word [[x^k, y^l], [x^m, y^n]]."""
    inner1 = commutator(Word.x_pow(k), Word.y_pow(l))
    inner2 = commutator(Word.x_pow(m), Word.y_pow(n))
    return commutator(inner1, inner2)


def double_commutator_cyclic(k: int, l: int, m: int, n: int) -> Word:
    """The cyclically reduced conjugate of [[x^k, y^l], [x^m, y^n]]
    obtained by rotating its last x-run and y-run to the front:

        x^m y^(n-l) x^-k y^l x^k y^-n x^-m y^n x^(m-k) y^-l x^k y^l x^-m y^-n
    """
    syllables = [
        Syllable(Gen.X, m),
        Syllable(Gen.Y, n - l),
        Syllable(Gen.X, -k),
        Syllable(Gen.Y, l),
        Syllable(Gen.X, k),
        Syllable(Gen.Y, -n),
        Syllable(Gen.X, -m),
        Syllable(Gen.Y, n),
        Syllable(Gen.X, m - k),
        Syllable(Gen.Y, -l),
        Syllable(Gen.X, k),
        Syllable(Gen.Y, l),
        Syllable(Gen.X, -m),
        Syllable(Gen.Y, -n),
    ]
    word = Word.from_syllables(syllables)
    if double_commutator(k, l, m, n).is_identity():
        return Word.identity()
    return word


def word_to_pairs(w: Word) -> tuple[tuple[int, int], ...]:
    """Group syllables into (x-exponent, y-exponent) pairs, zeros allowed."""
    pairs: list[tuple[int, int]] = []
    i = 0
    s = w.syllables
    while i < len(s):
        if s[i].gen is Gen.X:
            a = s[i].exp
            i += 1
            b = 0
            if i < len(s) and s[i].gen is Gen.Y:
                b = s[i].exp
                i += 1
        else:
            a = 0
            b = s[i].exp
            i += 1
        pairs.append((a, b))
    return tuple(pairs)


# ----------------------------------------------------------------------
# cyclic reduction


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class GeneratorPower:
    gen: Gen
    exp: int


@dataclass(frozen=True)
class ReducedCyclic:
    """Cyclically reduced word as (a_i, b_i) pairs, all nonzero.

    The stored rotation is canonical: the lexicographically least among
    the rotations that begin with an x-run, so equality of ReducedCyclic
    values decides conjugacy.
    """

    pairs: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.pairs)

    def to_word(self) -> Word:
        syllables = []
        for a, b in self.pairs:
            syllables.append(Syllable(Gen.X, a))
            syllables.append(Syllable(Gen.Y, b))
        return Word.from_syllables(syllables)


CyclicForm = Union[Trivial, GeneratorPower, ReducedCyclic]


def cyclic_reduce(w: Word) -> CyclicForm:
    """Strip conjugating prefix/suffix pairs and canonicalize the rotation."""
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0].gen is syl[-1].gen:
        merged = syl[-1].exp + syl[0].exp
        gen = syl[0].gen
        syl = syl[1:-1]
        if merged:
            syl.append(Syllable(gen, merged))
    if not syl:
        return Trivial()
    if len(syl) == 1:
        return GeneratorPower(syl[0].gen, syl[0].exp)
    if syl[0].gen is Gen.Y:
        syl = syl[1:] + syl[:1]
    pairs = [(syl[i].exp, syl[i + 1].exp) for i in range(0, len(syl), 2)]
    rotations = [tuple(pairs[i:] + pairs[:i]) for i in range(len(pairs))]
    return ReducedCyclic(min(rotations))


# ----------------------------------------------------------------------
# parsing


def parse_word(text: str) -> Word:
    """Parse the word grammar; raises ParseError with a 1-based position."""
    parser = _Parser(text)
    word = parser.parse_word()
    parser.skip_ws()
    if not parser.at_end():
        parser.fail("unexpected trailing input")
    return word


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.pos + 1)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def parse_word(self) -> Word:
        self.skip_ws()
        if self.peek() not in ("x", "y", "(", "["):
            self.fail("expected 'x', 'y', '(' or '['")
        word = Word.identity()
        while True:
            word = word * self.parse_factor()
            self.skip_ws()
            if self.peek() not in ("x", "y", "(", "["):
                return word

    def parse_factor(self) -> Word:
        atom = self.parse_atom()
        self.skip_ws()
        if self.peek() == "^":
            power_pos = self.pos
            self.pos += 1
            exponent = self.parse_exponent()
            # a power of a compound atom expands syllable by syllable
            if len(atom) > 1 and abs(exponent) * len(atom) > 1_000_000:
                self.pos = power_pos
                self.fail("exponent too large to expand")
            return atom ** exponent
        return atom

    def parse_atom(self) -> Word:
        self.skip_ws()
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return Word.x_pow(1)
        if ch == "y":
            self.pos += 1
            return Word.y_pow(1)
        if ch == "(":
            self.pos += 1
            inner = self.parse_word()
            self.skip_ws()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            u = self.parse_word()
            self.skip_ws()
            self.expect(",")
            v = self.parse_word()
            self.skip_ws()
            self.expect("]")
            return commutator(u, v)
        self.fail("expected 'x', 'y', '(' or '['")

    def parse_exponent(self) -> int:
        self.skip_ws()
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        if not self.peek().isdigit():
            self.fail("expected digits after '^'")
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        return sign * int(self.text[start : self.pos])
