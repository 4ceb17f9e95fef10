import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sl2wiggle.exact.laurent import LaurentPoly
from sl2wiggle.exact.mat2 import Mat2, identity_q, mat2_q
from sl2wiggle.words import Gen, Syllable, Word

nonzero_exponents = st.integers(min_value=-4, max_value=4).filter(lambda e: e != 0)

syllables = st.builds(Syllable, st.sampled_from([Gen.X, Gen.Y]), nonzero_exponents)

words = st.lists(syllables, max_size=8).map(Word.from_syllables)

nonzero_rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=8
).filter(lambda q: q != 0)

small_scalars = st.one_of(
    st.integers(min_value=-6, max_value=6),
    st.fractions(min_value=-4, max_value=4, max_denominator=4),
)

laurents = st.dictionaries(
    keys=st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    values=small_scalars,
    max_size=5,
).map(LaurentPoly)

nonzero_laurents = laurents.filter(bool)


def random_sl2(rng: random.Random, size: int = 4, steps: int = 3) -> Mat2:
    """Random determinantated-1 rational matrix as a product of elementary ones."""
    g = identity_q()
    for _ in range(steps):
        g = g * mat2_q(1, Fraction(rng.randint(-size, size), rng.randint(1, 3)), 0, 1)
        g = g * mat2_q(1, 0, Fraction(rng.randint(-size, size), rng.randint(1, 3)), 1)
    return g


def random_word(rng: random.Random, max_syllables: int = 6, max_exp: int = 3) -> Word:
    out = []
    for _ in range(rng.randint(0, max_syllables)):
        e = 0
        while e == 0:
            e = rng.randint(-max_exp, max_exp)
        out.append(Syllable(rng.choice([Gen.X, Gen.Y]), e))
    return Word.from_syllables(out)


def random_commutator_subgroup_word(rng: random.Random) -> Word:
    """Random element of the commutator subgroup: a product of commutators."""
    w = Word.identity()
    for _ in range(rng.randint(1, 2)):
        u = random_word(rng, max_syllables=2, max_exp=2)
        v = random_word(rng, max_syllables=2, max_exp=2)
        w = w * (u.inverse() * v.inverse() * u * v)
    return w


def random_nonzero_fraction(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound)) * rng.choice([1, -1])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
