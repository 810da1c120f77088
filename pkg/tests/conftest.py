import random

import pytest
from hypothesis import strategies as st

from arclosed.wordgen import DirectiveSpec


def random_directive(rng: random.Random, t: int | None = None) -> DirectiveSpec:
    """Random preperiod <= 4, random period <= 6 containing every letter."""
    t = t or rng.choice([2, 3, 4])
    al = "abcd"[:t]
    per = list(al) + [rng.choice(al) for _ in range(rng.randint(0, 6 - t))]
    rng.shuffle(per)
    pre = "".join(rng.choice(al) for _ in range(rng.randint(0, 4)))
    return DirectiveSpec(tuple(al), pre, "".join(per))


@st.composite
def directives(draw, sizes=(2, 3, 4)):
    t = draw(st.sampled_from(sizes))
    al = "abcd"[:t]
    letter = st.sampled_from(al)
    extra = draw(st.lists(letter, max_size=6 - t))
    per = draw(st.permutations(list(al) + extra))
    pre = draw(st.text(alphabet=al, max_size=4))
    return DirectiveSpec(tuple(al), pre, "".join(per))


@pytest.fixture
def rng():
    return random.Random(20181)
