"""Generation of Arnoux-Rauzy / episturmian prefixes and named corpus words.

Words are plain ``str`` objects throughout the package; an alphabet is a
tuple of single-character letters whose order fixes iteration and CSV order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DirectiveError, HorizonError, WordError

DEFAULT_ALPHABETS = {2: ("a", "b"), 3: ("a", "b", "c"), 4: ("a", "b", "c", "d")}


@dataclass(frozen=True)
class DirectiveSpec:
    """Eventually periodic directive sequence ``preperiod . period^omega``.

    A truncated spec (``truncated=True``, empty period) stands for a finite
    directive block whose continuation is unknown; queries past the block
    raise :class:`HorizonError` instead of guessing.
    """

    alphabet: tuple[str, ...]
    preperiod: str = ""
    period: str = ""
    truncated: bool = False

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DirectiveError(f"alphabet letters must be distinct: {self.alphabet!r}")
        if any(len(a) != 1 for a in self.alphabet):
            raise DirectiveError("alphabet letters must be single characters")
        stray = set(self.preperiod + self.period) - set(self.alphabet)
        if stray:
            raise DirectiveError(f"letters {sorted(stray)} not in alphabet {self.alphabet!r}")
        if self.truncated:
            if self.period:
                raise DirectiveError("a truncated directive has no period")
        elif not self.period:
            raise DirectiveError("period must be non-empty")

    @property
    def t(self) -> int:
        return len(self.alphabet)

    @property
    def ar_valid(self) -> bool:
        # Truncated blocks cannot be refuted; validity only concerns the period.
        if self.truncated:
            return self.t >= 2
        return self.t >= 2 and set(self.period) == set(self.alphabet)

    @property
    def horizon(self) -> int | None:
        """Number of known directive letters, or None when infinite."""
        return len(self.preperiod) if self.truncated else None

    def letter(self, k: int) -> str:
        """The k-th directive letter a_k (1-based)."""
        if k < 1:
            raise ValueError("directive letters are indexed from 1")
        if k <= len(self.preperiod):
            return self.preperiod[k - 1]
        if self.truncated:
            raise HorizonError(f"directive block has only {len(self.preperiod)} letters")
        return self.period[(k - 1 - len(self.preperiod)) % len(self.period)]

    def __str__(self):
        return f"{self.preperiod}:{self.period}" + ("" if not self.truncated else "...")


def parse_directive(text: str, alphabet: str | None = None) -> DirectiveSpec:
    """Parse ``"<preperiod>:<period>"``, e.g. ``":ab"`` or ``"a:bc"``.

    The alphabet is the characters in order of first appearance unless
    ``alphabet`` is given.
    """
    if text.count(":") != 1:
        raise DirectiveError(f"directive must look like 'pre:period', got {text!r}")
    pre, per = text.split(":")
    if not per:
        raise DirectiveError("period must be non-empty")
    if alphabet is None:
        letters = tuple(dict.fromkeys(pre + per))
    else:
        letters = tuple(alphabet)
    return DirectiveSpec(letters, pre, per)


def longest_palindromic_suffix(w: str) -> str:
    if not w:
        raise WordError("empty word")
    # A suffix of w that equals a prefix of reversed(w) is a palindrome.
    r = w[::-1]
    s = r + "\0" + w
    pi = _prefix_function(s)
    return w[len(w) - pi[-1]:]


def _prefix_function(s: str) -> list[int]:
    pi = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        c = s[i]
        while k and s[k] != c:
            k = pi[k - 1]
        if s[k] == c:
            k += 1
        pi[i] = k
    return pi


def palindromic_closure(w: str) -> str:
    """Shortest palindrome having ``w`` as a prefix."""
    s = longest_palindromic_suffix(w)
    x = w[: len(w) - len(s)]
    return x + s + x[::-1]


@lru_cache(maxsize=256)
def _store(d: DirectiveSpec) -> tuple[list[str], dict[str, int]]:
    return [""], {}


def _extend(d: DirectiveSpec, K: int) -> list[str]:
    B, last = _store(d)
    while len(B) <= K:
        k = len(B)
        a = d.letter(k)
        # Palindromic suffixes of the palindrome B_{k-1} are the earlier B_j,
        # and the letter before suffix B_j is a_{j+1}.  So the longest
        # palindromic suffix of B_{k-1}a is aB_ja for the largest j < k-1
        # with a_{j+1} = a, or just a.
        j = last.get(a)
        s_len = 1 if j is None else len(B[j]) + 2
        w = B[-1] + a
        x = w[: len(w) - s_len]
        B.append(w + x[::-1])
        last[a] = k - 1
    return B


def bispecial_prefixes(d: DirectiveSpec, K: int) -> list[str]:
    """[B_0, ..., B_K] with B_0 = '' and B_k the palindromic closure of B_{k-1}a_k."""
    if K < 0:
        raise ValueError("K must be non-negative")
    return _extend(d, K)[: K + 1]


def palindromic_suffix_of_step(d: DirectiveSpec, k: int) -> str:
    """S_k, the longest palindromic suffix of B_{k-1}a_k (k >= 1)."""
    if k < 1:
        raise ValueError("S_k is defined for k >= 1")
    B = _extend(d, k)
    x_len = len(B[k]) - len(B[k - 1]) - 1
    return B[k][x_len: len(B[k]) - x_len]


def characteristic_prefix(d: DirectiveSpec, min_len: int, budget: int | None = None) -> str:
    """B_K for the least K with |B_K| >= min_len.

    Non-AR-valid directives are still generated (episturmian words); callers
    that need Arnoux-Rauzy structure check ``d.ar_valid`` themselves. For a
    unary period the word never grows past a point and ``WordError`` is raised
    once the budget (default 10**7 symbols) would be exceeded.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    cap = budget if budget is not None else 10**7
    k = 0
    while True:
        k += 1
        try:
            B = _extend(d, k)[k]
        except HorizonError:
            raise HorizonError(
                f"directive block ends at B_{k - 1} of length {len(_extend(d, k - 1)[-1])} "
                f"< {min_len}"
            ) from None
        if len(B) >= min_len:
            return B
        if len(B) > cap:
            raise WordError(f"prefix budget {cap} exhausted before length {min_len}")


def sturmian_directive_from_cf(cf) -> DirectiveSpec:
    """Directive block a^(d1-1) b^d2 a^d3 b^d4 ... for slope [0; d1, d2, ...].

    The result is truncated: it only covers the supplied terms.
    """
    cf = [int(x) for x in cf]
    if not cf or any(x < 1 for x in cf):
        raise DirectiveError("invalid continued fraction")
    parts = []
    for i, d in enumerate(cf):
        letter = "a" if i % 2 == 0 else "b"
        parts.append(letter * (d - 1 if i == 0 else d))
    return DirectiveSpec(("a", "b"), "".join(parts), "", truncated=True)


def cf_value(cf) -> Fraction:
    """Exact value of [0; d1, ..., dm]."""
    x = Fraction(0)
    for d in reversed(cf):
        x = 1 / (d + x)
    return x


FIBONACCI = DirectiveSpec(("a", "b"), "", "ab")
TRIBONACCI = DirectiveSpec(("a", "b", "c"), "", "abc")

MORPHISMS = {
    "fibonacci": {"a": "ab", "b": "a"},
    "tribonacci": {"a": "ab", "b": "ac", "c": "a"},
    "pf_morphism": {"a": "ac", "b": "ad", "c": "bc", "d": "bd"},
}
PAPERFOLDING_PROJECTION = str.maketrans({"a": "0", "c": "0", "b": "1", "d": "1"})
CORPUS_NAMES = ("fibonacci", "tribonacci", "pf_morphism", "paperfolding")


def iterate_morphism(morphism: dict[str, str], start: str, length: int) -> str:
    """Prefix of the fixed point, iterating until the image reaches ``length``."""
    w = start
    while len(w) < length:
        nxt = "".join(morphism[c] for c in w)
        if len(nxt) <= len(w):
            raise WordError("morphism is not prolongable on the start letter")
        w = nxt
    return w[:length]


def corpus_word(name: str, length: int) -> str:
    if length < 1:
        raise ValueError("length must be >= 1")
    if name == "fibonacci":
        return characteristic_prefix(FIBONACCI, length)[:length]
    if name == "tribonacci":
        return characteristic_prefix(TRIBONACCI, length)[:length]
    if name == "pf_morphism":
        return iterate_morphism(MORPHISMS["pf_morphism"], "a", length)
    if name == "paperfolding":
        return corpus_word("pf_morphism", length).translate(PAPERFOLDING_PROJECTION)
    raise WordError(f"unknown corpus word {name!r}; choose from {', '.join(CORPUS_NAMES)}")


def factors(w: str, n: int) -> set[str]:
    if n < 1:
        raise ValueError("factor length must be >= 1")
    if n > len(w):
        raise WordError("window exceeds word")
    return {w[i:i + n] for i in range(len(w) - n + 1)}
