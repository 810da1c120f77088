"""Closed-factor complexity of Arnoux-Rauzy words from the return-length recursion.

For each level k the table stores the bispecial length b_k and the lengths
p_a^(k) of the t first returns to B_k.  A closed factor of length n whose
frontier lives at level k and whose type is a contributes to the interval

    I_{k,a} = [b_k - 2 p_k + p_a^(k) + 2,  b_k + p_a^(k)],   p_k = min_a p_a^(k)

with weight d(n, I_{k,a}) + 1, d being the distance to the nearer endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .errors import HorizonError, WordError
from .wordgen import DirectiveSpec


class Interval(NamedTuple):
    lo: int
    hi: int

    def __contains__(self, n):
        return self.lo <= n <= self.hi

    @property
    def width(self) -> int:
        return self.hi - self.lo


def boundary_distance(n: int, iv: Interval) -> int:
    if n not in iv:
        raise ValueError(f"{n} is not in [{iv.lo}, {iv.hi}]")
    return min(n - iv.lo, iv.hi - n)


@dataclass
class ReturnTable:
    """Levels 0..K of (a_k, b_k, p_a^(k), p_k); ``letters[0]`` is None."""

    directive: DirectiveSpec
    letters: list[str | None] = field(default_factory=lambda: [None])
    b: list[int] = field(default_factory=lambda: [0])
    p: list[dict[str, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.p:
            self.p.append({a: 1 for a in self.directive.alphabet})

    @property
    def depth(self) -> int:
        return len(self.b) - 1

    def p_min(self, k: int) -> int:
        return min(self.p[k].values())

    def q(self, k: int) -> int:
        """Largest return length at level k (the other return, when t = 2)."""
        return max(self.p[k].values())

    def grow(self, K: int) -> ReturnTable:
        d = self.directive
        t = d.t
        while self.depth < K:
            k = self.depth + 1
            ak = d.letter(k)
            prev = self.p[-1]
            cur = {a: prev[a] + prev[ak] for a in d.alphabet}
            cur[ak] = prev[ak]
            num = sum(cur.values()) - t
            bk, rem = divmod(num, t - 1)
            if rem:
                raise ArithmeticError(f"b_{k}: {num} not divisible by {t - 1}")
            if bk - self.b[-1] != cur[ak] or cur[ak] != min(cur.values()):
                raise ArithmeticError(f"return table inconsistent at level {k}")
            self.letters.append(ak)
            self.b.append(bk)
            self.p.append(cur)
        return self

    def grow_past(self, n: int) -> int:
        """Grow until b_{K-1} + 2 > n and return that K.

        Every level k >= K has lo(I_{k,a}) >= b_{k-1} + 2 > n.
        """
        K = 1
        while True:
            self.grow(K - 1)
            if self.b[K - 1] + 2 > n:
                return K
            K += 1

    def interval(self, k: int, a: str) -> Interval:
        if not 0 <= k <= self.depth:
            raise IndexError(f"level {k} outside table depth {self.depth}")
        pk, pa, bk = self.p_min(k), self.p[k][a], self.b[k]
        return Interval(bk - 2 * pk + pa + 2, bk + pa)

    def j_interval(self, k: int) -> Interval:
        """Lengths of the level-k frontier candidates, [b_k - 2p_k + 2, b_k]."""
        return Interval(self.b[k] - 2 * self.p_min(k) + 2, self.b[k])


def return_table(d: DirectiveSpec, K: int) -> ReturnTable:
    if K < 0:
        raise ValueError("K must be non-negative")
    if not d.ar_valid:
        raise WordError("directive not AR-valid")
    return _cached_table(d).grow(K)


@lru_cache(maxsize=256)
def _cached_table(d: DirectiveSpec) -> ReturnTable:
    return ReturnTable(d)


def interval_I(k: int, a: str, rt: ReturnTable) -> Interval:
    return rt.interval(k, a)


class Term(NamedTuple):
    k: int
    letter: str
    interval: Interval
    distance: int


def closed_complexity_terms(d: DirectiveSpec, n: int) -> list[Term]:
    """Every (level, type) pair whose interval contains ``n``, with its distance."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rt = return_table(d, 0)
    try:
        K = rt.grow_past(n)
    except HorizonError:
        raise HorizonError(f"directive block too short to determine f^c({n})") from None
    terms = []
    for k in range(K):
        for a in d.alphabet:
            iv = rt.interval(k, a)
            if n in iv:
                terms.append(Term(k, a, iv, boundary_distance(n, iv)))
    return terms


def closed_complexity(d: DirectiveSpec, n: int) -> int:
    return sum(term.distance + 1 for term in closed_complexity_terms(d, n))


def determined_up_to(d: DirectiveSpec) -> int | None:
    """Largest n whose closed complexity the directive determines (None = all)."""
    if d.horizon is None:
        return None
    rt = return_table(d, d.horizon)
    return rt.b[d.horizon] + 1


def closed_complexity_profile(d: DirectiveSpec, n_max: int) -> list[int]:
    """[f^c(1), ..., f^c(n_max)] from one table, accumulating interval by interval."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rt = return_table(d, 0)
    try:
        K = rt.grow_past(n_max)
    except HorizonError:
        raise HorizonError(
            f"directive block determines f^c only up to n = {determined_up_to(d)}"
        ) from None
    out = [0] * (n_max + 1)
    for k in range(K):
        for a in d.alphabet:
            lo, hi = rt.interval(k, a)
            for n in range(max(lo, 1), min(hi, n_max) + 1):
                out[n] += min(n - lo, hi - n) + 1
    return out[1:]


def sturmian_closed_complexity(d: DirectiveSpec, n: int) -> int:
    """Binary case written with P_k = [q_k, q_k+2p_k-2] and Q_k = [2q_k-p_k, 2q_k+p_k-2]."""
    if d.t != 2:
        raise WordError("Sturmian specialization requires binary alphabet")
    if n < 1:
        raise ValueError("n must be >= 1")
    rt = return_table(d, 0)
    K = rt.grow_past(n)
    total = 0
    for k in range(K):
        pk, qk = rt.p_min(k), rt.q(k)
        for iv in (Interval(qk, qk + 2 * pk - 2), Interval(2 * qk - pk, 2 * qk + pk - 2)):
            if n in iv:
                total += boundary_distance(n, iv) + 1
    return total


def open_complexity(d: DirectiveSpec, n: int) -> int:
    return (d.t - 1) * n + 1 - closed_complexity(d, n)


def liminf_witness(d: DirectiveSpec, m: int) -> tuple[int, int]:
    """(j, N): least j >= 1 with p_j - 1 > 2m, and N = b_j + 2.

    f^c(n) >= m then holds for every n >= N.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    rt = return_table(d, 1)
    j = 1
    while True:
        rt.grow(j)
        if rt.p_min(j) - 1 > 2 * m:
            return j, rt.b[j] + 2
        j += 1


def fine_wilf_ok(rt: ReturnTable, B: str, k: int) -> bool:
    """Return lengths at level k are coprime and each is a period of B_k."""
    ps = list(rt.p[k].values())
    g = 0
    for x in ps:
        g = gcd(g, x)
    if g != 1:
        return False
    return all(q >= len(B) or B[q:] == B[:-q] for q in ps)
