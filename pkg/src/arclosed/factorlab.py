"""Word predicates, first returns, the level map and the brute-force census."""

from __future__ import annotations

import logging
import warnings
from collections import Counter
from dataclasses import dataclass, field

from . import wordgen
from .errors import BudgetExceeded, HorizonError, WordError
from .wordgen import DirectiveSpec

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7


def longest_border(w: str) -> str:
    """Longest proper prefix of ``w`` that is also a suffix ('' if unbordered)."""
    if not w:
        raise WordError("empty word")
    return w[: wordgen._prefix_function(w)[-1]]


def _longest_repeated_prefix(w: str) -> int:
    # "prefix of length m occurs again at a position > 0" is monotone in m.
    lo, hi = 0, len(w) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if w.find(w[:mid], 1) != -1:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_closed(w: str) -> bool:
    """True iff ``w`` is a letter or a complete first return to its longest border.

    Uses the equivalent form: the longest prefix of ``w`` having a second
    occurrence must occur next exactly as a suffix.
    """
    if not w:
        raise WordError("ε is neither open nor closed")
    n = len(w)
    if n == 1:
        return True
    m = _longest_repeated_prefix(w)
    return m > 0 and w.find(w[:m], 1) == n - m


def is_closed_by_border(w: str) -> bool:
    """Definition-level check: longest border occurs exactly twice in ``w``."""
    if not w:
        raise WordError("ε is neither open nor closed")
    if len(w) == 1:
        return True
    v = longest_border(w)
    return bool(v) and count_occurrences(v, w) == 2


def count_occurrences(v: str, w: str) -> int:
    """Number of (possibly overlapping) occurrences of non-empty ``v`` in ``w``."""
    return len(occurrences(v, w))


def occurrences(v: str, w: str) -> list[int]:
    out = []
    i = w.find(v)
    while i != -1:
        out.append(i)
        i = w.find(v, i + 1)
    return out


def frontier(w: str) -> str:
    if not is_closed(w):
        raise WordError("frontier undefined for open words")
    return "" if len(w) == 1 else longest_border(w)


def complete_first_returns(v: str, host: str) -> list[str]:
    """Distinct complete first returns to ``v`` seen in ``host``, sorted."""
    if not v:
        raise WordError("returns to the empty word are not defined")
    pos = occurrences(v, host)
    return sorted({host[i:j + len(v)] for i, j in zip(pos, pos[1:])})


def _palindromic_factors(w: str) -> set[str]:
    pals = {""}
    n = len(w)
    for center in range(2 * n - 1):
        lo, hi = center // 2, center // 2 + center % 2
        while lo >= 0 and hi < n and w[lo] == w[hi]:
            lo -= 1
            hi += 1
        # Walk inward from the maximal palindrome; its inner ones are
        # already present once one of them is.
        lo, hi = lo + 1, hi - 1
        while lo <= hi:
            p = w[lo:hi + 1]
            if p in pals:
                break
            pals.add(p)
            lo, hi = lo + 1, hi - 1
    return pals


def palindrome_count(w: str) -> int:
    """Number of distinct palindromic factors of ``w``, ε included."""
    return len(_palindromic_factors(w))


def is_rich_by_suffixes(w: str) -> bool:
    """Every prefix's longest palindromic suffix is uni-occurrent in that prefix."""
    suffixes: list[int] = []  # lengths of palindromic suffixes of the current prefix
    for i, c in enumerate(w):
        prefix_len = i + 1
        new = [1]
        for L in suffixes:
            if i - L - 1 >= 0 and w[i - L - 1] == c:
                new.append(L + 2)
        if i >= 1 and w[i - 1] == c:
            new.append(2)
        suffixes = sorted(set(new), reverse=True)
        longest = suffixes[0]
        v = w[:prefix_len]
        if v.find(v[prefix_len - longest:]) != prefix_len - longest:
            return False
    return True


def is_rich(w: str) -> bool:
    """``w`` has |w|+1 distinct palindromic factors.

    Cross-checked against :func:`is_rich_by_suffixes`; disagreement is a bug
    and raises ``AssertionError``.
    """
    by_count = palindrome_count(w) == len(w) + 1
    assert by_count == is_rich_by_suffixes(w), f"richness criteria disagree on {w!r}"
    return by_count


def _all_factors(host: str) -> set[str]:
    n = len(host)
    return {host[i:j] for i in range(n) for j in range(i + 1, n + 1)}


def _special(facs: set[str], side: str) -> list[str]:
    if side == "left":
        ext = Counter(f[1:] for f in facs)
    elif side == "right":
        ext = Counter(f[:-1] for f in facs)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return sorted((v for v, c in ext.items() if c >= 2), key=lambda v: (len(v), v))


def special_factors(host: str, side: str) -> list[str]:
    """Left or right special factors of ``host`` (ε included when it qualifies)."""
    if not host:
        raise WordError("empty word")
    return _special(_all_factors(host), side)


def special_factors_both(host: str) -> tuple[list[str], list[str]]:
    if not host:
        raise WordError("empty word")
    facs = _all_factors(host)
    return _special(facs, "left"), _special(facs, "right")


def phi_index(v: str, bispecials) -> int:
    """Least k with ``v`` a factor of B_k."""
    if not v:
        return 0
    for k, B in enumerate(bispecials):
        if v in B:
            return k
    raise HorizonError("insufficient bispecial horizon")


def phi_fiber(k: int, bispecials, s_k: str) -> list[str]:
    """All factors of B_k containing S_k (these are exactly the level-k words)."""
    if k < 1:
        raise ValueError("fibers are indexed from k = 1")
    B = bispecials[k]
    i = B.find(s_k)
    if i == -1:
        raise WordError("S_k is not a factor of B_k")
    j = i + len(s_k)
    return sorted({B[lo:hi] for lo in range(i + 1) for hi in range(j, len(B) + 1)},
                  key=lambda v: (len(v), v))


def level_depth_for(d: DirectiveSpec, v: str) -> list[str]:
    """Bispecial prefixes deep enough that ``v`` is a factor of the last one."""
    k = 0
    while True:
        B = wordgen.bispecial_prefixes(d, k)
        if v in B[-1]:
            return B
        k += 1
        if len(B[-1]) > DEFAULT_BUDGET:
            raise HorizonError(f"{v!r} not found within the prefix budget")


@dataclass
class ClosedAnalysis:
    word: str
    is_closed: bool
    frontier: str
    phi_index: int | None = None
    type_letter: str | None = None


def classify_closed(u: str, d: DirectiveSpec) -> ClosedAnalysis:
    """Frontier, level and type of a closed factor ``u`` of the AR word of ``d``."""
    if not d.ar_valid:
        raise WordError("classification needs an AR-valid directive")
    if not is_closed(u):
        raise WordError(f"{u!r} is open")
    host, _ = saturated_prefix(d, len(u))
    if u not in host:
        raise WordError(f"{u!r} is not a factor")
    if len(u) == 1:
        return ClosedAnalysis(u, True, "", 0, u)
    v = longest_border(u)
    B = level_depth_for(d, v)
    k = len(B) - 1
    Bk = B[k]
    i = Bk.find(v)
    u1, u2 = Bk[:i], Bk[i + len(v):]
    ret = u1 + u + u2
    # u1 u u2 must be a complete first return to B_k.
    assert ret.startswith(Bk) and ret.endswith(Bk) and count_occurrences(Bk, ret) == 2
    return ClosedAnalysis(u, True, v, k, ret[len(Bk)])


# -- saturation guards -------------------------------------------------------


def saturated_prefix(d: DirectiveSpec, n: int, budget: int = DEFAULT_BUDGET) -> tuple[str, bool]:
    """Shortest B_K containing all (t-1)n+1 factors of length ``n``.

    Returns ``(prefix, complete)``. When the budget or a truncated directive
    stops growth first, the longest available prefix is returned with
    ``complete=False``.
    """
    if not d.ar_valid:
        raise WordError("saturation guard requires an AR-valid directive")
    target = (d.t - 1) * n + 1
    k = 0
    prefix = ""
    while True:
        try:
            B = wordgen.bispecial_prefixes(d, k)[-1]
        except HorizonError:
            return prefix, False
        if len(B) > budget:
            return prefix, False
        prefix = B
        if len(B) >= n and len({B[i:i + n] for i in range(len(B) - n + 1)}) == target:
            return prefix, True
        k += 1


def stabilized_prefix(gen, n: int, budget: int = DEFAULT_BUDGET, start: int | None = None):
    """Doubling stabilization for words without a known complexity.

    ``gen(L)`` returns the length-L prefix. The factor set at length ``n`` must
    be identical for two consecutive doublings. Returns
    ``(prefix, factor_set, complete)``.
    """
    L = max(start or 4 * n, n)
    w, prev = "", None
    while L <= budget:
        w = gen(L)
        facs = wordgen.factors(w, n)
        if prev is not None and facs == prev:
            return w, facs, True
        prev = facs
        L *= 2
    return w, prev or set(), False


@dataclass
class FactorCensus:
    n_max: int
    p: list[int] = field(default_factory=list)
    f_closed: list[int] = field(default_factory=list)
    f_open: list[int] = field(default_factory=list)
    complete: list[bool] = field(default_factory=list)

    def rows(self):
        for i in range(len(self.p)):
            yield i + 1, self.p[i], self.f_closed[i], self.f_open[i], self.complete[i]

    @property
    def all_complete(self) -> bool:
        return all(self.complete)


def _classify_length(host: str, n: int) -> tuple[int, int, int]:
    facs = {host[i:i + n] for i in range(len(host) - n + 1)}
    closed = sum(1 for f in facs if is_closed(f))
    return len(facs), closed, len(facs) - closed


def closed_census(d: DirectiveSpec, n_max: int, budget: int = DEFAULT_BUDGET) -> FactorCensus:
    """Count closed and open factors by enumeration, lengths 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if not d.ar_valid:
        raise WordError("directive not AR-valid")
    host, ok = saturated_prefix(d, n_max, budget)
    target = lambda n: (d.t - 1) * n + 1  # noqa: E731
    census = FactorCensus(n_max)
    for n in range(1, n_max + 1):
        if len(host) < n:
            census.p.append(0)
            census.f_closed.append(0)
            census.f_open.append(0)
            census.complete.append(False)
            continue
        p, c, o = _classify_length(host, n)
        census.p.append(p)
        census.f_closed.append(c)
        census.f_open.append(o)
        census.complete.append(p == target(n))
    if not census.all_complete:
        bad = census.complete.index(False) + 1
        warnings.warn(f"census incomplete from length {bad} (prefix length {len(host)})",
                      stacklevel=2)
    elif not ok:  # pragma: no cover - completeness at n_max implies ok
        log.debug("saturation reported incomplete but every length saturated")
    return census


def word_census(gen, n_max: int, budget: int = DEFAULT_BUDGET) -> FactorCensus:
    """Census of a word with no assumed complexity, using doubling stabilization."""
    census = FactorCensus(n_max)
    for n in range(1, n_max + 1):
        _, facs, ok = stabilized_prefix(gen, n, budget)
        closed = sum(1 for f in facs if is_closed(f))
        census.p.append(len(facs))
        census.f_closed.append(closed)
        census.f_open.append(len(facs) - closed)
        census.complete.append(ok)
    return census


def budget_error(census: FactorCensus) -> BudgetExceeded | None:
    if census.all_complete:
        return None
    return BudgetExceeded(f"census incomplete at lengths "
                          f"{[n for n, *_, c in census.rows() if not c][:5]}...")


def guarded_returns(v: str, d: DirectiveSpec, budget: int = DEFAULT_BUDGET) -> tuple[list[str], bool]:
    """Complete first returns to factor ``v`` of the AR word of ``d``.

    The host prefix is saturated at length |v| + max_a p_a^(k), k the level of
    ``v``: every complete first return to ``v`` is at most that long, so all of
    them occur in the host.
    """
    from .arformula import return_table

    B = level_depth_for(d, v)
    k = len(B) - 1
    longest = len(v) + max(return_table(d, k).p[k].values())
    host, ok = saturated_prefix(d, longest, budget)
    return complete_first_returns(v, host), ok


def open_at_lengths(gen, lengths, budget: int = DEFAULT_BUDGET):
    """For each n: (n, #factors, #closed factors, complete) via doubling stabilization."""
    rows = []
    for n in lengths:
        _, facs, ok = stabilized_prefix(gen, n, budget)
        rows.append((n, len(facs), sum(1 for f in facs if is_closed(f)), ok))
    return rows
