"""Closed prefixes and suffixes of finite binary words, and open-word splitting."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WordError
from .factorlab import is_closed, special_factors_both


def shortest_unrepeated_prefix(w: str) -> int:
    """Length H of the shortest prefix of ``w`` occurring exactly once in ``w``."""
    if not w:
        raise WordError("empty word")
    for h in range(1, len(w) + 1):
        if w.find(w[:h], 1) == -1:
            return h
    raise AssertionError("unreachable: w itself occurs once")


def shortest_unrepeated_suffix(w: str) -> int:
    return shortest_unrepeated_prefix(w[::-1])


@dataclass
class PrefixSuffixProfile:
    word: str
    H: int
    K: int
    A: frozenset[int]
    A_prime: frozenset[int]

    @property
    def B(self) -> frozenset[int]:
        return frozenset(range(1, len(self.word) + 1)) - self.A

    @property
    def B_prime(self) -> frozenset[int]:
        return frozenset(range(1, len(self.word) + 1)) - self.A_prime


def prefix_suffix_profile(w: str) -> PrefixSuffixProfile:
    if not w:
        raise WordError("empty word")
    n = len(w)
    A = frozenset(i for i in range(1, n + 1) if is_closed(w[:i]))
    A_prime = frozenset(i for i in range(1, n + 1) if is_closed(w[i - 1:]))
    prof = PrefixSuffixProfile(w, shortest_unrepeated_prefix(w),
                               shortest_unrepeated_suffix(w), A, A_prime)
    assert len(A) == prof.H, f"{w!r}: {len(A)} closed prefixes but H = {prof.H}"
    assert len(A_prime) == prof.K, f"{w!r}: {len(A_prime)} closed suffixes but K = {prof.K}"
    return prof


def _check_binary(w: str):
    if len(set(w)) > 2:
        raise WordError("Section-3 lemmas are binary-only")


def special_counts(w: str) -> tuple[int, int]:
    """(number of left special factors, number of right special factors).

    Counted by enumeration; the identities S_left = |w| - H and
    S_right = |w| - K are asserted.
    """
    if not w:
        raise WordError("empty word")
    _check_binary(w)
    left, right = special_factors_both(w)
    sl, sr = len(left), len(right)
    assert sl == len(w) - shortest_unrepeated_prefix(w), w
    assert sr == len(w) - shortest_unrepeated_suffix(w), w
    return sl, sr


def decompose_open(w: str) -> tuple[str, str]:
    """Split an open word into a closed prefix and a closed suffix.

    Takes the smallest i with w[:i] closed and w[i:] closed.
    """
    if not w:
        raise WordError("empty word")
    if is_closed(w):
        raise WordError("nothing to decompose")
    prof = prefix_suffix_profile(w)
    for i in sorted(prof.A):
        if i + 1 in prof.A_prime:
            return w[:i], w[i:]
    raise WordError(f"no closed/closed split: |A| = {len(prof.A)}, |B'| = {len(prof.B_prime)}")
