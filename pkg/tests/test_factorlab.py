import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from arclosed import arformula, factorlab, wordgen
from arclosed.errors import HorizonError, WordError
from arclosed.factorlab import (
    classify_closed,
    closed_census,
    complete_first_returns,
    frontier,
    is_closed,
    is_rich,
    longest_border,
    phi_fiber,
    phi_index,
    special_factors,
)
from arclosed.wordgen import FIBONACCI, TRIBONACCI, bispecial_prefixes, palindromic_suffix_of_step
from conftest import directives, random_directive


@pytest.mark.parametrize("w, expected", [("aabaaabaa", "aabaa"), ("ab", ""), ("aa", "a")])
def test_longest_border(w, expected):
    assert longest_border(w) == expected


@given(st.text(alphabet="ab", min_size=1, max_size=30))
def test_longest_border_brute(w):
    assert longest_border(w) == max(oracles.borders(w), key=len)


@pytest.mark.parametrize("w, expected", [
    ("aabaaabaa", True),
    ("abaabbababbaaba", False),
    ("b", True),
    ("ab", False),
    ("abaab", True),
])
def test_is_closed(w, expected):
    assert is_closed(w) is expected
    assert factorlab.is_closed_by_border(w) is expected


def test_empty_word_is_neither():
    with pytest.raises(WordError, match="neither open nor closed"):
        is_closed("")


@given(st.text(alphabet="abc", min_size=1, max_size=24))
@settings(max_examples=400)
def test_closed_forms_agree_with_definition(w):
    expected = oracles.closed(w)
    assert is_closed(w) is expected
    assert factorlab.is_closed_by_border(w) is expected


def test_frontier():
    assert frontier("aabaaabaa") == "aabaa"
    assert frontier("a") == ""
    assert frontier("abaab") == "ab"
    with pytest.raises(WordError, match="frontier undefined"):
        frontier("ab")


def test_complete_first_returns():
    assert complete_first_returns("a", "abaababa") == ["aa", "aba"]
    assert complete_first_returns("aba", "abaababaabaababaa") == ["abaaba", "ababa"]
    assert complete_first_returns("ab", "ab") == []


@given(st.text(alphabet="ab", min_size=1, max_size=4), st.text(alphabet="ab", max_size=40))
def test_returns_brute(v, host):
    got = complete_first_returns(v, host)
    assert set(got) == oracles.complete_returns(v, host)
    for r in got:
        assert r.startswith(v) and r.endswith(v) and oracles.occ(v, r) == 2


def test_is_rich_examples():
    assert is_rich("abaaba")
    assert factorlab.palindrome_count("abaaba") == 7
    assert is_rich("")
    assert not is_rich("abcabc")
    assert factorlab.palindrome_count("abcabc") == 4


@given(st.text(alphabet="abc", max_size=30))
@settings(max_examples=300)
def test_richness_criteria_agree(w):
    assert factorlab.palindrome_count(w) == len(oracles.palindromes(w))
    assert (len(oracles.palindromes(w)) == len(w) + 1) is factorlab.is_rich_by_suffixes(w)


def test_special_factors():
    assert special_factors("aab", "left") == [""]
    assert special_factors("aab", "right") == ["", "a"]
    assert special_factors("aaaa", "left") == []


@given(st.text(alphabet="abc", min_size=1, max_size=18), st.sampled_from(["left", "right"]))
def test_special_factors_brute(w, side):
    assert set(special_factors(w, side)) == oracles.special(w, side)


def test_phi_index():
    B = bispecial_prefixes(FIBONACCI, 6)
    assert phi_index("", B) == 0
    assert phi_index("b", B) == 2
    assert phi_index("aa", B) == 3
    with pytest.raises(HorizonError, match="insufficient bispecial horizon"):
        phi_index("bb", B)


def test_phi_fiber_fibonacci():
    B = bispecial_prefixes(FIBONACCI, 4)
    S = [None] + [palindromic_suffix_of_step(FIBONACCI, k) for k in range(1, 5)]
    assert phi_fiber(1, B, S[1]) == ["a"]
    assert phi_fiber(2, B, S[2]) == ["b", "ab", "ba", "aba"]
    assert len(phi_fiber(3, B, S[3])) == 9


@given(directives())
@settings(max_examples=40, deadline=None)
def test_fiber_is_level_preimage(d):
    """The fiber of S_k equals the set of factors of B_k that are not factors of B_{k-1}."""
    B = bispecial_prefixes(d, 8)
    for k in range(1, 9):
        preimage = sorted(
            {v for v in oracles.all_factors(B[k]) if v and v not in B[k - 1]},
            key=lambda v: (len(v), v),
        ) if len(B[k]) <= 60 else None
        fib = phi_fiber(k, B, palindromic_suffix_of_step(d, k))
        if preimage is not None:
            assert fib == preimage
        for v in fib:
            assert oracles.occ(v, B[k]) == 1 if len(B[k]) <= 400 else B[k].count(v) == 1


def test_classify_closed():
    a = classify_closed("a", FIBONACCI)
    assert (a.frontier, a.phi_index, a.type_letter) == ("", 0, "a")
    u = classify_closed("abaaba", FIBONACCI)
    assert (u.frontier, u.phi_index, u.type_letter) == ("aba", 2, "a")
    rt = arformula.return_table(FIBONACCI, 2)
    assert len("abaaba") - len("aba") == rt.p[2]["a"] == 3
    aa = classify_closed("aa", FIBONACCI)
    assert (aa.frontier, aa.phi_index) == ("a", 1)
    assert len("aa") - len("a") == rt.p[1][aa.type_letter] == 1


def test_classify_rejects():
    with pytest.raises(WordError, match="open"):
        classify_closed("ab", FIBONACCI)
    with pytest.raises(WordError, match="not a factor"):
        classify_closed("bb", FIBONACCI)


@pytest.mark.parametrize("d", [FIBONACCI, TRIBONACCI, wordgen.parse_directive("ab:aacb")])
def test_partition_into_level_type_classes(d):
    """u -> (level of frontier, type) is well defined; fr is injective per class;
    class sizes at each length match the fiber counts."""
    n_max = 40
    host, ok = factorlab.saturated_prefix(d, n_max)
    assert ok
    rt = arformula.return_table(d, 0)
    rt.grow_past(n_max)
    classes: dict[tuple[int, str], dict[str, str]] = {}
    for n in range(1, n_max + 1):
        for u in wordgen.factors(host, n):
            if not is_closed(u):
                continue
            c = classify_closed(u, d)
            assert len(u) - len(c.frontier) == rt.p[c.phi_index][c.type_letter]
            fr_map = classes.setdefault((c.phi_index, c.type_letter), {})
            assert c.frontier not in fr_map
            fr_map[c.frontier] = u
    for (k, a), fr_map in classes.items():
        for n in range(1, n_max + 1):
            got = sum(1 for u in fr_map.values() if len(u) == n)
            iv = rt.interval(k, a)
            expected = arformula.boundary_distance(n, iv) + 1 if n in iv else 0
            assert got == expected, (k, a, n)


def test_census_fibonacci_table():
    c = closed_census(FIBONACCI, 15)
    assert c.f_closed == [2, 1, 2, 3, 4, 3, 4, 5, 6, 5, 6, 7, 8, 9, 10]
    assert c.all_complete


def test_census_small_cases():
    c = closed_census(TRIBONACCI, 2)
    assert c.f_closed == [3, 1] and c.p == [3, 5]
    c = closed_census(FIBONACCI, 1)
    assert (c.f_closed, c.f_open, c.p) == ([2], [0], [2])


def test_census_counts_add_up():
    c = closed_census(TRIBONACCI, 60)
    for n, p, fc, fo, ok in c.rows():
        assert fc + fo == p
        assert ok and p == 2 * n + 1


def test_census_budget_flag():
    with pytest.warns(UserWarning, match="incomplete"):
        c = closed_census(FIBONACCI, 100, budget=50)
    assert not c.all_complete
    assert factorlab.budget_error(c) is not None


def test_census_rejects_non_ar():
    with pytest.raises(WordError):
        closed_census(wordgen.parse_directive(":a", "ab"), 5)


def test_returns_count_equals_alphabet_size():
    rng = random.Random(5)
    for d in [FIBONACCI, TRIBONACCI] + [random_directive(rng) for _ in range(4)]:
        host, _ = factorlab.saturated_prefix(d, 12)
        for n in range(1, 13):
            for v in wordgen.factors(host, n):
                rets, ok = factorlab.guarded_returns(v, d)
                assert ok and len(rets) == d.t


def test_stabilized_prefix_paperfolding():
    gen = lambda L: wordgen.corpus_word("paperfolding", L)  # noqa: E731
    _, facs, ok = factorlab.stabilized_prefix(gen, 5)
    assert ok and len(facs) == len(wordgen.factors(gen(10**4), 5))
    _, _, ok = factorlab.stabilized_prefix(gen, 64, budget=100)
    assert not ok
