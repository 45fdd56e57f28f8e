"""Factor queries: occurrences, returns, borders, interpretations."""
import itertools

import pytest

from privword import (
    ALPHA_RETURNS,
    BETA_RETURNS,
    BUILTIN_WORDS,
    CertificationTooShortError,
    EmptyPatternError,
    EmptyWordError,
    GAMMA_RETURNS,
    Interpretation,
    NonBinaryError,
    NotAFactorError,
    OutOfRangeError,
    PHI_MORPHISM,
    THETA_MORPHISM,
    borders,
    build_index,
    delete_ends,
    exchange,
    is_complete_first_return,
    is_primitive,
    matches_over,
    occurrence_count,
)


# === plain word operations ===

def test_delete_ends():
    assert delete_ends("011001", 0, 1) == "01100"
    assert delete_ends("abc", 0, 0) == "abc"
    assert delete_ends("ab", 1, 1) == ""
    with pytest.raises(OutOfRangeError):
        delete_ends("ab", 2, 1)


def test_occurrence_count():
    assert occurrence_count("0110", "01") == 1
    assert occurrence_count("00101100", "00") == 2
    assert occurrence_count("aaa", "aa") == 2
    with pytest.raises(EmptyPatternError):
        occurrence_count("0110", "")


def test_is_complete_first_return():
    assert is_complete_first_return("00101100", "00")
    assert is_complete_first_return("00", "0")
    # 00100 starts and ends with 00 and contains it exactly twice
    # (positions 1 and 4), so it is a complete first return
    assert is_complete_first_return("00100", "00")
    assert not is_complete_first_return("001000", "00")
    assert not is_complete_first_return("0010", "00")


def test_borders():
    assert borders("0010110100") == ["", "0", "00"]
    assert borders("0110") == ["", "0"]
    assert borders("01") == [""]
    assert borders("") == []


def test_borders_closed_downward():
    for n in range(1, 11):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            bs = set(borders(w))
            for b in bs:
                assert set(borders(b)) <= bs


def test_matches_over():
    assert matches_over("0110", THETA_MORPHISM)
    assert matches_over("01100110", THETA_MORPHISM)
    assert not matches_over("010", PHI_MORPHISM)
    assert matches_over("", PHI_MORPHISM)
    hm = BUILTIN_WORDS["h-mu"].morphism
    assert matches_over(hm("0123"), hm)


def test_matches_over_all_theta_images():
    for n in range(0, 11):
        for bits in itertools.product("01", repeat=n):
            assert matches_over(THETA_MORPHISM("".join(bits)), THETA_MORPHISM)


def test_is_primitive():
    assert not is_primitive("010010")
    assert is_primitive("0110")
    assert not is_primitive("00")
    assert is_primitive("0")
    with pytest.raises(EmptyWordError):
        is_primitive("")


def test_exchange():
    assert exchange("00101100") == "11010011"
    assert exchange("") == ""
    assert exchange("0110") == "1001"
    with pytest.raises(NonBinaryError):
        exchange("012")


# === indexed queries ===

def test_factor_sets(tm_index_small):
    assert tm_index_small.factors(0) == {""}
    assert tm_index_small.factors(1) == {"0", "1"}
    assert "0110" in tm_index_small.factors(4)
    assert not tm_index_small.has_factor("000")
    with pytest.raises(CertificationTooShortError):
        tm_index_small.factors(65)


def test_complete_first_returns(tm_index_small):
    assert tm_index_small.complete_first_returns("00") == frozenset(ALPHA_RETURNS)
    assert tm_index_small.complete_first_returns("010") == frozenset(BETA_RETURNS)
    assert tm_index_small.complete_first_returns("0110") == frozenset(GAMMA_RETURNS)
    assert tm_index_small.complete_first_returns("0") == {"00", "010", "0110"}
    with pytest.raises(NotAFactorError):
        tm_index_small.complete_first_returns("000")
    with pytest.raises(EmptyPatternError):
        tm_index_small.complete_first_returns("")


def test_returns_need_enough_certification():
    idx = build_index(BUILTIN_WORDS["tm"], 8)
    with pytest.raises(CertificationTooShortError):
        idx.complete_first_returns("01101001")


def test_interpretations_examples(tm_index_small):
    assert tm_index_small.interpretations("01100", PHI_MORPHISM) == [
        Interpretation("010", 0, 1)
    ]
    # the only ancestry of 001100 under the square morphism cuts one
    # letter off each side of image(11) = 10011001
    assert tm_index_small.interpretations("001100", THETA_MORPHISM) == [
        Interpretation("11", 1, 1)
    ]
    short = tm_index_small.interpretations("0", PHI_MORPHISM)
    assert len(short) >= 2
    with pytest.raises(NotAFactorError):
        tm_index_small.interpretations("000", PHI_MORPHISM)


def test_interpretations_reproduce_the_factor(tm_index_small):
    for n in (5, 9, 14, 23):
        for u in tm_index_small.factors(n):
            for s in tm_index_small.interpretations(u, THETA_MORPHISM):
                img = THETA_MORPHISM(s.ancestor)
                assert delete_ends(img, s.head_cut, s.tail_cut) == u


def test_theta_occurrence_preservation_small(tm_index_small):
    facs = [u for k in range(2, 11) for u in tm_index_small.factors(k)]
    for w in facs:
        tw = THETA_MORPHISM(w)
        for u in facs:
            if len(u) <= len(w):
                assert occurrence_count(tw, THETA_MORPHISM(u)) == occurrence_count(w, u)


def test_reversal_closure(tm_index_small, kappa_index, chacon_index):
    assert tm_index_small.closed_under_reversal(20) == (True, None)

    ok, ce = kappa_index.closed_under_reversal(4)
    assert not ok and ce == "0010"
    assert not kappa_index.has_factor(ce[::-1])
    # the classic witness: 1011 occurs but its reversal 1101 does not
    assert kappa_index.has_factor("1011")
    assert not kappa_index.has_factor("1101")

    ok, ce = chacon_index.closed_under_reversal(6)
    assert not ok and len(ce) == 6
    assert not chacon_index.has_factor(ce[::-1])
    assert chacon_index.has_factor("100100")
    assert not chacon_index.has_factor("001001")

    with pytest.raises(CertificationTooShortError):
        tm_index_small.closed_under_reversal(100)
