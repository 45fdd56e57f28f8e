"""Privileged and palindromic word machinery.

A word is privileged if it is empty, a single letter, or a complete
first return to a shorter privileged word.  Equivalently, a word of
length at least two is privileged iff it is a complete first return to
its longest proper privileged border; membership is decided that way,
with memoization.

Palindromic defect of w is |w| + 1 minus the number of distinct
palindromic factors of w (the empty word counts); it also equals the
number of positions whose longest palindromic suffix has occurred
before.  Words of defect zero are rich, and a word is rich exactly
when its privileged factors coincide with its palindromic factors.

For the Thue-Morse word the module also provides the classification of
privileged factors by their starting return word and the seven
reduction bijections that drive the complexity recurrences.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import (
    DomainViolationError,
    EmptyWordError,
    NotAFactorError,
    NotPrivilegedError,
    OutOfRangeError,
    RangeViolationError,
)
from .factors import FactorIndex, borders, delete_ends, matches_over, occurrence_count
from .words import THETA_MORPHISM


def is_palindrome(w: str) -> bool:
    """True iff w equals its reversal; the empty word is a palindrome."""
    return w == w[::-1]


@cache
def is_privileged(w: str) -> bool:
    """True iff w is privileged.

    A word of length >= 2 qualifies iff it is a complete first return
    to its longest proper privileged border; a complete first return to
    the empty word does not count.
    """
    if len(w) <= 1:
        return True
    if w[0] != w[-1]:  # privileged words start and end with the same letter
        return False
    b = longest_proper_privileged_border(w)
    if not b:
        return False
    return occurrence_count(w, b) == 2


def longest_proper_privileged_border(w: str) -> str:
    """The longest privileged border of w shorter than w (empty if none)."""
    if not w:
        raise EmptyWordError("the empty word has no proper border")
    for b in reversed(borders(w)):
        if b and is_privileged(b):
            return b
    return ""


def new_privileged_at(w: str, i: int) -> str:
    """The privileged factor introduced at 1-based position i of w.

    Every position introduces exactly one new privileged factor: the
    unique privileged suffix of w[1..i] that occurs in w[1..i] only
    once.
    """
    if not 1 <= i <= len(w):
        raise OutOfRangeError(f"position {i} lies outside a word of length {len(w)}")
    p = w[:i]
    for length in range(i, 0, -1):
        s = p[i - length :]
        if is_privileged(s) and occurrence_count(p, s) == 1:
            return s
    raise AssertionError("unreachable: every position introduces a privileged factor")


# ---------------------------------------------------------------------------
# palindromic defect and richness
# ---------------------------------------------------------------------------

def _palindrome_scan(w: str) -> tuple[set[str], list[int]]:
    """Distinct non-empty palindromic factors and, per 1-based end
    position, the length of the longest palindromic suffix."""
    n = len(w)
    pal: set[str] = set()
    lps = [0] * (n + 1)
    for center in range(2 * n - 1):
        l = center // 2
        r = l + (center % 2)
        while l >= 0 and r < n and w[l] == w[r]:
            pal.add(w[l : r + 1])
            if r - l + 1 > lps[r + 1]:
                lps[r + 1] = r - l + 1
            l -= 1
            r += 1
    return pal, lps


def palindromic_factors(w: str) -> frozenset[str]:
    """All distinct non-empty palindromic factors of w."""
    pal, _ = _palindrome_scan(w)
    return frozenset(pal)


@dataclass(frozen=True)
class DefectReport:
    """Palindromic defect of a word, with the positions that cause it.

    A position is lacking when the longest palindromic suffix ending
    there has occurred earlier; the defect equals both the number of
    lacking positions and |w| + 1 minus the palindromic factor count.
    """

    word: str
    defect: int
    lacking_positions: tuple[int, ...]


def defect(w: str) -> DefectReport:
    """Compute the defect by both characterizations and check they agree."""
    pal, lps = _palindrome_scan(w)
    lacking = []
    for i in range(1, len(w) + 1):
        p = w[i - lps[i] : i]
        if w.find(p, 0, i - 1) != -1:
            lacking.append(i)
    by_count = len(w) + 1 - (len(pal) + 1)
    if by_count != len(lacking):
        raise AssertionError(f"defect characterizations disagree on {w!r}")
    return DefectReport(word=w, defect=by_count, lacking_positions=tuple(lacking))


def is_rich(w: str) -> bool:
    """True iff w has defect zero."""
    return defect(w).defect == 0


def shortest_nonpalindromic_privileged(source: str | FactorIndex) -> str | None:
    """The shortest privileged factor that is not a palindrome.

    Ties are broken lexicographically; returns None when every
    privileged factor is a palindrome (for an index: up to its
    certified length).
    """
    if isinstance(source, FactorIndex):
        lengths = range(2, source.certified + 1)
        factor_sets = source.factors
    else:
        w = source
        lengths = range(2, len(w) + 1)

        def factor_sets(n: int) -> set[str]:
            return {w[i : i + n] for i in range(len(w) - n + 1)}

    for n in lengths:
        hits = [u for u in sorted(factor_sets(n)) if not is_palindrome(u) and is_privileged(u)]
        if hits:
            return hits[0]
    return None


# ---------------------------------------------------------------------------
# per-length privileged sets and oracle counts
# ---------------------------------------------------------------------------

CLASS_PREFIXES = {
    "all": "",
    "starts-0": "0",
    "starts-00": "00",
    "starts-010": "010",
    "starts-0110": "0110",
    "starts-11": "11",
    "starts-101": "101",
    "starts-1001": "1001",
}


@dataclass(frozen=True)
class PrivilegedSet:
    """The privileged factors of one length, restricted to a prefix class."""

    length: int
    prefix: str
    words: frozenset[str]

    def __len__(self) -> int:
        return len(self.words)


def privileged_set(idx: FactorIndex, n: int, prefix: str = "") -> PrivilegedSet:
    """The exact set of privileged factors of length n starting with ``prefix``."""
    members = frozenset(
        w for w in idx.factors(n) if w.startswith(prefix) and is_privileged(w)
    )
    return PrivilegedSet(length=n, prefix=prefix, words=members)


def oracle_complexity(idx: FactorIndex, n: int, kind: str, prefix: str = "") -> int:
    """Brute-force complexity count of one kind at length n.

    kind "A" counts privileged factors, "P" palindromic factors and "B"
    factors that are both, optionally restricted to a starting prefix.
    """
    if kind not in ("A", "P", "B"):
        raise ValueError(f"kind must be A, P or B, got {kind!r}")
    count = 0
    for w in idx.factors(n):
        if prefix and not w.startswith(prefix):
            continue
        if kind == "A":
            count += is_privileged(w)
        elif kind == "P":
            count += is_palindrome(w)
        else:
            count += is_palindrome(w) and is_privileged(w)
    return count


# ---------------------------------------------------------------------------
# Thue-Morse classification by starting return word
# ---------------------------------------------------------------------------

ALPHA_RETURNS = ("00101100", "00110100", "001100", "0010110100")
BETA_RETURNS = ("01011010", "010110011010", "010010", "0100110010")
GAMMA_RETURNS = ("01100110", "011010010110", "0110010110", "0110100110")

_RETURNS = {"00": ALPHA_RETURNS, "010": BETA_RETURNS, "0110": GAMMA_RETURNS}
_LABELS = {
    "00": ("alpha1", "alpha2", "alpha3", "alpha4"),
    "010": ("beta1", "beta2", "beta3", "beta4"),
    "0110": ("gamma1", "gamma2", "gamma3", "gamma4"),
}
# context templates: 'w' marks the factor; first tuple applies when 4 | |w|,
# second when 4 does not divide |w|
_CONTEXTS = {
    "00": (("1w110", "011w1"), ("1w1",)),
    "010": (("10w01",), ("011w110",)),
    "0110": (("w",), ("10w", "w01")),
}


@dataclass(frozen=True)
class PalPriClassification:
    """Classification columns for a privileged Thue-Morse factor.

    The three columns are equivalent: the residue of the length mod 4,
    which return word the factor begins with, and which padded context
    is a factor that matches over the blocks {0110, 1001}.
    """

    word: str
    starts_with: str
    length_mod4: int
    begins_with_return: str
    matching_contexts: tuple[str, ...]


def classify_tm_privileged(w: str, idx: FactorIndex) -> PalPriClassification:
    """Classify a privileged factor of the Thue-Morse word (length >= 6,
    starting with 0) and verify the three columns agree."""
    if not is_privileged(w):
        raise NotPrivilegedError(f"{w!r} is not privileged")
    if not idx.has_factor(w):
        raise NotAFactorError(f"{w!r} is not a factor of {idx.name!r}")
    if len(w) < 6 or not w.startswith("0"):
        raise ValueError("classification applies to factors of length >= 6 starting with 0")
    for cls in ("00", "010", "0110"):
        if w.startswith(cls):
            break
    else:
        raise NotPrivilegedError(f"{w!r} does not start with 00, 010 or 0110")

    labels = _LABELS[cls]
    begins = [lab for ret, lab in zip(_RETURNS[cls], labels) if w.startswith(ret)]
    if len(begins) != 1:
        raise AssertionError(f"{w!r} begins with {len(begins)} return words, expected 1")
    begins_with = begins[0]

    def holds(template: str) -> bool:
        context = template.replace("w", w)
        return idx.has_factor(context) and matches_over(context, THETA_MORPHISM)

    div4_templates, rem2_templates = _CONTEXTS[cls]
    hits4 = tuple(t for t in div4_templates if holds(t))
    hits2 = tuple(t for t in rem2_templates if holds(t))

    div4 = len(w) % 4 == 0
    index_is_div4 = labels.index(begins_with) < 2
    if bool(hits4) != div4 or bool(hits2) == div4 or index_is_div4 != div4:
        raise AssertionError(f"classification columns disagree for {w!r}")
    return PalPriClassification(
        word=w,
        starts_with=cls,
        length_mod4=len(w) % 4,
        begins_with_return=begins_with,
        matching_contexts=hits4 + hits2,
    )


# ---------------------------------------------------------------------------
# reduction bijections
# ---------------------------------------------------------------------------

REDUCTION_MAPS = ("f1", "g1", "f2", "f3", "f4-010", "f4-0110", "theta")

_ALPHA1, _ALPHA2 = ALPHA_RETURNS[0], ALPHA_RETURNS[1]


def theta_preimage(w: str) -> str | None:
    """The unique word u with theta(u) = w, or None when w does not
    factor over the blocks {0110, 1001}."""
    if len(w) % 4:
        return None
    out = []
    for i in range(0, len(w), 4):
        block = w[i : i + 4]
        if block == "0110":
            out.append("0")
        elif block == "1001":
            out.append("1")
        else:
            return None
    return "".join(out)


def _demand(ok: bool, exc: type[Exception], msg: str) -> None:
    if not ok:
        raise exc(msg)


def apply_reduction(name: str, w: str) -> str:
    """Apply one of the named reduction bijections to a word in its domain.

    Domains (and the length bookkeeping of the images):

    * f1, g1   privileged, starts 00; image length 4|w|
    * f2       privileged, starts 00, |w| = 2 mod 4; image 1w1
    * f3       privileged, starts 101 or 1001; image length 4|w| - 4
    * f4-010   privileged, starts 101, |w| = 2 mod 4; image 0w0
    * f4-0110  privileged, starts 11, |w| = 0 mod 4, |w| >= 8; image 0w0
    * theta    privileged, starts 00 or 010; image length 4|w|
    """
    dv = DomainViolationError
    if name in ("f1", "g1"):
        _demand(w.startswith("00") and is_privileged(w), dv, f"{name} needs a privileged word starting 00, got {w!r}")
        if name == "f1":
            return delete_ends(THETA_MORPHISM("1" + w), 1, 3)
        return delete_ends(THETA_MORPHISM(w + "1"), 3, 1)
    if name == "f2":
        _demand(
            w.startswith("00") and len(w) % 4 == 2 and is_privileged(w),
            dv,
            f"f2 needs a privileged word starting 00 of length 2 mod 4, got {w!r}",
        )
        return "1" + w + "1"
    if name == "f3":
        _demand(
            (w.startswith("101") or w.startswith("1001")) and is_privileged(w),
            dv,
            f"f3 needs a privileged word starting 101 or 1001, got {w!r}",
        )
        return delete_ends(THETA_MORPHISM(w), 2, 2)
    if name == "f4-010":
        _demand(
            w.startswith("101") and len(w) % 4 == 2 and is_privileged(w),
            dv,
            f"f4-010 needs a privileged word starting 101 of length 2 mod 4, got {w!r}",
        )
        return "0" + w + "0"
    if name == "f4-0110":
        _demand(
            w.startswith("11") and len(w) % 4 == 0 and len(w) >= 8 and is_privileged(w),
            dv,
            f"f4-0110 needs a privileged word starting 11 of length 0 mod 4, at least 8, got {w!r}",
        )
        return "0" + w + "0"
    if name == "theta":
        _demand(
            (w.startswith("00") or w.startswith("010")) and is_privileged(w),
            dv,
            f"theta needs a privileged word starting 00 or 010, got {w!r}",
        )
        return THETA_MORPHISM(w)
    raise ValueError(f"unknown reduction map {name!r}; available: {REDUCTION_MAPS}")


def invert_reduction(name: str, v: str) -> str:
    """Invert one of the named reduction bijections on a word in its range."""
    rv = RangeViolationError
    if name == "f1":
        _demand(v.startswith(_ALPHA1) and len(v) % 4 == 0 and is_privileged(v), rv,
                f"f1 range needs a privileged word starting {_ALPHA1}, length 0 mod 4, got {v!r}")
        z = theta_preimage("1" + v + "110")
        _demand(z is not None, rv, f"1{v}110 does not factor over the theta blocks")
        u = z[1:]
        _demand(u.startswith("00") and is_privileged(u), rv, f"preimage {u!r} is not in the f1 domain")
        return u
    if name == "g1":
        _demand(v.startswith(_ALPHA2) and len(v) % 4 == 0 and is_privileged(v), rv,
                f"g1 range needs a privileged word starting {_ALPHA2}, length 0 mod 4, got {v!r}")
        z = theta_preimage("011" + v + "1")
        _demand(z is not None, rv, f"011{v}1 does not factor over the theta blocks")
        u = z[:-1]
        _demand(u.startswith("00") and is_privileged(u), rv, f"preimage {u!r} is not in the g1 domain")
        return u
    if name == "f2":
        _demand(v.startswith("1001") and len(v) % 4 == 0 and is_privileged(v), rv,
                f"f2 range needs a privileged word starting 1001, length 0 mod 4, got {v!r}")
        u = v[1:-1]
        _demand(u.startswith("00") and is_privileged(u), rv, f"stripped word {u!r} is not in the f2 domain")
        return u
    if name == "f3":
        _demand(v.startswith("010") and len(v) % 4 == 0 and len(v) >= 8 and is_privileged(v), rv,
                f"f3 range needs a privileged word starting 010, length 0 mod 4, at least 8, got {v!r}")
        u = theta_preimage("10" + v + "01")
        _demand(u is not None, rv, f"10{v}01 does not factor over the theta blocks")
        _demand((u.startswith("101") or u.startswith("1001")) and is_privileged(u), rv,
                f"preimage {u!r} is not in the f3 domain")
        return u
    if name == "f4-010":
        _demand(v.startswith("010") and len(v) % 4 == 0 and len(v) >= 8 and is_privileged(v), rv,
                f"f4-010 range needs a privileged word starting 010, length 0 mod 4, at least 8, got {v!r}")
        u = v[1:-1]
        _demand(u.startswith("101") and is_privileged(u), rv, f"stripped word {u!r} is not in the f4-010 domain")
        return u
    if name == "f4-0110":
        _demand(v.startswith("0110") and len(v) % 4 == 2 and len(v) >= 10 and is_privileged(v), rv,
                f"f4-0110 range needs a privileged word starting 0110, length 2 mod 4, at least 10, got {v!r}")
        u = v[1:-1]
        _demand(u.startswith("11") and len(u) % 4 == 0 and is_privileged(u), rv,
                f"stripped word {u!r} is not in the f4-0110 domain")
        return u
    if name == "theta":
        _demand(v.startswith("0110") and len(v) % 4 == 0 and len(v) >= 8 and is_privileged(v), rv,
                f"theta range needs a privileged word starting 0110, length 0 mod 4, at least 8, got {v!r}")
        u = theta_preimage(v)
        _demand(u is not None, rv, f"{v!r} does not factor over the theta blocks")
        _demand((u.startswith("00") or u.startswith("010")) and is_privileged(u), rv,
                f"preimage {u!r} is not in the theta domain")
        return u
    raise ValueError(f"unknown reduction map {name!r}; available: {REDUCTION_MAPS}")
