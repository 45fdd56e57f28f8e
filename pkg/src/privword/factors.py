"""Occurrence and return-word queries over words and certified prefixes.

Occurrences are overlapping and reported 1-based.  A complete first
return to a word u is a word that starts with u, ends with u and
contains exactly two occurrences of u.  Queries that depend on the
whole infinite word (factor sets, return sets, interpretations,
reversal closure) go through a :class:`FactorIndex` built on a
stabilized prefix; plain word operations are module functions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificationTooShortError,
    EmptyPatternError,
    EmptyWordError,
    NonBinaryError,
    NotAFactorError,
    OutOfRangeError,
)
from .words import InfiniteWordSpec, Morphism, StabilizedPrefix, stabilize


def occurrence_positions(w: str, u: str) -> list[int]:
    """All (possibly overlapping) 1-based occurrence positions of u in w."""
    if not u:
        raise EmptyPatternError("occurrence queries need a non-empty pattern")
    out = []
    i = w.find(u)
    while i != -1:
        out.append(i + 1)
        i = w.find(u, i + 1)
    return out


def occurrence_count(w: str, u: str) -> int:
    """The number of overlapping occurrences of u in w (written |w|_u)."""
    return len(occurrence_positions(w, u))


def is_complete_first_return(w: str, u: str) -> bool:
    """True iff w starts with u, ends with u and contains u exactly twice."""
    if not u:
        raise EmptyPatternError("occurrence queries need a non-empty pattern")
    return w.startswith(u) and w.endswith(u) and occurrence_count(w, u) == 2


def delete_ends(u: str, i: int, j: int) -> str:
    """Remove i leading and j trailing letters; i + j = |u| yields the empty word."""
    if i < 0 or j < 0 or i + j > len(u):
        raise OutOfRangeError(f"cannot remove {i}+{j} letters from a word of length {len(u)}")
    return u[i : len(u) - j]


def _prefix_function(w: str) -> list[int]:
    pi = [0] * len(w)
    for i in range(1, len(w)):
        k = pi[i - 1]
        while k and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi


def borders(w: str) -> list[str]:
    """All proper borders of w, including the empty word, shortest first."""
    if not w:
        return []
    pi = _prefix_function(w)
    lengths = []
    k = pi[-1]
    while k:
        lengths.append(k)
        k = pi[k - 1]
    return [""] + [w[:l] for l in sorted(lengths)]


def matches_over(w: str, m: Morphism) -> bool:
    """True iff w is the exact image of some word under m."""
    images = sorted({img for img in m.rules.values() if img}, key=len)
    n = len(w)
    reach = bytearray(n + 1)
    reach[0] = 1
    for i in range(n):
        if not reach[i]:
            continue
        for img in images:
            if w.startswith(img, i):
                reach[i + len(img)] = 1
    return bool(reach[n])


def is_primitive(w: str) -> bool:
    """True iff w is not a proper integer power of a shorter word.

    Divisor-period test: w = u^k for some k >= 2 iff |u| divides |w|
    and repeating the length-|u| prefix reproduces w.
    """
    if not w:
        raise EmptyWordError("primitivity is undefined for the empty word")
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def exchange(w: str) -> str:
    """Letterwise 0 <-> 1 swap of a binary word."""
    if set(w) - {"0", "1"}:
        raise NonBinaryError(f"exchange is defined for binary words, got {w!r}")
    return w.translate(_EXCHANGE_TABLE)


_EXCHANGE_TABLE = str.maketrans("01", "10")


@dataclass(frozen=True)
class Interpretation:
    """A factor written as a trimmed morphism image of an ancestor factor.

    The interpreted word equals image(ancestor) with ``head_cut``
    letters removed at the front and ``tail_cut`` at the back, where
    the cuts stay inside the first and last letter images.
    """

    ancestor: str
    head_cut: int
    tail_cut: int


class FactorIndex:
    """Read-only factor and occurrence queries over a stabilized prefix.

    Factor sets are materialized lazily per length and cached; the
    index never answers beyond its certified length.
    """

    def __init__(self, source: StabilizedPrefix):
        self._source = source
        self._cache: dict[int, frozenset[str]] = {}
        self._doubled: str | None = None

    @property
    def word(self) -> str:
        return self._source.word

    @property
    def certified(self) -> int:
        return self._source.certified

    @property
    def source(self) -> StabilizedPrefix:
        return self._source

    @property
    def name(self) -> str:
        return self._source.spec.name

    def factors(self, n: int) -> frozenset[str]:
        """The set F_n of factors of length n, certified complete."""
        if n < 0:
            raise OutOfRangeError("factor length must be non-negative")
        if n == 0:
            return frozenset({""})
        if n > self.certified:
            raise CertificationTooShortError(
                f"factors of length {n} exceed the certified length {self.certified}"
            )
        got = self._cache.get(n)
        if got is None:
            w = self._source.word
            got = frozenset(w[i : i + n] for i in range(len(w) - n + 1))
            self._cache[n] = got
        return got

    def has_factor(self, u: str) -> bool:
        return u in self.factors(len(u))

    def occurrences(self, u: str) -> tuple[int, ...]:
        """1-based occurrence positions of u within the materialized prefix."""
        return tuple(occurrence_positions(self._source.word, u))

    @staticmethod
    def _returns_in(w: str, u: str) -> set[str]:
        pos = occurrence_positions(w, u)
        k = len(u)
        return {w[p - 1 : q - 1 + k] for p, q in zip(pos, pos[1:])}

    def complete_first_returns(self, u: str) -> frozenset[str]:
        """All factors that are complete first returns to u.

        Collected from consecutive occurrences in the prefix, then
        cross-checked on a doubled prefix; raises
        CertificationTooShortError if the doubled prefix reveals more
        returns or a return outruns the certified factor length.
        """
        if not u:
            raise EmptyPatternError("occurrence queries need a non-empty pattern")
        if not self.has_factor(u):
            raise NotAFactorError(f"{u!r} is not a factor of {self.name!r}")
        here = self._returns_in(self._source.word, u)
        if self._doubled is None:
            self._doubled = self._source.spec.prefix(2 * len(self._source.word))
        again = self._returns_in(self._doubled, u)
        longest = max(map(len, again), default=0)
        if here != again or longest > self.certified:
            raise CertificationTooShortError(
                f"returns to {u!r} are not certified at factor length {self.certified}"
            )
        return frozenset(here)

    def interpretations(self, u: str, m: Morphism) -> list[Interpretation]:
        """All interpretations of u by m with the ancestor a factor.

        An interpretation is a triple (ancestor, i, j) such that
        removing i leading and j trailing letters from image(ancestor)
        yields u, with i inside the first letter image and j inside the
        last.
        """
        if not u:
            raise EmptyPatternError("interpretations need a non-empty word")
        if not self.has_factor(u):
            raise NotAFactorError(f"{u!r} is not a factor of {self.name!r}")
        lens = [len(img) for img in m.rules.values()]
        lo, hi = min(lens), max(lens)
        if lo == 0:
            raise EmptyPatternError("interpretations need a non-erasing morphism")
        k_lo = max(1, -(-len(u) // hi))
        k_hi = (len(u) + 2 * hi - 2) // lo
        found = []
        for k in range(k_lo, k_hi + 1):
            for anc in self.factors(k):
                img = m(anc)
                d = len(img) - len(u)
                if d < 0:
                    continue
                first, last = len(m.rules[anc[0]]), len(m.rules[anc[-1]])
                for i in range(max(0, d - last + 1), min(first - 1, d) + 1):
                    if img[i : len(img) - (d - i)] == u:
                        found.append(Interpretation(anc, i, d - i))
        found.sort(key=lambda s: (len(s.ancestor), s.ancestor, s.head_cut))
        return found

    def closed_under_reversal(self, up_to: int) -> tuple[bool, str | None]:
        """Check reversal closure of all factors of length <= up_to.

        Returns (True, None) or (False, counterexample) where the
        counterexample is the shortest factor whose reversal is not a
        factor, ties broken lexicographically.
        """
        if up_to > self.certified:
            raise CertificationTooShortError(
                f"reversal check to length {up_to} exceeds the certified length {self.certified}"
            )
        for k in range(1, up_to + 1):
            fs = self.factors(k)
            for f in sorted(fs):
                if f[::-1] not in fs:
                    return False, f
        return True, None


def build_index(spec: InfiniteWordSpec, max_factor_len: int, byte_cap: int | None = None) -> FactorIndex:
    """Stabilize a prefix of ``spec`` and wrap it in a FactorIndex."""
    return FactorIndex(stabilize(spec, max_factor_len, byte_cap))
