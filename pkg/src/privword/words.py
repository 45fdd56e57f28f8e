"""Prefix generators for the infinite words under study.

Words are binary (alphabet {0,1}) unless stated otherwise and are
handled as plain Python strings of digit characters.  Built-in words:

* ``tm``        fixed point of 0 -> 01, 1 -> 10 started from 0
* ``tm-theta``  the same word, generated by the squared morphism
                0 -> 0110, 1 -> 1001
* ``chacon``    fixed point of 0 -> 0010, 1 -> 1
* ``kappa``     limit of u0 = 00101100, u_{k+1} = u_k 0^k u_k
* ``mu``        limit of u0 = 01, u_{k+1} = u_k 23 reverse(u_k),
                over the alphabet {0,1,2,3}
* ``h-mu``      letterwise image of ``mu`` under 0 -> 101, 1 -> 1001,
                2 -> 10001, 3 -> 100001

Factor queries against an infinite word are answered on a *stabilized*
prefix: the prefix is doubled until the factor set F_k stops changing
for every k up to the requested length.  This certificate is reliable
for the recurrent words above; it is a desk-scale device, not a proof.
A symbol cap (default 2**26, override with PRIVWORD_BYTE_CAP) guards
against runaway stabilization.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    BudgetExceededError,
    EmptyImageError,
    MorphismSpecError,
    NotProlongableError,
    UnknownConstructionError,
    UnknownLetterError,
)

DEFAULT_BYTE_CAP = 1 << 26


def default_byte_cap() -> int:
    """The prefix symbol cap, honoring the PRIVWORD_BYTE_CAP env var."""
    raw = os.environ.get("PRIVWORD_BYTE_CAP")
    if raw is None:
        return DEFAULT_BYTE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise MorphismSpecError(f"PRIVWORD_BYTE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise MorphismSpecError("PRIVWORD_BYTE_CAP must be positive")
    return cap


@dataclass(frozen=True)
class Morphism:
    """A substitution given by one image word per letter.

    The homomorphism law image(uv) = image(u)image(v) holds by
    construction; apply with ``m(word)``.
    """

    rules: Mapping[str, str]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.rules:
            raise MorphismSpecError("a morphism needs at least one rule")
        object.__setattr__(self, "rules", dict(self.rules))
        letters = set(self.rules)
        for a, img in self.rules.items():
            if len(a) != 1:
                raise MorphismSpecError(f"letters are single symbols, got {a!r}")
            bad = set(img) - letters
            if bad:
                raise UnknownLetterError(
                    f"image of {a!r} uses letters outside the alphabet: {sorted(bad)}"
                )

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.rules)

    def __call__(self, word: str) -> str:
        try:
            return "".join(self.rules[c] for c in word)
        except KeyError as exc:
            raise UnknownLetterError(f"letter {exc.args[0]!r} not in alphabet") from None

    def is_prolongable(self, letter: str) -> bool:
        img = self.rules.get(letter)
        return bool(img) and img[0] == letter and len(img) > 1


def build_morphism(rules: Mapping[str, str], name: str = "") -> Morphism:
    """Validate and build a morphism from a letter -> image mapping."""
    return Morphism(rules, name)


def parse_morphism_spec(spec: str, name: str = "") -> Morphism:
    """Parse a rule string like ``0->01,1->10`` into a morphism."""
    rules: dict[str, str] = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        head, sep, image = part.partition("->")
        if not sep:
            raise MorphismSpecError(f"rule {part!r} is not of the form letter->image")
        letter = head.strip()
        if len(letter) != 1:
            raise MorphismSpecError(f"rule {part!r} does not start with a single letter")
        if letter in rules:
            raise MorphismSpecError(f"duplicate rule for letter {letter!r}")
        rules[letter] = image.strip()
    if not rules:
        raise MorphismSpecError(f"no rules found in {spec!r}")
    return Morphism(rules, name or spec)


def fixed_point_prefix(m: Morphism, seed: str, n: int) -> str:
    """The length-n prefix of the fixed point obtained by iterating m on seed.

    Requires m to be prolongable on the seed letter (the image starts
    with the seed and is longer than one letter) and to have no empty
    images.
    """
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    if not m.is_prolongable(seed):
        raise NotProlongableError(f"morphism {m.name or m.rules} is not prolongable on {seed!r}")
    for a, img in m.rules.items():
        if img == "":
            raise EmptyImageError(f"image of {a!r} is empty; fixed point iteration needs non-empty images")
    if n == 0:
        return ""
    w = seed
    while len(w) < n:
        parts: list[str] = []
        total = 0
        for c in w:
            img = m.rules[c]
            parts.append(img)
            total += len(img)
            if total >= n:
                break
        w = "".join(parts)
    return w[:n]


def _kappa_prefix(n: int) -> str:
    u = "00101100"
    k = 0
    while len(u) < n:
        u = u + "0" * k + u
        k += 1
    return u[:n]


def _mu_prefix(n: int) -> str:
    u = "01"
    while len(u) < n:
        u = u + "23" + u[::-1]
    return u[:n]


def _h_mu_prefix(n: int) -> str:
    # every image of H_MORPHISM has length >= 3, so a mu-prefix of length n
    # maps onto at least n symbols
    if n == 0:
        return ""
    return H_MORPHISM(_mu_prefix(n))[:n]


_CONSTRUCTIONS = {
    "kappa": _kappa_prefix,
    "mu": _mu_prefix,
    "h-mu": _h_mu_prefix,
}


def construction_prefix(name: str, n: int) -> str:
    """Length-n prefix of a named recursive construction (kappa, mu, h-mu)."""
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    try:
        fn = _CONSTRUCTIONS[name]
    except KeyError:
        raise UnknownConstructionError(
            f"unknown construction {name!r}; available: {sorted(_CONSTRUCTIONS)}"
        ) from None
    return fn(n)


class InfiniteWordSpec:
    """A named generator of arbitrarily long prefixes of one infinite word.

    ``prefix(n)`` is monotone: prefix(n) is a prefix of prefix(m) for n <= m.
    """

    name: str

    def prefix(self, n: int) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class MorphicWord(InfiniteWordSpec):
    morphism: Morphism
    seed: str
    name: str = ""

    def prefix(self, n: int) -> str:
        return fixed_point_prefix(self.morphism, self.seed, n)


@dataclass(frozen=True)
class RecursiveWord(InfiniteWordSpec):
    rule: str
    name: str = ""

    def prefix(self, n: int) -> str:
        return construction_prefix(self.rule, n)


@dataclass(frozen=True)
class MorphicImage(InfiniteWordSpec):
    """Letterwise image of another word spec under a non-erasing morphism."""

    morphism: Morphism
    inner: InfiniteWordSpec
    name: str = ""

    def __post_init__(self) -> None:
        for a, img in self.morphism.rules.items():
            if img == "":
                raise EmptyImageError(f"image of {a!r} is empty; word images need non-empty rules")

    def prefix(self, n: int) -> str:
        if n == 0:
            return ""
        m = n
        out = self.morphism(self.inner.prefix(m))
        while len(out) < n:  # unreachable for non-erasing morphisms, kept as a guard
            m *= 2
            out = self.morphism(self.inner.prefix(m))
        return out[:n]


@dataclass(frozen=True)
class StabilizedPrefix:
    """A prefix whose factor sets are certified complete up to a length.

    The certificate: doubling the materialized prefix does not change
    F_k for any k <= ``certified``.
    """

    word: str
    spec: InfiniteWordSpec
    certified: int


def _distinct_count(w: str, k: int) -> int:
    return len({w[i : i + k] for i in range(len(w) - k + 1)})


def _factor_counts_agree(shorter: str, longer: str, max_len: int) -> bool:
    # F_k(shorter) is a subset of F_k(longer) because one is a prefix of the
    # other, so comparing counts is enough.  Long factors settle last; scan
    # from the top for an early exit.
    for k in range(max_len, 0, -1):
        if _distinct_count(shorter, k) != _distinct_count(longer, k):
            return False
    return True


def stabilize(spec: InfiniteWordSpec, max_factor_len: int, byte_cap: int | None = None) -> StabilizedPrefix:
    """Materialize a prefix with complete factor sets up to ``max_factor_len``.

    Doubles the prefix until F_k agrees with the doubled prefix for all
    k <= max_factor_len.  Raises BudgetExceededError when the next
    doubling would pass the symbol cap.
    """
    if max_factor_len < 1:
        raise ValueError("max_factor_len must be at least 1")
    cap = default_byte_cap() if byte_cap is None else byte_cap
    n = max(64, 4 * max_factor_len)
    if n > cap:
        raise BudgetExceededError(
            f"stabilizing {spec.name!r} to factor length {max_factor_len} needs more than {cap} symbols"
        )
    word = spec.prefix(n)
    while True:
        if 2 * len(word) > cap:
            raise BudgetExceededError(
                f"stabilizing {spec.name!r} to factor length {max_factor_len} needs more than {cap} symbols"
            )
        doubled = spec.prefix(2 * len(word))
        if _factor_counts_agree(word, doubled, max_factor_len):
            return StabilizedPrefix(word=word, spec=spec, certified=max_factor_len)
        word = doubled


PHI_MORPHISM = Morphism({"0": "01", "1": "10"}, name="phi")
THETA_MORPHISM = Morphism({"0": "0110", "1": "1001"}, name="theta")
CHACON_MORPHISM = Morphism({"0": "0010", "1": "1"}, name="chacon")
H_MORPHISM = Morphism(
    {"0": "101", "1": "1001", "2": "10001", "3": "100001"}, name="h"
)

MU_WORD = RecursiveWord("mu", name="mu")

BUILTIN_WORDS: dict[str, InfiniteWordSpec] = {
    "tm": MorphicWord(PHI_MORPHISM, "0", name="tm"),
    "tm-theta": MorphicWord(THETA_MORPHISM, "0", name="tm-theta"),
    "chacon": MorphicWord(CHACON_MORPHISM, "0", name="chacon"),
    "kappa": RecursiveWord("kappa", name="kappa"),
    "mu": MU_WORD,
    "h-mu": MorphicImage(H_MORPHISM, MU_WORD, name="h-mu"),
}
