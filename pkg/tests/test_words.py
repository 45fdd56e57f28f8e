"""Word generation: morphisms, fixed points, constructions, stabilization."""
import itertools
import random

import pytest

from privword import (
    BUILTIN_WORDS,
    BudgetExceededError,
    EmptyImageError,
    Morphism,
    MorphismSpecError,
    NotProlongableError,
    PHI_MORPHISM,
    THETA_MORPHISM,
    UnknownConstructionError,
    UnknownLetterError,
    build_morphism,
    construction_prefix,
    default_byte_cap,
    fixed_point_prefix,
    parse_morphism_spec,
    stabilize,
)


# === morphisms ===

def test_build_morphism_thue_morse():
    m = build_morphism({"0": "01", "1": "10"})
    assert m("0") == "01" and m("01") == "0110"
    assert m.alphabet == {"0", "1"}


def test_build_morphism_rejects_foreign_letters():
    with pytest.raises(UnknownLetterError):
        build_morphism({"0": "01"})  # image uses 1, alphabet is {0}
    with pytest.raises(MorphismSpecError):
        build_morphism({})


def test_identity_rule_is_valid_but_not_prolongable():
    m = build_morphism({"0": "0"})
    assert not m.is_prolongable("0")


def test_parse_morphism_spec():
    m = parse_morphism_spec("0->01,1->10")
    assert m.rules == {"0": "01", "1": "10"}
    with pytest.raises(MorphismSpecError):
        parse_morphism_spec("0=01")
    with pytest.raises(MorphismSpecError):
        parse_morphism_spec("0->01,0->10")
    with pytest.raises(MorphismSpecError):
        parse_morphism_spec("")


def test_morphism_law_on_random_pairs():
    rng = random.Random(97)
    hm = BUILTIN_WORDS["h-mu"].morphism
    for _ in range(1000):
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        assert PHI_MORPHISM(u + v) == PHI_MORPHISM(u) + PHI_MORPHISM(v)
        u4 = "".join(rng.choice("0123") for _ in range(rng.randint(0, 8)))
        v4 = "".join(rng.choice("0123") for _ in range(rng.randint(0, 8)))
        assert hm(u4 + v4) == hm(u4) + hm(v4)


def test_theta_is_phi_squared_exhaustive():
    for n in range(0, 13):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            assert THETA_MORPHISM(w) == PHI_MORPHISM(PHI_MORPHISM(w))


# === fixed points and constructions ===

def test_thue_morse_prefix():
    assert fixed_point_prefix(PHI_MORPHISM, "0", 16) == "0110100110010110"
    assert fixed_point_prefix(PHI_MORPHISM, "0", 0) == ""


def test_theta_fixed_point_is_thue_morse():
    assert BUILTIN_WORDS["tm-theta"].prefix(4096) == BUILTIN_WORDS["tm"].prefix(4096)


def test_chacon_prefix():
    m = build_morphism({"0": "0010", "1": "1"})
    assert fixed_point_prefix(m, "0", 8) == "00100010"


def test_fixed_point_errors():
    with pytest.raises(NotProlongableError):
        fixed_point_prefix(build_morphism({"0": "0"}), "0", 4)
    with pytest.raises(NotProlongableError):
        fixed_point_prefix(PHI_MORPHISM, "x", 4)
    erasing = Morphism({"0": "01", "1": ""})
    with pytest.raises(EmptyImageError):
        fixed_point_prefix(erasing, "0", 4)


def test_construction_prefixes():
    assert construction_prefix("kappa", 16) == "0010110000101100"
    assert construction_prefix("mu", 6) == "012310"
    assert construction_prefix("kappa", 0) == ""
    with pytest.raises(UnknownConstructionError):
        construction_prefix("nope", 4)


def test_h_mu_prefix_matches_composed_route():
    spec = BUILTIN_WORDS["h-mu"]
    assert construction_prefix("h-mu", 500) == spec.prefix(500)
    assert spec.prefix(9) == spec.morphism(construction_prefix("mu", 3))[:9]


@pytest.mark.parametrize("name", sorted(BUILTIN_WORDS))
def test_prefix_monotone(name):
    spec = BUILTIN_WORDS[name]
    for n in (0, 1, 5, 37, 128):
        assert spec.prefix(2 * n).startswith(spec.prefix(n))


# === stabilization ===

def _factor_set(w, k):
    return {w[i : i + k] for i in range(len(w) - k + 1)}


def test_stabilize_tm_small_factor_sets():
    sp = stabilize(BUILTIN_WORDS["tm"], 4)
    f4 = _factor_set(sp.word, 4)
    assert len(f4) == 10
    assert {"0110", "1001", "0010"} <= f4
    f1 = _factor_set(sp.word, 1)
    assert f1 == {"0", "1"}
    # the doubling certificate holds for the returned word
    doubled = sp.spec.prefix(2 * len(sp.word))
    for k in range(1, 5):
        assert _factor_set(sp.word, k) == _factor_set(doubled, k)


def test_stabilize_kappa_sees_zero_blocks():
    sp = stabilize(BUILTIN_WORDS["kappa"], 4)
    assert "0000" in _factor_set(sp.word, 4)


def test_stabilize_budget():
    with pytest.raises(BudgetExceededError):
        stabilize(BUILTIN_WORDS["tm"], 64, byte_cap=100)


def test_byte_cap_env_override(monkeypatch):
    monkeypatch.setenv("PRIVWORD_BYTE_CAP", "12345")
    assert default_byte_cap() == 12345
    monkeypatch.delenv("PRIVWORD_BYTE_CAP")
    assert default_byte_cap() == 1 << 26


def test_overlap_freeness_at_desk_scale(tm_index_small):
    """No factor a u a u a occurs in the Thue-Morse word, checked for
    all factor lengths up to 64."""
    for length in range(3, 65, 2):
        m = (length - 3) // 2
        for f in tm_index_small.factors(length):
            assert f != f[: m + 1] * 2 + f[0]
