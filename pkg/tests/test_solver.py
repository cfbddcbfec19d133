import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from kneser.hypercore import SetSystem, bits, gen_k_subsets, gen_t_stable
from kneser.solver import (
    Coloring,
    ColoringMismatch,
    Exceeded,
    MonochromaticFamily,
    chi_exact,
    scan_r_stable,
    validate_coloring,
    verify_sandwich,
)
from oracles import hyperedges, naive_chi


@pytest.mark.parametrize(
    "S,r,s,want",
    [
        (gen_k_subsets(5, 2), 2, 1, 3),
        (gen_t_stable(6, 2, 2), 2, 1, 4),
        (gen_k_subsets(7, 2), 3, 1, 2),
        (gen_k_subsets(4, 2), 2, 1, 2),
    ],
)
def test_chi_examples(S, r, s, want):
    chi, c = chi_exact(S, r, s)
    assert chi == want
    assert validate_coloring(S, r, s, c) is None


@pytest.mark.parametrize(
    "S,r,s",
    [
        (gen_k_subsets(5, 2), 2, 1),
        (gen_k_subsets(5, 2), 3, 2),
        (gen_k_subsets(4, 2), 3, 2),
        (gen_t_stable(6, 2, 2), 2, 1),
        (gen_t_stable(7, 2, 3), 3, 1),
        (gen_k_subsets(5, 3), 2, 1),
    ],
)
def test_chi_matches_naive(S, r, s):
    assert chi_exact(S, r, s)[0] == naive_chi(S.n, list(S.edges), r, s)


@st.composite
def small_systems(draw):
    n = draw(st.integers(3, 6))
    pool = [m for m in range(1, 1 << n) if bin(m).count("1") in (2, 3)]
    edges = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True))
    return SetSystem(n, tuple(sorted(edges)))


@settings(max_examples=40)
@given(small_systems(), st.sampled_from([(2, 1), (3, 1), (3, 2)]))
def test_chi_random_systems(S, rs):
    r, s = rs
    chi, c = chi_exact(S, r, s)
    assert chi == naive_chi(S.n, list(S.edges), r, s)
    assert validate_coloring(S, r, s, c) is None


def test_empty_system():
    assert chi_exact(SetSystem(4, ()), 2) == (0, Coloring((), 0))


def test_max_colors_and_limit():
    with pytest.raises(Exceeded):
        chi_exact(gen_k_subsets(5, 2), 2, 1, max_colors=2)
    with pytest.raises(ValueError):
        chi_exact(gen_k_subsets(12, 2), 2, 1)


def test_lower_seed_does_not_change_value():
    S = gen_k_subsets(6, 2)
    assert chi_exact(S, 2, 1, lower=3)[0] == chi_exact(S, 2, 1)[0] == 4


def test_validate_petersen_constant():
    S = gen_k_subsets(5, 2)
    c = Coloring((1,) * 10, 1)
    fam = validate_coloring(S, 2, 1, c)
    assert fam == MonochromaticFamily((0, 5), 1)
    assert fam.to_json(S)["sets"] == [[1, 2], [3, 4]]
    assert fam.check(S, 1, c)


def test_validate_matching_partition():
    S = gen_k_subsets(4, 2)
    # each color class is a perfect matching: improper
    by_matching = {bits([1, 2]): 1, bits([3, 4]): 1, bits([1, 3]): 2, bits([2, 4]): 2, bits([1, 4]): 3, bits([2, 3]): 3}
    c = Coloring(tuple(by_matching[e] for e in S.edges), 3)
    assert validate_coloring(S, 2, 1, c) is not None
    # complements: {12,13}, {23,24}... every class intersecting -> proper
    for colors in itertools.product((1, 2), repeat=len(S.edges)):
        c = Coloring(colors, 2)
        proper = all(len({colors[i] for i in f}) > 1 for f in hyperedges(4, list(S.edges), 2, 1))
        assert (validate_coloring(S, 2, 1, c) is None) == proper


def test_validate_mismatch():
    with pytest.raises(ColoringMismatch):
        validate_coloring(gen_k_subsets(4, 2), 2, 1, Coloring((1, 1), 1))


def test_coloring_json():
    c = Coloring((1, 2, 1), 2)
    assert Coloring.from_json(c.to_json()) == c
    assert Coloring.from_json({"colors": [1, 3]}).m == 3
    with pytest.raises(ValueError, match="colors"):
        Coloring.from_json({"m": 2})
    with pytest.raises(ValueError):
        Coloring((0, 1), 1)


def test_scan_hexagon():
    scan = scan_r_stable(6, 2, 2)
    assert scan.chi == scan.formula == 4
    assert scan.vertex_critical
    assert scan.expectation == "vertex-critical expected"


def test_scan_flags_nrk_one():
    scan = scan_r_stable(7, 2, 3)
    assert scan.expectation == "not vertex-critical expected"
    assert scan.to_json()["n"] == 7


@pytest.mark.parametrize(
    "n,k,r,s,lower,upper,exact",
    [(5, 2, 2, 1, 3, 3, 3), (5, 2, 4, 2, 2, 3, 3), (6, 2, 3, 1, 2, 2, 2)],
)
def test_sandwich(n, k, r, s, lower, upper, exact):
    rep = verify_sandwich(n, k, r, s)
    assert (rep.lower, rep.upper, rep.exact) == (lower, upper, exact)


def test_sandwich_special_note():
    rep = verify_sandwich(6, 2, 4, 2)
    assert any("special case" in note for note in rep.notes)
