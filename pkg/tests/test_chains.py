import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from kneser.chains import (
    Chain,
    ChainMap,
    DimensionShortfall,
    LabelChainExists,
    NotAChainMap,
    NotACone,
    NotAugmentationPreserving,
    SimplicialComplexRep,
    barycentric_sd,
    boundary,
    boundary_of_simplex,
    chessboard_complex,
    compose_square,
    cone_homotopy,
    cone_over,
    constant_map,
    cyclic_free_complex,
    equivariant_combination,
    euler_characteristic,
    identity_map,
    kappa_hat_image,
    kappa_map,
    lefschetz,
    oriented,
    random_affine_map,
    random_chain,
    random_equivariant_vertex_map,
    simplicial_map,
    verify_cone_lemma,
)
from kneser.tucker import FaceIndex, ZpLabeling, random_equivariant_labeling


def test_boundary_examples():
    assert boundary(Chain.simplex([1, 2])) == Chain(0, {(2,): 1, (1,): -1})
    assert boundary(Chain.simplex([1, 2, 3])) == Chain(1, {(2, 3): 1, (1, 3): -1, (1, 2): 1})
    assert not boundary(boundary(Chain.simplex([1, 2, 3])))
    assert boundary(Chain.simplex([7])) == Chain(-1)


def test_orientation():
    assert oriented((2, 1, 3)) == (-1, (1, 2, 3))
    assert oriented((1, 1)) == (0, None)
    assert Chain.simplex([2, 1]) == -Chain.simplex([1, 2])
    assert not Chain.simplex([1, 1])


def test_chain_arithmetic():
    a = Chain.simplex([1, 2])
    assert not (a - a)
    assert (a * 3).coeff((1, 2)) == 3
    assert (a + a).augmentation() == 2


@st.composite
def random_complexes(draw):
    n = draw(st.integers(3, 7))
    facets = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True), min_size=1, max_size=5))
    return SimplicialComplexRep(facets)


@settings(max_examples=40)
@given(random_complexes(), st.integers(0, 10**6))
def test_boundary_squared_random(K, seed):
    rng = random.Random(seed)
    for d in range(K.dim + 1):
        assert not boundary(boundary(random_chain(K, d, rng)))


@settings(max_examples=40)
@given(random_complexes())
def test_lefschetz_identity_is_euler(K):
    assert lefschetz(identity_map(K)) == euler_characteristic(K)


def test_lefschetz_examples():
    circle = boundary_of_simplex(2)
    assert lefschetz(identity_map(circle)) == 0
    assert lefschetz(constant_map(circle, 0)) == 1
    assert lefschetz(identity_map(cone_over(circle, 9))) == 1


def test_chain_map_rejects_mutation():
    K = boundary_of_simplex(2)
    images = dict(identity_map(K).images)
    images[(0, 1)] = Chain.simplex([0, 2])
    with pytest.raises(NotAChainMap):
        ChainMap(K, K, images)


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_chain_map_rejects_random_mutation(seed):
    rng = random.Random(seed)
    K = cone_over(boundary_of_simplex(2), 9)
    nu = random_affine_map(K, rng)
    images = dict(nu.images)
    s = rng.choice(K.simplices(1))
    images[s] = images[s] + Chain(1, {rng.choice(K.simplices(1)): rng.choice([-1, 1])})
    with pytest.raises(NotAChainMap):
        ChainMap(K, K, images)


def test_cone_homotopy():
    K = SimplicialComplexRep([(0, 1)])
    D = cone_homotopy(K, 0)
    assert D.images[(1,)] == Chain.simplex([0, 1])
    assert not D.images[(0,)]
    cone_homotopy(cone_over(boundary_of_simplex(2), 9), 9)
    with pytest.raises(NotACone):
        cone_homotopy(boundary_of_simplex(2), 0)


def test_cone_lemma_examples():
    K = cone_over(boundary_of_simplex(2), 9)
    assert verify_cone_lemma(K, constant_map(K, 9)) == 1
    assert verify_cone_lemma(K, identity_map(K)) == 1
    bad = ChainMap(K, K, {s: c * 2 for s, c in identity_map(K).images.items()})
    with pytest.raises(NotAugmentationPreserving):
        verify_cone_lemma(K, bad)


@settings(max_examples=50)
@given(st.integers(0, 10**6))
def test_cone_lemma_random(seed):
    rng = random.Random(seed)
    K = cone_over(SimplicialComplexRep([(0, 1, 2), (2, 3), (3, 4), (4, 0)]), 9)
    assert verify_cone_lemma(K, random_affine_map(K, rng)) == 1


def test_subdivision_counts():
    sdE, sd = barycentric_sd(SimplicialComplexRep([(0, 1)]))
    assert sdE.f_vector() == [3, 2]
    img = sd.images[(0, 1)]
    assert len(img) == 2 and not (boundary(img) - sd(boundary(Chain.simplex([0, 1]))))
    sdC, sd2 = barycentric_sd(boundary_of_simplex(2))
    assert sdC.f_vector() == [6, 6]
    assert euler_characteristic(sdC) == 0
    assert sd2.is_augmentation_preserving()


def test_subdivision_equivariant():
    X = chessboard_complex(2, 3, 1)
    sdX, sd = barycentric_sd(X)
    assert sd.is_equivariant()
    assert euler_characteristic(sdX) == euler_characteristic(X)


def test_kappa_examples():
    km = kappa_map(2, 3, (1, 1), 1)
    rows = {len(face): v[0] for face, v in km.vertex_map.items()}
    assert rows == {1: 1, 2: 2}
    km = kappa_map(4, 5, (2, 2, 2, 2), 2)
    rows = {}
    for face, v in km.vertex_map.items():
        rows.setdefault(len(face), set()).add(v[0])
    assert rows == {1: {1}, 2: {1}, 3: {2}, 4: {2}, 5: {3}, 6: {3}, 7: {4}, 8: {4}}
    with pytest.raises(DimensionShortfall):
        kappa_map(2, 3, (1, 1), 2)


def test_kappa_hat_is_cone():
    km = kappa_map(3, 2, 1, 2)
    assert km.top == (3, 0)
    image = kappa_hat_image(km)
    cone_homotopy(image, km.top)


def _max_row_labeling(n, p):
    index = FaceIndex(n, p, 1)
    signs, values = [], []
    for F in index.faces:
        pos = F.positions()
        i = max(r for r, _ in pos)
        signs.append(next(c for r, c in pos if r == i))
        values.append(i)
    return ZpLabeling(index, signs, values, n)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2)])
def test_compose_square_max_row(n, p):
    lam = _max_row_labeling(n, p)
    lam.check()
    nu = compose_square(n, p, 1, n, lam).nu
    assert nu.is_augmentation_preserving()
    assert nu.is_equivariant()
    assert lefschetz(nu) % p == 0


@pytest.mark.parametrize("seed", range(5))
def test_compose_square_p3(seed):
    lam = random_equivariant_labeling(FaceIndex(2, 3, 1), 1, random.Random(seed))
    nu = compose_square(2, 3, (1, 1), 1, lam).nu
    assert nu.is_equivariant() and nu.is_augmentation_preserving()
    assert lefschetz(nu) % 3 == 0


@pytest.mark.parametrize("seed", range(10))
def test_compose_square_refuses_witness(seed):
    lam = random_equivariant_labeling(FaceIndex(3, 2, 1), 2, random.Random(seed))
    with pytest.raises(LabelChainExists):
        compose_square(3, 2, 1, 2, lam)


@pytest.mark.parametrize(
    "K,p",
    [
        (chessboard_complex(3, 2, 1), 2),
        (chessboard_complex(2, 3, 1), 3),
        (cyclic_free_complex(3, 2), 3),
        (cyclic_free_complex(5, 1), 5),
        (chessboard_complex(3, 3, (1, 2, 1)), 3),
    ],
)
def test_free_action_lefschetz_mod_p(K, p):
    assert K.is_free()
    rng = random.Random(p)
    for _ in range(10):
        maps = [f for f in (random_equivariant_vertex_map(K, rng) for _ in range(3)) if f]
        nu = equivariant_combination(K, maps, [rng.randint(-3, 3) for _ in maps])
        assert nu.is_equivariant()
        assert lefschetz(nu) % p == 0


def test_simplicial_map_collapse():
    K = SimplicialComplexRep([(0, 1, 2)])
    f = simplicial_map(K, K, {0: 0, 1: 0, 2: 2})
    assert not f.images[(0, 1)]
    assert f.images[(0, 2)] == Chain.simplex([0, 2])
