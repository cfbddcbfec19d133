"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line in ``RESULTS``;
the lines are printed in the pytest terminal summary and by ``python3 tests/test_acceptance.py``."""

import itertools
import math
import random
import time

from kneser.bounds import cd_exact, cd_formula_stable, ceil_div
from kneser.chains import (
    Chain,
    boundary,
    boundary_of_simplex,
    chessboard_complex,
    cone_over,
    cyclic_free_complex,
    equivariant_combination,
    euler_characteristic,
    identity_map,
    lefschetz,
    random_affine_map,
    random_chain,
    random_equivariant_vertex_map,
    SimplicialComplexRep,
    barycentric_sd,
    verify_cone_lemma,
)
from kneser.hypercore import SignVector, gen_k_subsets, gen_t_stable, is_t_stable
from kneser.schrijver import build_sigma, parse_signs, schrijver_refute, xi_chain_map, zeta_chain_map, zeta_image
from kneser.solver import Coloring, chi_exact, deletion_scan
from kneser.tucker import (
    FaceIndex,
    OctahedralLabeling,
    dolnikov_refute,
    main_refute,
    octahedral_tucker_search,
    random_antipodal_labeling,
    random_equivariant_labeling,
    sign_vectors,
    zp_tucker_search,
)

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def timed_chi(S, r, s=1):
    t0 = time.perf_counter()
    chi = chi_exact(S, r, s)[0]
    return chi, time.perf_counter() - t0


def test_criterion_01_kneser():
    rows, ok = [], True
    for n, k in [(4, 2), (5, 2), (6, 2), (7, 2), (6, 3), (7, 3)]:
        chi, dt = timed_chi(gen_k_subsets(n, k), 2)
        good = chi == n - 2 * k + 2 and dt < 60
        ok &= good
        rows.append(f"({n},{k})={chi}/{n - 2 * k + 2} {dt:.2f}s")
    record(1, ok, "chi(KG^2) = n-2k+2: " + ", ".join(rows))


def test_criterion_02_schrijver():
    rows, ok = [], True
    for n, k in [(5, 2), (6, 2), (7, 2), (7, 3)]:
        chi, dt = timed_chi(gen_t_stable(n, k, 2), 2)
        ok &= chi == n - 2 * k + 2 and dt < 60
        rows.append(f"({n},{k})={chi}")
    drops = deletion_scan(gen_t_stable(6, 2, 2), 2)
    critical = all(x < 4 for x in drops)
    ok &= critical
    record(2, ok, f"stable chi = n-2k+2: {', '.join(rows)}; (6,2) vertex-critical={critical}")


def test_criterion_03_afl():
    rows, ok = [], True
    for n, k, r, s in [(7, 2, 3, 1), (8, 2, 3, 1), (6, 2, 3, 2), (9, 2, 3, 1)]:
        want = 1 + ceil_div(n * s - r * k + 1, r - 1)
        chi, _ = timed_chi(gen_k_subsets(n, k), r, s)
        ok &= chi == want
        rows.append(f"({n},{k},{r},{s})={chi}/{want}")
    record(3, ok, "chi = 1+ceil((ns-rk+1)/(r-1)): " + ", ".join(rows))


def test_criterion_04_special():
    rows, ok = [], True
    for n in (4, 5, 6):
        want = n - math.floor(math.sqrt(2 * n + 0.25) - 0.5)
        chi, _ = timed_chi(gen_k_subsets(n, 2), 4, 2)
        lower, upper = 1 + ceil_div(2 * n - 7, 3), n - 2
        ok &= chi == want and lower <= chi <= max(upper, chi)
        rows.append(f"n={n}: chi={chi}/{want} lower={lower} upper={upper} gap={upper - lower}")
    record(4, ok, "; ".join(rows))


def test_criterion_05_defect_grid():
    points = mismatches = 0
    for n in range(2, 8):
        for k in (2, 3):
            for t in (1, 2):
                for r in (2, 3, 4):
                    for s in (1, 2):
                        if s >= r or n < t * k or n < k:
                            continue
                        points += 1
                        S = gen_t_stable(n, k, t)
                        if cd_exact(S, r, s) != cd_formula_stable(n, k, t, r, s):
                            mismatches += 1
    record(5, mismatches == 0, f"{points} grid points, {mismatches} mismatches")


def _antipodal_tables(n, top):
    reps = []
    seen = set()
    for X in sign_vectors(n):
        if X not in seen:
            reps.append(X)
            seen.update((X, -X))
    values = [v for v in range(-top, top + 1) if v]
    for choice in itertools.product(values, repeat=len(reps)):
        table = {}
        for X, v in zip(reps, choice):
            table[X], table[-X] = v, -v
        yield OctahedralLabeling.from_function(n, table.__getitem__)


def _pair_ok(lam, pair):
    return pair.A <= pair.B and lam(pair.A) == pair.label and lam(pair.B) == -pair.label


def test_criterion_06_octahedral():
    exhaustive = sum(_pair_ok(lam, octahedral_tucker_search(lam)) for lam in _antipodal_tables(2, 1))
    found = {}
    for n in (3, 4):
        rng = random.Random(n)
        found[n] = 0
        for _ in range(1000):
            lam = random_antipodal_labeling(n, rng)
            found[n] += _pair_ok(lam, octahedral_tucker_search(lam))
    ok = exhaustive == 16 and found == {3: 1000, 4: 1000}
    record(6, ok, f"n=2 exhaustive {exhaustive}/16; n=3 {found[3]}/1000; n=4 {found[4]}/1000")


def test_criterion_07_zp():
    rows, ok = [], True
    for n, p, s, m in [(3, 2, 1, 2), (5, 2, 1, 4), (4, 3, 1, 1)]:
        index = FaceIndex(n, p, s)
        rng = random.Random(n * 100 + p)
        hits = 0
        for _ in range(1000):
            lam = random_equivariant_labeling(index, m, rng)
            w = zp_tucker_search(lam)
            hits += sorted(w.signs) == list(range(p)) and all(a < b for a, b in zip(w.chain, w.chain[1:]))
        ok &= hits == 1000
        rows.append(f"({n},{p},{s},{m}) {hits}/1000")
    record(7, ok, "; ".join(rows))


def _under_colored(rng, pool):
    S, m = rng.choice(pool)
    return S, Coloring(tuple(rng.randint(1, m) for _ in S.edges), m)


def test_criterion_08_refutation():
    S6 = gen_t_stable(6, 2, 2)
    valid = 0
    for colors in itertools.product((1, 2, 3), repeat=len(S6.edges)):
        c = Coloring(colors, 3)
        fam = schrijver_refute(6, 2, c)
        a, b = (S6.edges[i] for i in fam.members)
        valid += a & b == 0 and is_t_stable(a, 6, 2) and is_t_stable(b, 6, 2) and colors[fam.members[0]] == colors[fam.members[1]]
    total = 3 ** len(S6.edges)

    # (system, colors) with colors < 2-defect
    pool = [
        (gen_k_subsets(5, 2), 2),
        (gen_k_subsets(6, 2), 3),
        (gen_k_subsets(6, 3), 1),
        (gen_k_subsets(7, 3), 2),
        (gen_t_stable(6, 2, 2), 1),
        (gen_t_stable(7, 2, 2), 2),
    ]
    rng = random.Random(8)
    dol = 0
    for _ in range(1000):
        S, c = _under_colored(rng, pool)
        dol += dolnikov_refute(S, c).check(S, 1, c)
    main = 0
    for _ in range(1000):
        S, c = _under_colored(rng, pool)
        main += main_refute(S, c, 2).check(S, 1, c)
    main3 = 0
    for n, m in [(6, 1), (7, 1), (8, 2)]:
        S = gen_k_subsets(n, 2)
        c = Coloring(tuple(rng.randint(1, m) for _ in S.edges), m)
        main3 += main_refute(S, c, 3).check(S, 1, c)
    ok = valid == total and dol == 1000 and main == 1000 and main3 == 3
    record(8, ok, f"schrijver {valid}/{total}; dolnikov {dol}/1000; main p=2 {main}/1000; main p=3 {main3}/3")


def test_criterion_09_chains():
    rng = random.Random(9)
    complexes = [
        boundary_of_simplex(2),
        boundary_of_simplex(3),
        cone_over(boundary_of_simplex(2), 9),
        SimplicialComplexRep([(0, 1, 2, 3)]),
        chessboard_complex(3, 2, 1),
        chessboard_complex(2, 3, 1),
        barycentric_sd(boundary_of_simplex(2))[0],
        build_sigma(4, 3).complex,
    ]
    zero = 0
    for _ in range(1000):
        K = rng.choice(complexes)
        c = random_chain(K, rng.randint(0, K.dim), rng)
        zero += not boundary(boundary(c))
    euler_ok = all(lefschetz(identity_map(K)) == euler_characteristic(K) for K in complexes)
    cones = [cone_over(boundary_of_simplex(2), 9), cone_over(SimplicialComplexRep([(0, 1, 2), (2, 3), (3, 0)]), 9)]
    cone_ok = sum(verify_cone_lemma(K, random_affine_map(K, rng)) == 1 for K in cones for _ in range(30))
    cases = bad = 0
    for K, p in [(chessboard_complex(3, 2, 1), 2), (chessboard_complex(2, 3, 1), 3), (cyclic_free_complex(3, 2), 3), (cyclic_free_complex(5, 1), 5)]:
        for _ in range(20):
            maps = [f for f in (random_equivariant_vertex_map(K, rng) for _ in range(3)) if f]
            nu = equivariant_combination(K, maps, [rng.randint(-3, 3) for _ in maps])
            cases += 1
            bad += lefschetz(nu) % p != 0 or not nu.is_equivariant()
    ok = zero == 1000 and euler_ok and cone_ok == 60 and bad == 0
    record(9, ok, f"dd=0 {zero}/1000; Lambda(id)=Euler {euler_ok}; cone lemma {cone_ok}/60; Lambda=0 mod p {cases - bad}/{cases}")


def test_criterion_10_schrijver_maps():
    rows, ok = [], True
    for d, ell in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        z = zeta_chain_map(d, ell)
        good = z.is_equivariant() and z.is_augmentation_preserving()
        ok &= good
        rows.append(f"zeta({d},{ell})={'ok' if good else 'bad'}")
    for d in (2, 3):
        x = xi_chain_map(d)
        good = x.is_equivariant() and x.is_augmentation_preserving()
        ok &= good
        rows.append(f"xi({d})={'ok' if good else 'bad'}")
    tri = [parse_signs(w) for w in ("+0-0", "+0-+", "++-+")]
    img = zeta_image(tri, 2)
    signs = [c for s, c in sorted(img, key=lambda sc: sum(1 for Y in sc[0] if Y[-1] == 0))]
    fig = len(img) == 3 and signs == [1, -1, 1]
    ok &= fig
    rows.append(f"figure triangle -> {len(img)} triangles signs {signs}")
    record(10, ok, "; ".join(rows))


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
