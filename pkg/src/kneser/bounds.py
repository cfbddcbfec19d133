"""Colorability defects, explicit colorings, and the chromatic bounds built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .hypercore import (
    MultiplicityVector,
    SetSystem,
    as_multiplicities,
    bits,
    elements,
    gen_k_subsets,
    lowest,
    restrict,
)

CD_LIMIT = 12
AUX_LIMIT = 10


class SizeGuardError(ValueError):
    """Raised when an exhaustive search is asked to run beyond its size guard."""


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    r: int
    s: int
    t: int
    lower: int
    upper: int
    exact: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(
                f"exact value {self.exact} outside [{self.lower}, {self.upper}]"
            )

    @property
    def lower_tight(self) -> bool | None:
        return None if self.exact is None else self.exact == self.lower

    @property
    def upper_tight(self) -> bool | None:
        return None if self.exact is None else self.exact == self.upper

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "s": self.s,
            "t": self.t,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_tight": self.lower_tight,
            "upper_tight": self.upper_tight,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ExplicitColoringParams:
    P: int
    M: int

    def __post_init__(self):
        if self.P < 1 or self.M < 0:
            raise ValueError(f"invalid coloring parameters P={self.P}, M={self.M}")

    @classmethod
    def compute(cls, n: int, k: int, r: int, s: int) -> "ExplicitColoringParams":
        P = (r - 1) // s
        return cls(P, ceil_div(n * s - r * k + 1, P * s))

    def color(self, edge: int) -> int:
        return min(ceil_div(lowest(edge), self.P), self.M + 1)


def _independence_number(S: SetSystem, ground: int) -> int:
    """Largest subset of ``ground`` containing no edge (brute force over subsets)."""
    elems = elements(ground)
    edges = [e for e in S.edges if e & ~ground == 0]
    for size in range(len(elems), -1, -1):
        for combo in combinations(elems, size):
            m = bits(combo)
            if all(e & ~m for e in edges):
                return size
    return 0


def cd_exact(
    S: SetSystem,
    r: int,
    s: MultiplicityVector | Sequence[int] | int = 1,
    *,
    ground: int | None = None,
    limit: int = CD_LIMIT,
) -> int:
    """Exact s-disjoint r-colorability defect of ``S`` by exhaustive search.

    ``ground`` restricts the ground set (default ``[n]``); multiplicities of
    elements outside it are ignored.  Elements are placed one at a time into
    at most ``s_i`` of the ``r`` classes, never completing an edge inside a class.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if S.n > limit:
        raise SizeGuardError(f"cd_exact refuses n = {S.n} > limit {limit}")
    mv = as_multiplicities(s, S.n)
    full = (1 << S.n) - 1
    ground = full if ground is None else ground & full
    elems = elements(ground)
    caps = [min(mv[i - 1], r) for i in elems]
    total = sum(mv[i - 1] for i in elems)

    by_max: dict[int, list[int]] = {i: [] for i in elems}
    for e in S.edges:
        if e & ~ground == 0:
            by_max[elements(e)[-1]].append(e)

    alpha = _independence_number(S, ground)
    suffix = [0] * (len(elems) + 1)
    for pos in range(len(elems) - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] + caps[pos]

    options_by_cap = {
        c: [combo for size in range(min(c, r), -1, -1) for combo in combinations(range(r), size)]
        for c in set(caps)
    }
    best = 0
    classes = [0] * r
    sizes = [0] * r

    def search(pos: int, cur: int) -> None:
        nonlocal best
        if cur > best:
            best = cur
        if pos == len(elems):
            return
        rem = len(elems) - pos
        class_room = sum(min(rem, alpha - sz) for sz in sizes)
        if cur + min(suffix[pos], class_room) <= best:
            return
        i = elems[pos]
        bit = 1 << (i - 1)
        accept = [
            sizes[j] < alpha and all(e & ~(classes[j] | bit) for e in by_max[i]) for j in range(r)
        ]
        for combo in options_by_cap[caps[pos]]:
            if not all(accept[j] for j in combo):
                continue
            # interchangeable (equal) classes must be filled in index order
            chosen = set(combo)
            if any(
                classes[jp] == classes[j] and jp not in chosen
                for j in combo
                for jp in range(j)
            ):
                continue
            for j in combo:
                classes[j] |= bit
                sizes[j] += 1
            search(pos + 1, cur + len(combo))
            for j in combo:
                classes[j] &= ~bit
                sizes[j] -= 1

    search(0, 0)
    return total - best


def cd_formula_stable(n: int, k: int, t: int, r: int, s: int) -> int:
    """Closed-form defect of the t-stable k-subsets: ``max(ns - tr(k-1), 0)``."""
    if not (n >= k >= 2 and t >= 1 and 1 <= s < r and n >= t * k):
        raise ValueError(f"invalid parameters n={n}, k={k}, t={t}, r={r}, s={s}")
    return max(n * s - t * r * (k - 1), 0)


def lower_bound(
    S: SetSystem | None,
    r: int,
    s: MultiplicityVector | Sequence[int] | int = 1,
    *,
    cd: int | None = None,
) -> int:
    """``ceil(cd / (r - 1))``; pass ``cd`` to skip the exhaustive defect."""
    if cd is None:
        if S is None:
            raise ValueError("need either a set system or a precomputed defect")
        cd = cd_exact(S, r, s)
    return ceil_div(cd, r - 1)


def upper_bound(n: int, k: int, r: int, s: int) -> int:
    """Number of colors used by :func:`explicit_coloring`."""
    return 1 + ExplicitColoringParams.compute(n, k, r, s).M


def explicit_coloring(n: int, k: int, r: int, s: int):
    """Proper coloring of the Kneser hypergraph of all k-subsets with ``1 + M`` colors.

    An edge with least element ``a`` gets ``min(ceil(a / P), M + 1)``.
    """
    from .solver import Coloring, validate_coloring

    if not (r >= 2 and k >= 2 and 1 <= s < r and s * n >= k * r and n >= k):
        raise ValueError(f"invalid parameters n={n}, k={k}, r={r}, s={s}")
    params = ExplicitColoringParams.compute(n, k, r, s)
    S = gen_k_subsets(n, k)
    c = Coloring(tuple(params.color(e) for e in S.edges), params.M + 1)
    bad = validate_coloring(S, r, s, c)
    if bad is not None:
        raise AssertionError(f"explicit coloring is improper: {bad}")
    return c


def chi_special_r4s2(n: int) -> int:
    """Chromatic number of the 4-uniform, 2-fold-disjoint Kneser hypergraph of K_n's edges.

    Evaluates both the packing minimum and the closed form and insists they agree.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    target = n * (n - 1) // 2
    acc = 0
    K = 0
    while acc < target:
        K += 1
        acc += n - K + 1
    # floor(sqrt(2n + 1/4) - 1/2) == floor((sqrt(8n + 1) - 1) / 2)
    closed = n - (math.isqrt(8 * n + 1) - 1) // 2
    if closed != K:
        raise AssertionError(f"packing minimum {K} != closed form {closed} at n={n}")
    return K


def star_plus_edge_coloring(n: int):
    """Color class ``i`` = every uncolored edge at vertex ``i`` plus one spare edge.

    The spare is the canonically largest uncolored edge avoiding ``i``.
    """
    from .solver import Coloring, validate_coloring

    K = chi_special_r4s2(n)
    S = gen_k_subsets(n, 2)
    colors = [0] * len(S.edges)
    for i in range(1, K + 1):
        v = 1 << (i - 1)
        for idx, e in enumerate(S.edges):
            if not colors[idx] and e & v:
                colors[idx] = i
        for idx in range(len(S.edges) - 1, -1, -1):
            if not colors[idx]:
                colors[idx] = i
                break
    if not all(colors):
        raise AssertionError(f"star-plus-edge packing left edges uncolored at n={n}")
    c = Coloring(tuple(colors), K)
    bad = validate_coloring(S, 4, 2, c)
    if bad is not None:
        raise AssertionError(f"star-plus-edge coloring is improper: {bad}")
    return c


def extend_ground_set(
    S: SetSystem, s: MultiplicityVector | Sequence[int] | int, r: int
) -> tuple[SetSystem, MultiplicityVector]:
    """Append fresh multiplicity-1 elements until ``(r - 1) | (total - 1)``."""
    mv = as_multiplicities(s, S.n)
    extra = (-(mv.total - 1)) % (r - 1)
    if extra == 0:
        return S, mv
    return SetSystem(S.n + extra, S.edges), MultiplicityVector(mv.s + (1,) * extra)


@dataclass(frozen=True)
class AuxiliarySystem:
    """Upward-closed family of ground subsets, stored by its inclusion-minimal members."""

    n: int
    minimal: tuple[int, ...]

    def __contains__(self, N: int) -> bool:
        return any(m & ~N == 0 for m in self.minimal)

    def as_set_system(self) -> SetSystem:
        return SetSystem(self.n, tuple(sorted(self.minimal)))


def build_auxiliary_T(
    S: SetSystem, r_prime: int, chi0: int, *, limit: int = AUX_LIMIT
) -> AuxiliarySystem:
    """Ground subsets ``N`` whose plain ``r'``-defect of ``S|_N`` exceeds ``(r' - 1) chi0``."""
    if S.n > limit:
        raise SizeGuardError(f"build_auxiliary_T refuses n = {S.n} > limit {limit}")
    threshold = (r_prime - 1) * chi0
    members: list[int] = []
    # increasing size: a subset is minimal iff no recorded member lies inside it
    for size in range(S.n + 1):
        for combo in combinations(range(S.n), size):
            N = sum(1 << i for i in combo)
            if any(m & ~N == 0 for m in members):
                continue
            if cd_exact(restrict(S, N), r_prime, 1, ground=N, limit=limit) > threshold:
                members.append(N)
    return AuxiliarySystem(S.n, tuple(sorted(members)))
