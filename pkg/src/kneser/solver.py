"""Exact chromatic numbers of small Kneser hypergraphs, coloring validation, and bound checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bounds import (
    BoundReport,
    ceil_div,
    cd_formula_stable,
    upper_bound,
)
from .hypercore import (
    CapacityTracker,
    MultiplicityVector,
    SetSystem,
    as_multiplicities,
    gen_t_stable,
    is_s_disjoint,
    kneser_edges,
    kneser_edges_within,
)

VERTEX_LIMIT = 60


class ColoringMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Colors in ``[m]`` indexed by edge position of a :class:`SetSystem`."""

    colors: tuple[int, ...]
    m: int

    def __post_init__(self):
        bad = [c for c in self.colors if not 1 <= c <= self.m]
        if bad:
            raise ValueError(f"colors must lie in [1, {self.m}], got {bad[0]}")

    @classmethod
    def from_list(cls, colors: Sequence[int], m: int | None = None) -> "Coloring":
        colors = tuple(colors)
        return cls(colors, max(colors, default=0) if m is None else m)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> int:
        return self.colors[i]

    def used(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "m": self.m}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        if not isinstance(obj, dict) or "colors" not in obj:
            raise ValueError("Coloring JSON is missing field 'colors'")
        colors = obj["colors"]
        if not isinstance(colors, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in colors
        ):
            raise ValueError("field 'colors' must be a list of integers")
        m = obj.get("m")
        if m is not None and (not isinstance(m, int) or isinstance(m, bool)):
            raise ValueError("field 'm' must be an integer")
        return cls.from_list(colors, m)


@dataclass(frozen=True)
class MonochromaticFamily:
    """An s-disjoint r-family of edge indices sharing one color."""

    members: tuple[int, ...]
    color: int

    def check(self, S: SetSystem, s, c: Coloring) -> bool:
        mv = as_multiplicities(s, S.n)
        return (
            len(set(self.members)) == len(self.members)
            and is_s_disjoint([S.edges[i] for i in self.members], mv)
            and all(c[i] == self.color for i in self.members)
        )

    def to_json(self, S: SetSystem | None = None) -> dict:
        out = {"members": list(self.members), "color": self.color}
        if S is not None:
            out["sets"] = [S.edge_lists()[i] for i in self.members]
        return out


def validate_coloring(
    S: SetSystem, r: int, s: MultiplicityVector | Sequence[int] | int, c: Coloring
) -> MonochromaticFamily | None:
    """First monochromatic s-disjoint r-family in enumeration order, or ``None``."""
    if len(c) != len(S.edges):
        raise ColoringMismatch(f"coloring has {len(c)} entries but the system has {len(S.edges)} edges")
    mv = as_multiplicities(s, S.n)
    mv.check_uniformity(r)
    tracker = CapacityTracker(mv, r)
    first: MonochromaticFamily | None = None
    for color in sorted(set(c.colors)):
        cls = [i for i, x in enumerate(c.colors) if x == color]
        for fam in kneser_edges_within(S.edges, cls, r, tracker):
            if first is None or fam < first.members:
                first = MonochromaticFamily(fam, color)
            break
    return first


class _Instance:
    """Precomputed conflict data for the branch-and-bound colorer."""

    def __init__(self, S: SetSystem, r: int, mv: MultiplicityVector):
        V = len(S.edges)
        self.V = V
        self.r = r
        degree = [0] * V
        families = []
        for fam in kneser_edges(S, r, mv):
            families.append(fam)
            for v in fam:
                degree[v] += 1
        self.degree = degree
        self.order = sorted(range(V), key=lambda v: (-degree[v], v))
        pos = {v: p for p, v in enumerate(self.order)}
        # for each vertex, the families it completes (all other members come earlier)
        self.completes: list[list[int]] = [[] for _ in range(V)]
        for fam in families:
            last = max(fam, key=pos.__getitem__)
            others = 0
            for v in fam:
                if v != last:
                    others |= 1 << v
            self.completes[last].append(others)
        if r == 2:
            self.nbr = [0] * V
            for v in range(V):
                for om in self.completes[v]:
                    self.nbr[v] |= om

    def conflict(self, v: int, cls_mask: int) -> bool:
        if self.r == 2:
            return bool(self.nbr[v] & cls_mask)
        return any(om & cls_mask == om for om in self.completes[v])


def _try_color(inst: _Instance, m: int) -> list[int] | None:
    V = inst.V
    order = inst.order
    colors = [0] * V
    masks = [0] * (m + 1)

    def dfs(p: int, used: int) -> bool:
        if p == V:
            return True
        v = order[p]
        for col in range(1, min(used + 1, m) + 1):
            if inst.conflict(v, masks[col]):
                continue
            colors[v] = col
            masks[col] |= 1 << v
            if dfs(p + 1, max(used, col)):
                return True
            masks[col] &= ~(1 << v)
        colors[v] = 0
        return False

    return colors if dfs(0, 0) else None


class Exceeded(Exception):
    """Raised by :func:`chi_exact` when no coloring exists within ``max_colors``."""


def chi_exact(
    S: SetSystem,
    r: int,
    s: MultiplicityVector | Sequence[int] | int = 1,
    max_colors: int | None = None,
    *,
    lower: int = 0,
    limit: int = VERTEX_LIMIT,
) -> tuple[int, Coloring]:
    """Chromatic number of the r-th s-disjoint Kneser hypergraph of ``S`` with a witness.

    Colors ``m = max(lower, 1), ...`` are tried in turn with a depth-first
    colorer; ``lower`` may seed the search with a known valid lower bound.
    """
    if len(S.edges) > limit:
        raise ValueError(f"chi_exact refuses {len(S.edges)} vertices > limit {limit}")
    mv = as_multiplicities(s, S.n)
    mv.check_uniformity(r)
    if not S.edges:
        return 0, Coloring((), 0)
    inst = _Instance(S, r, mv)
    cap = len(S.edges) if max_colors is None else max_colors
    for m in range(max(lower, 1), cap + 1):
        colors = _try_color(inst, m)
        if colors is not None:
            return m, Coloring(tuple(colors), m)
    raise Exceeded(f"chromatic number exceeds {cap}")


@dataclass(frozen=True)
class StableScan:
    n: int
    k: int
    r: int
    chi: int
    formula: int
    deletion_chis: tuple[int, ...]
    expectation: str

    @property
    def matches(self) -> bool:
        return self.chi == self.formula

    @property
    def vertex_critical(self) -> bool:
        return all(x < self.chi for x in self.deletion_chis)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "chi": self.chi,
            "formula": self.formula,
            "matches": self.matches,
            "vertex_critical": self.vertex_critical,
            "deletion_chis": list(self.deletion_chis),
            "expectation": self.expectation,
        }


def deletion_scan(S: SetSystem, r: int, s=1, *, limit: int = VERTEX_LIMIT) -> tuple[int, ...]:
    """Chromatic number after deleting each vertex in turn."""
    return tuple(chi_exact(S.without(i), r, s, limit=limit)[0] for i in range(len(S.edges)))


def scan_r_stable(n: int, k: int, r: int, *, limit: int = VERTEX_LIMIT) -> StableScan:
    """Compare the r-stable Kneser hypergraph's chromatic number with the full one's.

    Evidence only: mismatches are reported, never raised.
    """
    if n < k * r:
        raise ValueError(f"need n >= k r, got n={n}, k={k}, r={r}")
    S = gen_t_stable(n, k, r)
    if len(S.edges) > limit:
        raise ValueError(f"scan refuses {len(S.edges)} vertices > limit {limit}")
    chi, _ = chi_exact(S, r, 1, limit=limit)
    formula = ceil_div(n - (k - 1) * r, r - 1)
    if (n - r * k) % (r - 1) == 0:
        expectation = "vertex-critical expected"
    elif n - r * k == 1 and r > 2:
        expectation = "not vertex-critical expected"
    else:
        expectation = "no expectation"
    return StableScan(n, k, r, chi, formula, deletion_scan(S, r, 1, limit=limit), expectation)


def verify_sandwich(
    n: int, k: int, r: int, s: int, t: int = 1, *, limit: int = VERTEX_LIMIT
) -> BoundReport:
    """Lower bound from the closed-form defect, upper bound from the explicit coloring,
    and the exact value when the instance is small enough."""
    cd = cd_formula_stable(n, k, t, r, s)
    lower = ceil_div(cd, r - 1)
    upper = upper_bound(n, k, r, s)
    S = gen_t_stable(n, k, t)
    exact = chi_exact(S, r, s, limit=limit)[0] if len(S.edges) <= limit else None
    notes = []
    if (r - 1) % s:
        notes.append(f"s={s} does not divide r-1={r - 1}: bounds need not meet")
    if t == 1 and (r, s, k) == (4, 2, 2):
        from .bounds import chi_special_r4s2

        notes.append(
            f"special case: chi={chi_special_r4s2(n)}, "
            f"lower 1+ceil((2n-7)/3)={1 + ceil_div(2 * n - 7, 3)}, upper n-2={n - 2}"
        )
    return BoundReport(n, k, r, s, t, lower, upper, exact, tuple(notes))
