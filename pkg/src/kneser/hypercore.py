"""Ground-set combinatorics on bit-sets.

Subsets of ``[n] = {1, ..., n}`` are Python ints: element ``i`` is bit ``i - 1``.
The canonical subset order is the ascending integer value of the bit-set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 63


def bits(elements: Iterable[int]) -> int:
    """Encode 1-based elements as a bit-set."""
    mask = 0
    for i in elements:
        if i < 1:
            raise ValueError(f"elements are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def elements(mask: int) -> list[int]:
    """Decode a bit-set into its sorted 1-based elements."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Smallest element of a non-empty bit-set (1-based)."""
    return (mask & -mask).bit_length()


def fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


@dataclass(frozen=True)
class SetSystem:
    """A loopless hypergraph on ``[n]`` with edges in canonical order.

    ``parent`` optionally records, for each edge, its index in the system it
    was derived from (see :func:`restrict`).
    """

    n: int
    edges: tuple[int, ...]
    parent: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"ground size must be in [1, {MAX_N}], got {self.n}")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e & ~full:
                raise ValueError(f"edge {fmt_set(e)} is not a subset of [{self.n}]")
            if popcount(e) < 2:
                raise ValueError(f"edge {fmt_set(e)} is a loop (cardinality < 2)")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError("edges must be duplicate-free and in canonical order")
        if self.parent is not None and len(self.parent) != len(self.edges):
            raise ValueError("parent table length does not match edge count")

    @classmethod
    def from_lists(cls, n: int, edge_lists: Iterable[Iterable[int]]) -> "SetSystem":
        """Build from 1-based element lists in any order; duplicates are rejected."""
        edges = [bits(e) for e in edge_lists]
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        return cls(n, tuple(sorted(edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def edge_lists(self) -> list[list[int]]:
        return [elements(e) for e in self.edges]

    def index(self, edge: int) -> int:
        return self.edges.index(edge)

    def without(self, i: int) -> "SetSystem":
        """The system with edge ``i`` deleted."""
        keep = [j for j in range(len(self.edges)) if j != i]
        return SetSystem(self.n, tuple(self.edges[j] for j in keep), tuple(keep))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": self.edge_lists()}

    @classmethod
    def from_json(cls, obj: dict) -> "SetSystem":
        if not isinstance(obj, dict):
            raise ValueError("SetSystem JSON must be an object")
        for key in ("n", "edges"):
            if key not in obj:
                raise ValueError(f"SetSystem JSON is missing field '{key}'")
        n, edges = obj["n"], obj["edges"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("field 'n' must be an integer")
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise ValueError("field 'edges' must be a list of integer lists")
        for e in edges:
            if not all(isinstance(i, int) and not isinstance(i, bool) for i in e):
                raise ValueError("field 'edges' must contain integers only")
        return cls.from_lists(n, edges)


@dataclass(frozen=True)
class MultiplicityVector:
    s: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.s):
            raise ValueError("multiplicities must be >= 1")

    @classmethod
    def constant(cls, n: int, s: int) -> "MultiplicityVector":
        return cls((s,) * n)

    @property
    def total(self) -> int:
        return sum(self.s)

    def __len__(self) -> int:
        return len(self.s)

    def __getitem__(self, i: int) -> int:
        return self.s[i]

    def check_uniformity(self, r: int) -> None:
        if any(x >= r for x in self.s):
            raise ValueError(f"multiplicities must satisfy 1 <= s_i < r = {r}")


def as_multiplicities(s: int | Sequence[int] | MultiplicityVector, n: int) -> MultiplicityVector:
    """Coerce a scalar or sequence into a length-``n`` multiplicity vector."""
    if isinstance(s, MultiplicityVector):
        mv = s
    elif isinstance(s, int):
        mv = MultiplicityVector.constant(n, s)
    else:
        mv = MultiplicityVector(tuple(s))
    if len(mv) != n:
        raise ValueError(f"multiplicity vector has length {len(mv)}, expected {n}")
    return mv


@dataclass(frozen=True)
class SignVector:
    """A signed subset ``(X+, X-)`` of ``[n]`` stored as two disjoint bit-sets.

    Comparison operators implement the componentwise partial order
    (``0 <= +``, ``0 <= -``); they are not a total order.
    """

    plus: int
    minus: int

    def __post_init__(self):
        if self.plus & self.minus:
            raise ValueError("positive and negative parts must be disjoint")

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        """Parse strings such as ``"0+-++00+0"`` (``'−'`` is accepted too)."""
        plus = minus = 0
        for i, ch in enumerate(text):
            if ch == "+":
                plus |= 1 << i
            elif ch in "-−":
                minus |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad sign character {ch!r}")
        return cls(plus, minus)

    @classmethod
    def from_tuple(cls, signs: Sequence[int]) -> "SignVector":
        plus = minus = 0
        for i, x in enumerate(signs):
            if x > 0:
                plus |= 1 << i
            elif x < 0:
                minus |= 1 << i
        return cls(plus, minus)

    def to_tuple(self, n: int) -> tuple[int, ...]:
        return tuple(
            1 if self.plus >> i & 1 else -1 if self.minus >> i & 1 else 0 for i in range(n)
        )

    def format(self, n: int) -> str:
        return "".join({1: "+", -1: "-", 0: "0"}[x] for x in self.to_tuple(n))

    def __neg__(self) -> "SignVector":
        return SignVector(self.minus, self.plus)

    def __le__(self, other: "SignVector") -> bool:  # type: ignore[override]
        return self.plus & ~other.plus == 0 and self.minus & ~other.minus == 0

    def __lt__(self, other: "SignVector") -> bool:  # type: ignore[override]
        return self <= other and self != other

    def __ge__(self, other: "SignVector") -> bool:  # type: ignore[override]
        return other <= self

    def __gt__(self, other: "SignVector") -> bool:  # type: ignore[override]
        return other < self

    @property
    def support(self) -> int:
        return self.plus | self.minus

    def size(self) -> int:
        return popcount(self.plus) + popcount(self.minus)

    def is_zero(self) -> bool:
        return not (self.plus or self.minus)


def _check_nk(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    if k < 2:
        raise ValueError(f"k must be >= 2 (no loop edges), got {k}")
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")


def gen_k_subsets(n: int, k: int) -> SetSystem:
    """All ``C(n, k)`` k-subsets of ``[n]`` in canonical order."""
    _check_nk(n, k)
    edges = sorted(sum(1 << i for i in c) for c in combinations(range(n), k))
    return SetSystem(n, tuple(edges))


def is_t_stable(mask: int, n: int, t: int) -> bool:
    """True iff any two elements satisfy ``t <= |i - j| <= n - t``."""
    xs = elements(mask)
    for a, b in combinations(xs, 2):
        gap = b - a
        if gap < t or gap > n - t:
            return False
    return True


def gen_t_stable(n: int, k: int, t: int) -> SetSystem:
    """The t-stable k-subsets of ``[n]``; empty when ``n < t * k``."""
    _check_nk(n, k)
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if n < t * k:
        return SetSystem(n, ())
    full = gen_k_subsets(n, k)
    return SetSystem(n, tuple(e for e in full.edges if is_t_stable(e, n, t)))


def is_s_disjoint(family: Sequence[int], s: MultiplicityVector | Sequence[int]) -> bool:
    """True iff every element ``i`` lies in at most ``s_i`` members of ``family``."""
    caps = s.s if isinstance(s, MultiplicityVector) else tuple(s)
    counts = [0] * len(caps)
    for member in family:
        for i in elements(member):
            if i > len(caps):
                raise ValueError(f"element {i} outside the multiplicity vector")
            counts[i - 1] += 1
            if counts[i - 1] > caps[i - 1]:
                return False
    return True


class CapacityTracker:
    """Incremental s-disjointness test using bit-sliced occupancy levels.

    ``levels[j]`` holds the elements covered at least ``j + 1`` times;
    ``over[j]`` holds the elements whose multiplicity is at most ``j``.
    """

    def __init__(self, s: MultiplicityVector, depth: int):
        self.depth = depth
        self.over = []
        for j in range(depth + 1):
            self.over.append(bits(i + 1 for i, x in enumerate(s.s) if x <= j))

    def fits(self, levels: tuple[int, ...], edge: int) -> bool:
        # adding edge raises count of edge & levels[j] to j + 2
        for j, lv in enumerate(levels):
            if lv & edge & self.over[j + 1]:
                return False
        return not edge & self.over[0]

    @staticmethod
    def push(levels: tuple[int, ...], edge: int) -> tuple[int, ...]:
        out = []
        carry = edge
        for lv in levels:
            out.append(lv | carry)
            carry = lv & carry
        if carry:
            out.append(carry)
        return tuple(out)


def kneser_edges(S: SetSystem, r: int, s: MultiplicityVector | int) -> Iterator[tuple[int, ...]]:
    """All s-disjoint r-sets of edges of ``S``, as increasing index tuples in lex order."""
    if r < 2:
        raise ValueError("r must be >= 2")
    mv = as_multiplicities(s, S.n)
    mv.check_uniformity(r)
    yield from _kneser_rec(S.edges, list(range(len(S.edges))), r, CapacityTracker(mv, r), (), ())


def kneser_edges_within(
    edges: Sequence[int], candidates: Sequence[int], r: int, tracker: CapacityTracker
) -> Iterator[tuple[int, ...]]:
    """Like :func:`kneser_edges` restricted to the increasing index list ``candidates``."""
    yield from _kneser_rec(edges, list(candidates), r, tracker, (), ())


def _kneser_rec(edges, cands, r, tracker, chosen, levels):
    if len(chosen) == r:
        yield chosen
        return
    need = r - len(chosen)
    for pos in range(len(cands) - need + 1):
        idx = cands[pos]
        e = edges[idx]
        if tracker.fits(levels, e):
            yield from _kneser_rec(
                edges, cands[pos + 1 :], r, tracker, chosen + (idx,), tracker.push(levels, e)
            )


def alt(X: SignVector, n: int) -> int:
    """Length of the longest alternating subsequence of non-zero signs."""
    count = 0
    last = 0
    for x in X.to_tuple(n):
        if x and x != last:
            count += 1
            last = x
    return count


def alt_tuple(signs: Sequence[int]) -> int:
    count = 0
    last = 0
    for x in signs:
        if x and x != last:
            count += 1
            last = x
    return count


def restrict(S: SetSystem, M: int) -> SetSystem:
    """Edges of ``S`` inside ``M``; ``parent`` maps new indices to old ones."""
    keep = [i for i, e in enumerate(S.edges) if e & ~M == 0]
    return SetSystem(S.n, tuple(S.edges[i] for i in keep), tuple(keep))


@lru_cache(maxsize=32)
def first_edge_table(S: SetSystem) -> tuple[int, ...]:
    """For every subset ``M`` of ``[n]``, the least index of an edge inside ``M`` (or ``len(edges)``)."""
    if S.n > 20:
        raise ValueError(f"first-edge table refuses n = {S.n} > 20")
    none = len(S.edges)
    table = [none] * (1 << S.n)
    for idx in range(len(S.edges) - 1, -1, -1):
        table[S.edges[idx]] = idx
    for i in range(S.n):
        bit = 1 << i
        for mask in range(1 << S.n):
            if mask & bit and table[mask ^ bit] < table[mask]:
                table[mask] = table[mask ^ bit]
    return tuple(table)
