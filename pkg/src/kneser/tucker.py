"""Certificate search for the octahedral and Z_p Tucker lemmas, and the coloring refutations
that run through them.

Labelings are explicit tables over a fixed enumeration of their domain so that
antipodality / equivariance can be audited exhaustively.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .bounds import CD_LIMIT, cd_exact, extend_ground_set
from .hypercore import (
    MultiplicityVector,
    SetSystem,
    SignVector,
    as_multiplicities,
    elements,
    first_edge_table,
    is_s_disjoint,
    popcount,
)
from .solver import Coloring, MonochromaticFamily


class AntipodalityViolation(ValueError):
    def __init__(self, X: SignVector, n: int):
        super().__init__(f"labeling is not antipodal at {X.format(n)}")
        self.vector = X


class EquivarianceViolation(ValueError):
    def __init__(self, face: "ChessboardFace"):
        super().__init__(f"labeling is not equivariant at {face}")
        self.face = face


class CodomainError(ValueError):
    pass


class NoPairFound(RuntimeError):
    pass


class NoWitness(RuntimeError):
    """A compliant labeling without a Z_p-Tucker chain: would falsify the lemma."""


class DegenerateWitness(AssertionError):
    """The chain yields an s-disjoint multiset that repeats an edge (possible when some s_i >= 2)."""

    def __init__(self, family):
        super().__init__(f"witness repeats an edge: {family}")
        self.family = family


class DefectHypothesisFails(ValueError):
    pass


# ---------------------------------------------------------------- octahedral


def sign_vectors(n: int) -> list[SignVector]:
    """Non-zero sign vectors of length ``n`` in canonical order.

    Position ``code - 1`` holds the vector whose base-3 digits (coordinate 1
    least significant; 0 -> 0, 1 -> '+', 2 -> '-') spell ``code``.
    """
    out = []
    for code in range(1, 3**n):
        plus = minus = 0
        c = code
        for i in range(n):
            c, d = divmod(c, 3)
            if d == 1:
                plus |= 1 << i
            elif d == 2:
                minus |= 1 << i
        out.append(SignVector(plus, minus))
    return out


def sign_code(X: SignVector, n: int) -> int:
    code = 0
    for i in range(n - 1, -1, -1):
        code = 3 * code + (1 if X.plus >> i & 1 else 2 if X.minus >> i & 1 else 0)
    return code


@dataclass(frozen=True)
class TuckerPair:
    A: SignVector
    B: SignVector
    label: int

    def format(self, n: int) -> str:
        return f"A={self.A.format(n)} ({self.label:+d}) <= B={self.B.format(n)} ({-self.label:+d})"

    def to_json(self, n: int) -> dict:
        return {"A": self.A.format(n), "B": self.B.format(n), "label": self.label}


class OctahedralLabeling:
    """A table of signed labels on the non-zero sign vectors of length ``n``."""

    def __init__(self, n: int, values: Sequence[int]):
        if len(values) != 3**n - 1:
            raise ValueError(f"labeling needs {3**n - 1} values for n={n}, got {len(values)}")
        self.n = n
        self.values = tuple(values)

    def __call__(self, X: SignVector) -> int:
        return self.values[sign_code(X, self.n) - 1]

    @classmethod
    def from_function(cls, n: int, f: Callable[[SignVector], int]) -> "OctahedralLabeling":
        return cls(n, [f(X) for X in sign_vectors(n)])

    def check_antipodal(self) -> None:
        for X in sign_vectors(self.n):
            if self(-X) != -self(X):
                raise AntipodalityViolation(X, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj: dict) -> "OctahedralLabeling":
        for key in ("n", "values"):
            if key not in obj:
                raise ValueError(f"labeling JSON is missing field '{key}'")
        return cls(obj["n"], obj["values"])


def random_antipodal_labeling(n: int, rng: random.Random, top: int | None = None) -> OctahedralLabeling:
    top = n - 1 if top is None else top
    table: dict[SignVector, int] = {}
    for X in sign_vectors(n):
        if X not in table:
            v = rng.choice([-1, 1]) * rng.randint(1, top)
            table[X] = v
            table[-X] = -v
    return OctahedralLabeling.from_function(n, table.__getitem__)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def octahedral_tucker_search(lam: OctahedralLabeling) -> TuckerPair:
    """Comparable ``A <= B`` with ``lam(A) = -lam(B)``; first in (code(A), code(B)) order."""
    n = lam.n
    lam.check_antipodal()
    out_of_range = [v for v in lam.values if not 1 <= abs(v) <= n - 1]
    vectors = sign_vectors(n)
    values = lam.values
    full = (1 << n) - 1
    # code contribution of a bit-set placed on the '+' side (twice that on the '-' side)
    weight = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        weight[mask] = weight[mask ^ low] + 3 ** (low.bit_length() - 1)
    for code_a, A in enumerate(vectors, start=1):
        la = values[code_a - 1]
        free = full & ~A.support
        best = None
        # supersets B: add elements of the free part with either sign
        for extra in _submasks(free):
            for plus_extra in _submasks(extra):
                code = code_a + weight[plus_extra] + 2 * weight[extra & ~plus_extra]
                if code != code_a and values[code - 1] == -la and (best is None or code < best):
                    best = code
        if best is not None:
            return TuckerPair(A, vectors[best - 1], la)
    if out_of_range:
        raise NoPairFound(f"no pair; labels {sorted(set(out_of_range))[:5]} exceed +-{n - 1}")
    raise NoPairFound("no complementary pair found for a compliant labeling")


def dolnikov_labeling(S: SetSystem, c: Coloring, m: int | None = None) -> OctahedralLabeling:
    """Two-case labeling turning an ``m``-coloring of the Kneser graph into Tucker labels.

    Large signed sets (``|A+| + |A-| >= n - m``) get ``+-c(E)`` for the
    canonically smallest edge ``E`` inside ``A+`` or ``A-``; small ones get
    ``+-(m + |A+| + |A-|)`` signed by the smaller non-empty part.
    """
    n = S.n
    m = c.m if m is None else m
    if len(c) != len(S.edges):
        raise ValueError("coloring does not match the set system")
    first = first_edge_table(S)
    none = len(S.edges)
    values = []
    for X in sign_vectors(n):
        size = X.size()
        if size >= n - m:
            i_plus, i_minus = first[X.plus], first[X.minus]
            if i_plus == none and i_minus == none:
                raise DefectHypothesisFails(
                    f"{X.format(n)} has size {size} >= n - m but neither part contains an edge"
                )
            values.append(c[i_plus] if i_plus < i_minus else -c[i_minus])
        else:
            if X.plus and X.minus:
                sign = 1 if X.plus < X.minus else -1
            else:
                sign = 1 if X.plus else -1
            values.append(sign * (m + size))
    return OctahedralLabeling(n, values)


def _first_edge_in(S: SetSystem, part: int) -> int:
    for idx, e in enumerate(S.edges):
        if e & ~part == 0:
            return idx
    raise AssertionError("labeled part contains no edge")


def dolnikov_refute(S: SetSystem, c: Coloring, *, limit: int = CD_LIMIT) -> MonochromaticFamily:
    """Two disjoint edges of equal color, read off a Tucker pair of the two-case labeling."""
    m = c.m
    if S.n <= limit:
        cd = cd_exact(S, 2, 1, limit=limit)
        if m >= cd:
            raise DefectHypothesisFails(f"needs fewer colors than the 2-defect: m={m} >= cd={cd}")
    lam = dolnikov_labeling(S, c, m)
    pair = octahedral_tucker_search(lam)
    la = pair.label
    if abs(la) > m:
        raise AssertionError("Tucker pair landed in the size-labeled range")
    sign = 1 if la > 0 else -1
    a_part = pair.A.plus if sign > 0 else pair.A.minus
    b_part = pair.B.minus if sign > 0 else pair.B.plus
    i, j = _first_edge_in(S, a_part), _first_edge_in(S, b_part)
    fam = MonochromaticFamily(tuple(sorted((i, j))), abs(la))
    if not fam.check(S, 1, c):
        raise AssertionError(f"refutation produced an invalid witness {fam}")
    return fam


# ---------------------------------------------------------------- Z_p chessboards


@dataclass(frozen=True)
class ChessboardFace:
    """An ``n x p`` 0/1 matrix given by its columns (bit-sets over ``[n]``)."""

    columns: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.columns)

    def size(self) -> int:
        return sum(popcount(col) for col in self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __le__(self, other: "ChessboardFace") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.columns, other.columns))

    def __lt__(self, other: "ChessboardFace") -> bool:
        return self <= other and self != other

    def positions(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(row, column)`` pairs of the ones (row 1-based, column 0-based)."""
        out = []
        for j, col in enumerate(self.columns):
            i = 1
            while col:
                if col & 1:
                    out.append((i, j))
                col >>= 1
                i += 1
        return tuple(sorted(out))

    @classmethod
    def from_positions(cls, positions, p: int) -> "ChessboardFace":
        cols = [0] * p
        for i, j in positions:
            cols[j] |= 1 << (i - 1)
        return cls(tuple(cols))

    def admissible(self, s: MultiplicityVector) -> bool:
        return is_s_disjoint(self.columns, s)


def zp_action(F: ChessboardFace, k: int) -> ChessboardFace:
    """Rotate columns: column ``j`` moves to ``j + k (mod p)``."""
    p = F.p
    k %= p
    return ChessboardFace(F.columns[-k:] + F.columns[:-k] if k else F.columns)


def _row_options(p: int, cap: int) -> list[int]:
    return sorted(sum(1 << j for j in c) for size in range(cap + 1) for c in combinations(range(p), size))


class FaceIndex:
    """Enumeration of the non-zero admissible ``n x p`` matrices with row caps ``s``.

    Faces are listed in mixed-radix order over per-row column patterns (row 1
    least significant, patterns by ascending bit value).
    """

    def __init__(self, n: int, p: int, s: MultiplicityVector | Sequence[int] | int):
        self.n, self.p = n, p
        self.s = as_multiplicities(s, n)
        self.s.check_uniformity(p)
        rows = [_row_options(p, self.s[i]) for i in range(n)]
        self._rows = rows
        faces = []
        for combo in product(*reversed(rows)):
            pattern = combo[::-1]
            cols = [0] * p
            for i, pat in enumerate(pattern):
                for j in range(p):
                    if pat >> j & 1:
                        cols[j] |= 1 << i
            faces.append(ChessboardFace(tuple(cols)))
        # product() varies the last factor fastest: reversing puts row 1 least significant
        self.faces = faces[1:]
        self.position = {F: idx for idx, F in enumerate(self.faces)}

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    @property
    def total(self) -> int:
        return self.s.total

    @cached_property
    def supersets(self) -> list[list[int]]:
        """Indices of strict superfaces of each face, ascending."""
        rows = self._rows
        place = [{pat: d for d, pat in enumerate(opts)} for opts in rows]
        radix = [1]
        for opts in rows:
            radix.append(radix[-1] * len(opts))
        # offset of row i holding pattern q in the mixed-radix face code
        ups = [
            [[place[i][q] * radix[i] for q in opts if q & pat == pat] for pat in opts]
            for i, opts in enumerate(rows)
        ]
        out = []
        for idx, F in enumerate(self.faces):
            pats = self._patterns(F)
            codes = [-1]
            for i, pat in enumerate(pats):
                offs = ups[i][place[i][pat]]
                codes = [c + o for c in codes for o in offs]
            codes.remove(idx)
            codes.sort()
            out.append(codes)
        return out

    def _patterns(self, F: ChessboardFace) -> tuple[int, ...]:
        pats = []
        for i in range(self.n):
            pats.append(sum(1 << j for j, col in enumerate(F.columns) if col >> i & 1))
        return tuple(pats)

    def orbit_representatives(self) -> list[int]:
        seen = set()
        reps = []
        for idx, F in enumerate(self.faces):
            if idx in seen:
                continue
            reps.append(idx)
            for k in range(self.p):
                seen.add(self.position[zp_action(F, k)])
        return reps


@lru_cache(maxsize=32)
def _cached_faces(n: int, p: int, s: tuple[int, ...]) -> FaceIndex:
    return FaceIndex(n, p, s)


def zp_faces(n: int, p: int, s) -> FaceIndex:
    """Shared (memoized) face index; treat it as read-only."""
    return _cached_faces(n, p, as_multiplicities(s, n).s)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class ZpLabel:
    sign: int
    value: int


class ZpLabeling:
    """Table of ``(sign exponent, value)`` labels over a :class:`FaceIndex`."""

    def __init__(self, index: FaceIndex, signs: Sequence[int], values: Sequence[int], m: int):
        if len(signs) != len(index) or len(values) != len(index):
            raise ValueError(f"labeling needs {len(index)} entries")
        self.index = index
        self.signs = tuple(signs)
        self.values = tuple(values)
        self.m = m
        # edge witnessing each first-case label (main_labeling only)
        self.source_edge: tuple[int | None, ...] | None = None

    def __call__(self, F: ChessboardFace) -> ZpLabel:
        i = self.index.position[F]
        return ZpLabel(self.signs[i], self.values[i])

    def check(self) -> None:
        p = self.index.p
        for sgn, val in zip(self.signs, self.values):
            if not 0 <= sgn < p or not 1 <= val <= self.m:
                raise CodomainError(f"label ({sgn}, {val}) outside Z_{p} x [{self.m}]")
        for idx, F in enumerate(self.index.faces):
            G = self.index.position[zp_action(F, 1)]
            if self.values[G] != self.values[idx] or self.signs[G] != (self.signs[idx] + 1) % p:
                raise EquivarianceViolation(F)

    def to_json(self) -> dict:
        idx = self.index
        return {
            "n": idx.n,
            "p": idx.p,
            "s": list(idx.s.s),
            "m": self.m,
            "signs": list(self.signs),
            "values": list(self.values),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ZpLabeling":
        for key in ("n", "p", "s", "m", "signs", "values"):
            if key not in obj:
                raise ValueError(f"labeling JSON is missing field '{key}'")
        return cls(FaceIndex(obj["n"], obj["p"], obj["s"]), obj["signs"], obj["values"], obj["m"])


def random_equivariant_labeling(index: FaceIndex, m: int, rng: random.Random) -> ZpLabeling:
    p = index.p
    signs = [0] * len(index)
    values = [0] * len(index)
    for rep in index.orbit_representatives():
        sgn, val = rng.randrange(p), rng.randint(1, m)
        F = index.faces[rep]
        for k in range(p):
            j = index.position[zp_action(F, k)]
            signs[j] = (sgn + k) % p
            values[j] = val
    return ZpLabeling(index, signs, values, m)


@dataclass(frozen=True)
class ZpChainWitness:
    """Faces ``A(1) < ... < A(p)`` with one common value and all ``p`` signs."""

    chain: tuple[ChessboardFace, ...]
    value: int
    signs: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "chain": [[elements(col) for col in F.columns] for F in self.chain],
            "value": self.value,
            "signs": list(self.signs),
        }


def zp_tucker_search(lam: ZpLabeling) -> ZpChainWitness:
    """Lexicographically least witness chain (by face indices, bottom first)."""
    index = lam.index
    p, m = index.p, lam.m
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    lam.check()
    if m > (index.total - 1) // (p - 1):
        raise ValueError(f"m = {m} exceeds floor((total - 1) / (p - 1)); no witness is promised")
    sup = index.supersets
    signs, values = lam.signs, lam.values

    def extend(chain: list[int], used: int):
        if len(chain) == p:
            return list(chain)
        top = chain[-1]
        v = values[top]
        for j in sup[top]:
            if values[j] == v and not used >> signs[j] & 1:
                chain.append(j)
                found = extend(chain, used | 1 << signs[j])
                if found:
                    return found
                chain.pop()
        return None

    for start in range(len(index)):
        found = extend([start], 1 << signs[start])
        if found:
            faces = tuple(index.faces[i] for i in found)
            return ZpChainWitness(faces, values[found[0]], tuple(signs[i] for i in found))
    raise NoWitness("compliant equivariant labeling without a witness chain")


def _rotation_key(cols: tuple[int, ...], j: int) -> tuple:
    p = len(cols)
    return tuple((cols[(j + t) % p] == 0, cols[(j + t) % p]) for t in range(p))


def _pick_column(cols: tuple[int, ...], candidates: Sequence[int]) -> int:
    """Among tied candidate columns, the one whose cyclic rotation of the matrix is least.

    Rotations of a face are pairwise distinct under a free action, so the
    choice commutes with the column shift.
    """
    return min(candidates, key=lambda j: _rotation_key(cols, j))


def main_labeling(S: SetSystem, c: Coloring, p: int, s) -> ZpLabeling:
    """Two-case Z_p labeling from a ``K``-coloring of the p-th s-disjoint Kneser hypergraph.

    Requires ``(p - 1) | (total - 1)``.  Matrices with at least
    ``total - (p - 1) K`` ones are labeled by the color of the smallest edge
    inside a column (sign = that column); the rest by
    ``K + ceil(ones / (p - 1))`` signed by the smallest non-empty column.
    """
    index = zp_faces(S.n, p, s)
    total, K = index.total, c.m
    if (total - 1) % (p - 1):
        raise ValueError("(p - 1) must divide (total - 1); extend the ground set first")
    m = (total - 1) // (p - 1)
    threshold = total - (p - 1) * K
    first = first_edge_table(S)
    signs, values, sources = [], [], []
    for F in index.faces:
        cols = F.columns
        ones = F.size()
        if ones >= threshold:
            hit = None
            idx = min(first[col] for col in cols)
            if idx < len(S.edges):
                e = S.edges[idx]
                hit = (idx, _pick_column(cols, [j for j, col in enumerate(cols) if e & ~col == 0]))
            if hit is None:
                raise DefectHypothesisFails(f"matrix {cols} with {ones} ones has no edge in a column")
            signs.append(hit[1])
            values.append(c[hit[0]])
            sources.append(hit[0])
        else:
            nonempty = [j for j, col in enumerate(cols) if col]
            least = min(cols[j] for j in nonempty)
            signs.append(_pick_column(cols, [j for j in nonempty if cols[j] == least]))
            values.append(K + -(-ones // (p - 1)))
            sources.append(None)
    lam = ZpLabeling(index, signs, values, m)
    lam.source_edge = tuple(sources)
    return lam


def main_refute(S: SetSystem, c: Coloring, p: int, s=1, *, limit: int = CD_LIMIT) -> MonochromaticFamily:
    """A monochromatic s-disjoint p-family read off a Z_p-Tucker chain."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    mv = as_multiplicities(s, S.n)
    if S.n <= limit:
        cd = cd_exact(S, p, mv, limit=limit)
        if (p - 1) * c.m >= cd:
            raise DefectHypothesisFails(f"needs (p-1)K < cd: (p-1)K={(p - 1) * c.m}, cd={cd}")
    T, tv = extend_ground_set(S, mv, p)
    lam = main_labeling(T, c, p, tv)
    witness = zp_tucker_search(lam)
    K = c.m
    if witness.value > K:
        # at most p - 1 faces of a chain share ceil(ones / (p - 1))
        raise AssertionError("witness chain lies in the size-labeled range")
    members = []
    for F, sgn in zip(witness.chain, witness.signs):
        src = lam.source_edge[lam.index.position[F]]
        if src is None or T.edges[src] & ~F.columns[sgn]:
            raise AssertionError("chain face is not first-case labeled")
        members.append(src)
    top = witness.chain[-1]
    for src, sgn in zip(members, witness.signs):
        if T.edges[src] & ~top.columns[sgn]:
            raise AssertionError("edge escapes the top face's column")
    fam = MonochromaticFamily(tuple(sorted(members)), witness.value)
    if len(set(members)) < len(members) and is_s_disjoint([S.edges[i] for i in members], mv):
        raise DegenerateWitness(fam)
    if not fam.check(S, mv, c):
        raise AssertionError(f"refutation produced an invalid witness {fam}")
    return fam
