"""Alternating sign-vector complexes and a chain-level refutation of small colorings of
stable Kneser graphs.

Sign vectors are tuples over ``{-1, 0, 1}``.  ``build_sigma(n, d)`` is the order
complex of the length-``n`` vectors with ``alt >= n - d + 1``; negation is its
free involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .bounds import SizeGuardError
from .chains import (
    Chain,
    ChainMap,
    SimplicialComplexRep,
    lefschetz,
    oriented,
    simplicial_map,
    verify_cone_lemma,
)
from .hypercore import SetSystem, alt_tuple, gen_t_stable
from .solver import Coloring, MonochromaticFamily
from .tucker import sign_vectors

SIGMA_LIMIT = 7

SignTuple = tuple[int, ...]

V_PLUS = (1, 1)
V_MINUS = (1, -1)


def neg(Y: SignTuple) -> SignTuple:
    return tuple(-y for y in Y)


def leq(X: SignTuple, Y: SignTuple) -> bool:
    return all(x == 0 or x == y for x, y in zip(X, Y))


def fmt_signs(Y: SignTuple) -> str:
    return "".join({1: "+", -1: "-", 0: "0"}[y] for y in Y)


def parse_signs(text: str) -> SignTuple:
    table = {"+": 1, "-": -1, "0": 0}
    try:
        return tuple(table[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def canonical_vectors(n: int) -> list[SignTuple]:
    """Non-zero sign vectors in the base-3 enumeration order used for octahedral labelings."""
    return [X.to_tuple(n) for X in sign_vectors(n)]


def _order_complex(vertices: Sequence[SignTuple]) -> list[tuple[SignTuple, ...]]:
    present = set(vertices)
    above: dict[SignTuple, list[SignTuple]] = {}
    for X in vertices:
        zeros = [i for i, x in enumerate(X) if x == 0]
        ups = []
        for fill in product((0, 1, -1), repeat=len(zeros)):
            if not any(fill):
                continue
            Y = list(X)
            for i, f in zip(zeros, fill):
                Y[i] = f
            Y = tuple(Y)
            if Y in present:
                ups.append(Y)
        above[X] = ups
    chains = []

    def grow(ch):
        chains.append(ch)
        for Y in above[ch[-1]]:
            grow(ch + (Y,))

    for X in vertices:
        grow((X,))
    return chains


def hemisphere(Y: SignTuple, bound: int) -> int:
    """0 for the equator (``alt(Y) > bound``), else the sign whose appending raises ``alt``."""
    if alt_tuple(Y) > bound:
        return 0
    if alt_tuple(Y + (1,)) > bound:
        return 1
    if alt_tuple(Y + (-1,)) > bound:
        return -1
    raise ValueError(f"{fmt_signs(Y)} lies in neither hemisphere")


@dataclass
class AltComplex:
    """Order complex of length-``n`` sign vectors with ``alt >= n - d + 1``.

    ``tags`` classify vertices relative to length ``n + 1``: 0 on the equator,
    +1 / -1 in the interior of the positive / negative hemisphere.
    """

    n: int
    d: int
    vertices: list[SignTuple]
    complex: SimplicialComplexRep
    tags: dict[SignTuple, int] = field(repr=False)

    @property
    def min_alt(self) -> int:
        return self.n - self.d + 1

    def equator(self) -> list[SignTuple]:
        return [Y for Y in self.vertices if self.tags[Y] == 0]


def build_sigma(n: int, d: int, *, limit: int = SIGMA_LIMIT) -> AltComplex:
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if n > limit:
        raise SizeGuardError(f"build_sigma refuses n={n} > limit {limit}")
    bound = n - d + 1
    vertices = [Y for Y in canonical_vectors(n) if alt_tuple(Y) >= bound]
    chains = _order_complex(vertices)
    action = {Y: neg(Y) for Y in vertices}
    K = SimplicialComplexRep(chains, action, close=False, name=f"Sigma^{d - 1}({n})")
    tags = {Y: hemisphere(Y, bound) for Y in vertices}
    return AltComplex(n, d, vertices, K, tags)


def suspension(base: AltComplex, *, cone: bool = False) -> SimplicialComplexRep:
    """``base * {v+, v-}`` (or ``base * v+``) on vertices ``(0, Y)``, ``(1, +-1)``."""
    chains = []
    apexes = [V_PLUS] if cone else [V_PLUS, V_MINUS]
    for s in base.complex.faces:
        lifted = tuple((0, Y) for Y in s)
        chains.append(lifted)
        for a in apexes:
            chains.append(lifted + (a,))
    chains.extend((a,) for a in apexes)
    action = None
    if not cone:
        action = {(0, Y): (0, neg(Y)) for Y in base.vertices}
        action[V_PLUS], action[V_MINUS] = V_MINUS, V_PLUS
    name = ("cone " if cone else "susp ") + base.complex.name
    return SimplicialComplexRep(chains, action, name=name)


# --------------------------------------------------------------------------- maps


@dataclass(frozen=True)
class FailureWitness:
    """Stable sets inside ``X+`` and ``X-`` that share a color."""

    vertex: SignTuple
    plus_set: int  # edge index into the stable system
    minus_set: int
    color: int

    def family(self) -> MonochromaticFamily:
        return MonochromaticFamily(tuple(sorted((self.plus_set, self.minus_set))), self.color)

    def to_json(self, S: SetSystem) -> dict:
        lists = S.edge_lists()
        return {
            "vertex": fmt_signs(self.vertex),
            "plus_set": lists[self.plus_set],
            "minus_set": lists[self.minus_set],
            "color": self.color,
        }


def _mask(Y: SignTuple, sign: int) -> int:
    out = 0
    for i, y in enumerate(Y):
        if y == sign:
            out |= 1 << i
    return out


@lru_cache(maxsize=16)
def _incidence(n: int, k: int):
    """Stable system, vertex list and, per vertex, the stable sets inside ``X+`` / ``X-``."""
    d = n - 2 * k + 1
    if n > SIGMA_LIMIT:
        raise SizeGuardError(f"refuses n={n} > limit {SIGMA_LIMIT}")
    S = gen_t_stable(n, k, 2)
    bound = n - d + 1
    vertices = [Y for Y in canonical_vectors(n) if alt_tuple(Y) >= bound]
    inside = []
    for X in vertices:
        plus, minus = _mask(X, 1), _mask(X, -1)
        inside.append((
            tuple(i for i, e in enumerate(S.edges) if e & ~plus == 0),
            tuple(i for i, e in enumerate(S.edges) if e & ~minus == 0),
        ))
    return S, vertices, inside


def c_hat(n: int, k: int, c: Coloring, *, colors: int | None = None):
    """Vertex map ``Sigma^{d-1}(n) -> {+,-,0}^colors`` or the first :class:`FailureWitness`.

    Vertices are scanned in canonical order.  ``colors`` defaults to
    ``max(d, c.m)`` with ``d = n - 2k + 1``.
    """
    if not (k >= 2 and n >= 2 * k):
        raise ValueError(f"need n >= 2k and k >= 2, got n={n}, k={k}")
    d = n - 2 * k + 1
    S, vertices, inside = _incidence(n, k)
    if len(c) != len(S.edges):
        raise ValueError(f"coloring has {len(c)} entries, the stable system has {len(S.edges)}")
    width = max(d, c.m) if colors is None else colors
    if c.m > width:
        raise ValueError(f"{c.m} colors do not fit target length {width}")
    colors_of = c.colors
    vmap = {}
    for X, (ins_plus, ins_minus) in zip(vertices, inside):
        cp: dict[int, int] = {}
        for i in ins_plus:
            cp.setdefault(colors_of[i], i)
        cm: dict[int, int] = {}
        for i in ins_minus:
            cm.setdefault(colors_of[i], i)
        assert cp and cm, f"{fmt_signs(X)} has a side without a stable {k}-set"
        common = cp.keys() & cm.keys()
        if common:
            col = min(common)
            return FailureWitness(X, cp[col], cm[col], col)
        vmap[X] = tuple(1 if i in cp else -1 if i in cm else 0 for i in range(1, width + 1))
    return vmap


def delta_vertex(Y: SignTuple) -> SignTuple:
    return Y[:-1]


# ---------------------------------------------------------------- zeta and xi


def _staircase(bottom, rest: Sequence[SignTuple], sign: int) -> Chain:
    """``[bottom < (Y1,s) < ... ] - [(Y1,0) < (Y1,s) < ...] + ...`` over ``rest = Y1..Yk``."""
    k = len(rest)
    out = Chain.simplex([bottom] + [Y + (sign,) for Y in rest])
    for j in range(1, k + 1):
        verts = [Y + (0,) for Y in rest[:j]] + [Y + (sign,) for Y in rest[j - 1 :]]
        out = out + Chain.simplex(verts, -1 if j % 2 else 1)
    return out


def _poset_order(s: Sequence[SignTuple]) -> list[SignTuple]:
    return sorted(s, key=lambda Y: sum(1 for y in Y if y))


def zeta_image(sigma: Sequence[SignTuple], bound: int) -> Chain:
    """Image of the naturally oriented simplex ``[Y0 < ... < Yk]``."""
    ys = _poset_order(sigma)
    tags = [hemisphere(Y, bound) for Y in ys]
    off = [t for t in tags if t]
    if not off:
        return Chain.simplex([Y + (0,) for Y in ys])
    sign = off[0]
    if any(t != sign for t in off):
        raise ValueError("simplex meets both hemisphere interiors")
    if len(off) > 1:
        return Chain.simplex([Y + (sign,) for Y in ys])
    return _staircase(ys[0] + (sign,), ys[1:], sign)


def _oriented_images(K: SimplicialComplexRep, image_of_ordered) -> dict:
    images = {}
    for s in K.faces:
        ordered = image_of_ordered(s)
        sign, _ = oriented(ordered[0])
        images[s] = ordered[1] * sign
    return images


def zeta_chain_map(d: int, ell: int) -> ChainMap:
    """``C(Sigma^{d-1}(ell-1)) -> C(Sigma^{d-1}(ell))``, verified on construction."""
    if not d < ell:
        raise ValueError(f"need d < ell, got d={d}, ell={ell}")
    src = build_sigma(ell - 1, d)
    tgt = build_sigma(ell, d)
    bound = ell - d

    def img(s):
        ys = _poset_order(s)
        return ys, zeta_image(ys, bound)

    return ChainMap(src.complex, tgt.complex, _oriented_images(src.complex, img), name=f"zeta^{ell}")


def xi_image(vertices: Sequence, d: int) -> Chain:
    """Image of a suspension simplex given apex first (if present), then base in poset order."""
    apex = [v for v in vertices if v[0] == 1]
    base = _poset_order([v[1] for v in vertices if v[0] == 0])
    if not apex:
        return Chain.simplex([Y + (0,) for Y in base])
    if len(apex) > 1:
        raise ValueError("a simplex cannot contain both apexes")
    sign = apex[0][1]
    pole = (0,) * (d - 1) + (sign,)
    if not base:
        return Chain.simplex([pole])
    return _staircase(pole, base, sign)


def xi_chain_map(d: int) -> ChainMap:
    """``C(susp Sigma^{d-2}(d-1)) -> C(Sigma^{d-1}(d))``; equator to itself, apexes to poles."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    base = build_sigma(d - 1, d - 1)
    src = suspension(base)
    tgt = build_sigma(d, d)

    def img(s):
        apex = [v for v in s if v[0] == 1]
        rest = sorted((v for v in s if v[0] == 0), key=lambda v: sum(1 for y in v[1] if y))
        ordered = apex + rest
        return ordered, xi_image(ordered, d)

    return ChainMap(src, tgt.complex, _oriented_images(src, img), name="xi")


def delta_chain_map(m: int, d: int) -> ChainMap:
    """Deleting the last coordinate, ``Sigma^{d-1}(m) -> Sigma^{d-1}(m-1)``."""
    if not 1 <= d < m:
        raise ValueError(f"need 1 <= d < m, got m={m}, d={d}")
    src = build_sigma(m, d)
    tgt = build_sigma(m - 1, d)
    return simplicial_map(src.complex, tgt.complex, delta_vertex, name="delta")


def delta_map(d: int) -> ChainMap:
    """``Sigma^{d-2}(d) -> Sigma^{d-2}(d-1)``."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return delta_chain_map(d, d - 1)


# ------------------------------------------------------------------ refutation


class TooManyColors(ValueError):
    pass


def schrijver_refute(n: int, k: int, c: Coloring) -> MonochromaticFamily:
    """Two disjoint stable ``k``-sets of one color, for any coloring with at most
    ``n - 2k + 1`` colors."""
    if not (k > 0 and n >= 2 * k):
        raise ValueError(f"need n >= 2k > 0, got n={n}, k={k}")
    d = n - 2 * k + 1
    if c.m > d:
        raise TooManyColors(f"{c.m} colors exceed n - 2k + 1 = {d}")
    out = c_hat(n, k, c, colors=d)
    if isinstance(out, FailureWitness):
        fam = out.family()
        S = gen_t_stable(n, k, 2)
        if not fam.check(S, 1, c):
            raise AssertionError(f"invalid witness {out}")
        return fam
    raise AssertionError("c_hat is well defined with too few colors")


def refute_witness(n: int, k: int, c: Coloring) -> FailureWitness:
    d = n - 2 * k + 1
    if c.m > d:
        raise TooManyColors(f"{c.m} colors exceed n - 2k + 1 = {d}")
    out = c_hat(n, k, c, colors=d)
    if not isinstance(out, FailureWitness):
        raise AssertionError("c_hat is well defined with too few colors")
    return out


@dataclass
class PipelineReport:
    n: int
    k: int
    d: int
    colors: int
    checks: dict[str, bool]
    lefschetz_loop: int
    lefschetz_susp_loop: int
    lefschetz_cone_loop: int
    f_vectors: dict[str, list[int]]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "colors": self.colors,
            "checks": dict(self.checks),
            "lefschetz": {
                "equivariant_loop": self.lefschetz_loop,
                "suspension_loop": self.lefschetz_susp_loop,
                "cone_loop": self.lefschetz_cone_loop,
            },
            "f_vectors": self.f_vectors,
            "ok": self.ok,
        }


def verify_pipeline(n: int, k: int, c: Coloring) -> PipelineReport:
    """Build every arrow for a proper coloring with ``d + 1`` colors and check them.

    With one color too many, the color map lands in ``Sigma^{d-1}(d+1)`` and the
    deletion map returns to ``Sigma^{d-1}(d)``, which closes an equivariant loop
    (even Lefschetz number).  Composing with ``xi`` and a pole-collapsing
    projection onto the cone gives an augmentation-preserving self-map of a
    cone (Lefschetz number 1).
    """
    d = n - 2 * k + 1
    if d < 2:
        raise ValueError(f"need n - 2k + 1 >= 2, got {d}")
    if n > 6:
        raise SizeGuardError(f"verify_pipeline refuses n={n} > 6")
    if c.m != d + 1:
        raise ValueError(f"need a coloring with exactly d + 1 = {d + 1} colors, got {c.m}")
    vmap = c_hat(n, k, c, colors=d + 1)
    if isinstance(vmap, FailureWitness):
        raise ValueError(f"coloring is improper: {vmap}")

    checks: dict[str, bool] = {}
    sig_n = build_sigma(n, d)
    wide = build_sigma(d + 1, d)
    chat = simplicial_map(sig_n.complex, wide.complex, vmap, name="c_hat")
    checks["c_hat equivariant"] = chat.is_equivariant()
    checks["c_hat augmentation"] = chat.is_augmentation_preserving()
    delta = delta_chain_map(d + 1, d)
    checks["delta equivariant"] = delta.is_equivariant()

    zetas = [zeta_chain_map(d, ell) for ell in range(d + 1, n + 1)]
    for z in zetas:
        checks[f"{z.name} equivariant"] = z.is_equivariant()
        checks[f"{z.name} augmentation"] = z.is_augmentation_preserving()
    xi = xi_chain_map(d)
    checks["xi equivariant"] = xi.is_equivariant()
    checks["xi augmentation"] = xi.is_augmentation_preserving()

    # equivariant self-map of C(Sigma^{d-1}(d))
    loop = zetas[0]
    for z in zetas[1:]:
        loop = loop.then(z)
    loop = loop.then(chat).then(delta)
    loop = ChainMap(delta.target, delta.target, loop.images, name="loop")
    checks["loop equivariant"] = loop.is_equivariant()
    lam_loop = lefschetz(loop)
    checks["loop Lefschetz even"] = lam_loop % 2 == 0

    # the same loop conjugated onto the suspension
    base = build_sigma(d - 1, d - 1)
    susp = suspension(base)
    to_susp = simplicial_map(delta.target, susp, _susp_projection, verify=True, name="pi")
    susp_loop = xi.then(loop).then(to_susp)
    susp_loop = ChainMap(susp, susp, susp_loop.images, name="susp loop")
    checks["suspension loop equivariant"] = susp_loop.is_equivariant()
    lam_susp = lefschetz(susp_loop)
    checks["suspension loop Lefschetz even"] = lam_susp % 2 == 0

    # cone restriction: collapse both poles to v+
    cone = suspension(base, cone=True)
    include = simplicial_map(cone, susp, lambda v: v, name="i''")
    to_cone = simplicial_map(delta.target, cone, _cone_projection, name="pi+")
    cone_loop = include.then(xi).then(loop).then(to_cone)
    cone_loop = ChainMap(cone, cone, cone_loop.images, name="cone loop")
    checks["cone loop augmentation"] = cone_loop.is_augmentation_preserving()
    lam_cone = verify_cone_lemma(cone, cone_loop, V_PLUS)
    checks["cone loop Lefschetz 1"] = lam_cone == 1
    checks["parity and cone never co-occur"] = not (lam_cone % 2 == 0 and lam_cone == 1)

    f_vectors = {
        "Sigma(n)": sig_n.complex.f_vector(),
        "Sigma(d+1)": wide.complex.f_vector(),
        "Sigma(d)": delta.target.f_vector(),
        "susp": susp.f_vector(),
    }
    return PipelineReport(n, k, d, c.m, checks, lam_loop, lam_susp, lam_cone, f_vectors)


def _susp_projection(Y: SignTuple):
    head = Y[:-1]
    if any(head):
        return (0, head)
    return V_PLUS if Y[-1] > 0 else V_MINUS


def _cone_projection(Y: SignTuple):
    head = Y[:-1]
    return (0, head) if any(head) else V_PLUS


def proper_coloring(n: int, k: int) -> Coloring:
    """The standard ``(n - 2k + 2)``-coloring of the stable sets: color by minimum, capped."""
    S = gen_t_stable(n, k, 2)
    d = n - 2 * k + 1
    colors = []
    for e in S.edges:
        low = (e & -e).bit_length()
        colors.append(min(low, d + 1))
    return Coloring(tuple(colors), d + 1)
