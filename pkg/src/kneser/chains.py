"""Integer chain complexes of finite simplicial complexes.

Simplices are sorted vertex tuples; vertices of one complex must be mutually
comparable.  An oriented simplex given in any vertex order is reduced to its
sorted tuple times the sign of the sorting permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Simplex = tuple
Vertex = Hashable

INT64 = 2**63 - 1


class NotAChainMap(ValueError):
    def __init__(self, simplex, detail: str = ""):
        super().__init__(f"boundary does not commute at {simplex!r}{': ' + detail if detail else ''}")
        self.simplex = simplex


class NotACone(ValueError):
    pass


class NotAugmentationPreserving(ValueError):
    pass


class NotSimplicial(ValueError):
    def __init__(self, simplex, image):
        super().__init__(f"image {image!r} of {simplex!r} is not a simplex of the target")
        self.simplex = simplex
        self.image = image


class NotEquivariant(ValueError):
    pass


class CoefficientOverflow(OverflowError):
    pass


def oriented(seq: Sequence[Vertex]) -> tuple[int, Simplex | None]:
    """``(sign, sorted tuple)`` for an ordered vertex list; ``(0, None)`` if degenerate."""
    n = len(seq)
    if len(set(seq)) != n:
        return 0, None
    inversions = sum(1 for a in range(n) for b in range(a + 1, n) if seq[a] > seq[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


class Chain:
    """A formal integer combination of oriented ``dim``-simplices (zero terms are dropped)."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Simplex, int] | None = None):
        self.dim = dim
        self.terms: dict[Simplex, int] = {}
        if terms:
            for s, c in terms.items():
                self._add(s, c)

    def _add(self, s: Simplex, c: int) -> None:
        if not c:
            return
        if len(s) != self.dim + 1:
            raise ValueError(f"simplex {s!r} does not have dimension {self.dim}")
        v = self.terms.get(s, 0) + c
        if abs(v) > INT64:
            raise CoefficientOverflow(f"coefficient of {s!r} exceeds 64 bits")
        if v:
            self.terms[s] = v
        else:
            del self.terms[s]

    @classmethod
    def simplex(cls, vertices: Sequence[Vertex], coeff: int = 1) -> "Chain":
        """The oriented simplex ``[v0, ..., vk]`` (zero chain if degenerate)."""
        sign, key = oriented(vertices)
        ch = cls(len(vertices) - 1)
        if sign:
            ch._add(key, sign * coeff)
        return ch

    @classmethod
    def zero(cls, dim: int) -> "Chain":
        return cls(dim)

    def __iter__(self) -> Iterator[tuple[Simplex, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, s: Simplex) -> int:
        return self.terms.get(s, 0)

    def _check_dim(self, other: "Chain") -> None:
        if self.dim != other.dim and self.terms and other.terms:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")

    def __add__(self, other: "Chain") -> "Chain":
        self._check_dim(other)
        out = Chain(self.dim if self.terms else other.dim, self.terms)
        for s, c in other.terms.items():
            out._add(s, c)
        return out

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __mul__(self, k: int) -> "Chain":
        return Chain(self.dim, {s: k * c for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.terms == other.terms and (self.dim == other.dim or not self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return f"Chain({self.dim}, 0)"
        body = " ".join(f"{c:+d}{list(s)}" for s, c in sorted(self.terms.items()))
        return f"Chain({self.dim}, {body})"


def boundary(c: Chain) -> Chain:
    """Alternating-sum boundary; a 0-chain has the zero boundary in degree -1."""
    out = Chain(c.dim - 1)
    if c.dim <= 0:
        return out
    for s, coeff in c.terms.items():
        for i in range(len(s)):
            out._add(s[:i] + s[i + 1 :], -coeff if i % 2 else coeff)
    return out


def join(apex: Vertex, c: Chain) -> Chain:
    """``apex * c``: prepend ``apex`` to every simplex (terms containing it vanish)."""
    out = Chain(c.dim + 1)
    for s, coeff in c.terms.items():
        sign, key = oriented((apex,) + s)
        if sign:
            out._add(key, sign * coeff)
    return out


class SimplicialComplexRep:
    """A finite simplicial complex, optionally with a group action by one generator.

    ``action`` maps each vertex to its image under the generator; powers of it
    give the whole cyclic group.
    """

    def __init__(
        self,
        simplices: Iterable[Sequence[Vertex]],
        action: Mapping[Vertex, Vertex] | None = None,
        *,
        close: bool = True,
        name: str = "",
    ):
        faces: set[Simplex] = set()
        for s in simplices:
            key = tuple(sorted(s))
            if not key:
                continue
            if close:
                for size in range(1, len(key) + 1):
                    faces.update(combinations(key, size))
            else:
                faces.add(key)
        self.faces = faces
        top = max((len(s) for s in faces), default=0)
        self.by_dim: list[list[Simplex]] = [[] for _ in range(top)]
        for s in sorted(faces):
            self.by_dim[len(s) - 1].append(s)
        self.vertices = [s[0] for s in self.by_dim[0]] if top else []
        self.action = dict(action) if action is not None else None
        self.name = name
        if not close:
            for s in faces:
                for size in range(1, len(s)):
                    for f in combinations(s, size):
                        if f not in faces:
                            raise ValueError(f"face {f!r} of {s!r} is missing")
        if self.action is not None:
            for s in faces:
                if tuple(sorted(self.action[v] for v in s)) not in faces:
                    raise ValueError(f"action does not map {s!r} to a simplex")

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self.faces

    def simplices(self, dim: int | None = None) -> list[Simplex]:
        if dim is None:
            return [s for layer in self.by_dim for s in layer]
        return self.by_dim[dim] if 0 <= dim < len(self.by_dim) else []

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self.by_dim]

    def act(self, c: Chain, power: int = 1) -> Chain:
        """Apply the generator ``power`` times to a chain of this complex."""
        if self.action is None:
            raise ValueError("complex carries no action")
        out = c
        for _ in range(power):
            nxt = Chain(out.dim)
            for s, coeff in out.terms.items():
                sign, key = oriented(tuple(self.action[v] for v in s))
                nxt._add(key, sign * coeff)
            out = nxt
        return out

    def action_order(self) -> int:
        if self.action is None:
            return 1
        order = 1
        for v in self.vertices:
            k, w = 1, self.action[v]
            while w != v:
                w = self.action[w]
                k += 1
            order = max(order, k)
        return order

    def is_free(self) -> bool:
        """No non-identity group element fixes any simplex (as a vertex set)."""
        if self.action is None:
            return False
        g = self.action_order()
        for s in self.faces:
            img = s
            for _ in range(1, g):
                img = tuple(sorted(self.action[v] for v in img))
                if img == s:
                    return False
        return True


def euler_characteristic(K: SimplicialComplexRep) -> int:
    """Alternating count of faces, straight from the face list."""
    total = 0
    for s in K.faces:
        total += -1 if len(s) % 2 == 0 else 1
    return total


class ChainMap:
    """Degree-preserving homomorphism ``C(source) -> C(target)`` given on basis simplices.

    Construction verifies ``boundary(nu(s)) == nu(boundary(s))`` for every
    basis simplex unless ``verify=False``.
    """

    def __init__(
        self,
        source: SimplicialComplexRep,
        target: SimplicialComplexRep,
        images: Mapping[Simplex, Chain],
        *,
        verify: bool = True,
        name: str = "",
    ):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.name = name
        for s in source.faces:
            img = self.images.setdefault(s, Chain(len(s) - 1))
            for t in img.terms:
                if t not in target.faces:
                    raise NotSimplicial(s, t)
        if verify:
            self.verify()

    def basis_image(self, s: Simplex) -> Chain:
        return self.images[s]

    def __call__(self, c: Chain) -> Chain:
        out = Chain(c.dim)
        for s, coeff in c.terms.items():
            for t, d in self.images[s].terms.items():
                out._add(t, coeff * d)
        return out

    def verify(self) -> None:
        for s in self.source.faces:
            if boundary(self.images[s]) != self(boundary(Chain(len(s) - 1, {s: 1}))):
                raise NotAChainMap(s)

    def is_augmentation_preserving(self) -> bool:
        return all(self.images[(v,)].augmentation() == 1 for v in self.source.vertices)

    def is_equivariant(self) -> bool:
        """``nu(g s) == g nu(s)`` on every basis simplex, for the generator ``g``."""
        if self.source.action is None or self.target.action is None:
            raise NotEquivariant("both complexes need an action")
        for s in self.source.faces:
            basis = Chain(len(s) - 1, {s: 1})
            if self(self.source.act(basis)) != self.target.act(self.images[s]):
                return False
        return True

    def then(self, other: "ChainMap") -> "ChainMap":
        """``other . self`` (apply ``self`` first)."""
        if other.source is not self.target and other.source.faces != self.target.faces:
            raise ValueError("composition: target and source differ")
        images = {s: other(img) for s, img in self.images.items()}
        return ChainMap(self.source, other.target, images, verify=False,
                        name=f"{other.name}.{self.name}")

    def restricted_to(self, sub: SimplicialComplexRep) -> "ChainMap":
        """Restriction to a subcomplex that contains the image (a self-map of ``sub``)."""
        images = {}
        for s in sub.faces:
            img = self.images[s]
            for t in img.terms:
                if t not in sub.faces:
                    raise ValueError(f"image of {s!r} leaves the subcomplex at {t!r}")
            images[s] = img
        return ChainMap(sub, sub, images, verify=False, name=f"{self.name}|")


def identity_map(K: SimplicialComplexRep) -> ChainMap:
    return ChainMap(K, K, {s: Chain(len(s) - 1, {s: 1}) for s in K.faces}, verify=False, name="id")


def simplicial_map(
    source: SimplicialComplexRep,
    target: SimplicialComplexRep,
    f: Mapping[Vertex, Vertex] | Callable[[Vertex], Vertex],
    *,
    verify: bool = True,
    name: str = "",
) -> ChainMap:
    """Chain map induced by a vertex map; collapsed simplices go to zero."""
    fv = f if callable(f) else f.__getitem__
    vmap = {v: fv(v) for v in source.vertices}
    images = {}
    for s in source.faces:
        img_vertices = tuple(vmap[v] for v in s)
        if tuple(sorted(set(img_vertices))) not in target.faces:
            raise NotSimplicial(s, img_vertices)
        images[s] = Chain.simplex(img_vertices)
    return ChainMap(source, target, images, verify=verify, name=name)


def lefschetz(nu: ChainMap) -> int:
    """``sum_k (-1)^k trace(nu_k)`` from the diagonal coefficients."""
    if nu.source.faces != nu.target.faces:
        raise ValueError("Lefschetz number needs a self-map")
    total = 0
    for s in nu.source.faces:
        d = nu.images[s].coeff(s)
        total += -d if len(s) % 2 == 0 else d
    return total


class ChainHomotopy:
    """Degree-raising homomorphism ``C_k -> C_{k+1}`` given on basis simplices."""

    def __init__(self, complex_: SimplicialComplexRep, images: Mapping[Simplex, Chain]):
        self.complex = complex_
        self.images = dict(images)

    def __call__(self, c: Chain) -> Chain:
        out = Chain(c.dim + 1)
        for s, coeff in c.terms.items():
            for t, d in self.images[s].terms.items():
                out._add(t, coeff * d)
        return out

    def after(self, nu: ChainMap) -> "ChainHomotopy":
        """``D . nu``."""
        return ChainHomotopy(self.complex, {s: self(img) for s, img in nu.images.items()})

    def commutator(self) -> ChainMap:
        """``boundary D + D boundary`` as a chain map."""
        K = self.complex
        images = {}
        for s in K.faces:
            basis = Chain(len(s) - 1, {s: 1})
            images[s] = boundary(self(basis)) + self(boundary(basis))
        return ChainMap(K, K, images, verify=False)


def constant_map(K: SimplicialComplexRep, v0: Vertex) -> ChainMap:
    return simplicial_map(K, K, lambda _: v0, verify=False, name="const")


def is_cone(K: SimplicialComplexRep, apex: Vertex) -> bool:
    if (apex,) not in K.faces:
        return False
    return all(s in K.faces if apex in s else tuple(sorted(s + (apex,))) in K.faces for s in K.faces)


def cone_homotopy(K: SimplicialComplexRep, apex: Vertex) -> ChainHomotopy:
    """``D(s) = apex * s`` if ``apex`` is not in ``s``, else 0; satisfies ``dD + Dd = id - a``."""
    if not is_cone(K, apex):
        raise NotACone(f"{apex!r} is not a cone apex")
    images = {}
    for s in K.faces:
        images[s] = Chain(len(s)) if apex in s else Chain.simplex((apex,) + s)
    D = ChainHomotopy(K, images)
    expected_id, expected_a = identity_map(K), constant_map(K, apex)
    comm = D.commutator()
    for s in K.faces:
        if comm.images[s] != expected_id.images[s] - expected_a.images[s]:
            raise AssertionError(f"cone homotopy identity fails at {s!r}")
    return D


def find_apex(K: SimplicialComplexRep) -> Vertex | None:
    for v in K.vertices:
        if is_cone(K, v):
            return v
    return None


def verify_cone_lemma(K: SimplicialComplexRep, nu: ChainMap, apex: Vertex | None = None) -> int:
    """Check that an augmentation-preserving self-map of a cone has Lefschetz number 1.

    Also checks that ``Dnu`` is a homotopy from ``nu`` to the constant map and
    that the Lefschetz number of ``dDnu + Dnu d`` vanishes.
    """
    apex = find_apex(K) if apex is None else apex
    if apex is None:
        raise NotACone("complex has no cone apex")
    if not nu.is_augmentation_preserving():
        raise NotAugmentationPreserving("vertex images must have coefficient sum 1")
    D = cone_homotopy(K, apex)
    Dbar = D.after(nu)
    comm = Dbar.commutator()
    a = constant_map(K, apex)
    for s in K.faces:
        if comm.images[s] != nu.images[s] - a.images[s]:
            raise AssertionError(f"D nu is not a homotopy nu ~ a at {s!r}")
    if lefschetz(comm) != 0:
        raise AssertionError("Lefschetz number of a homotopy commutator is non-zero")
    value = lefschetz(nu)
    if value != 1:
        raise AssertionError(f"Lefschetz number {value} != 1 on a cone")
    return value


def barycentric_sd(K: SimplicialComplexRep) -> tuple[SimplicialComplexRep, ChainMap]:
    """Order complex of the face poset and the subdivision chain map ``sd(s) = b_s * sd(ds)``."""
    chains: list[tuple] = []
    faces_sorted = sorted(K.faces, key=lambda s: (len(s), s))
    supers: dict[Simplex, list[Simplex]] = {s: [] for s in K.faces}
    for s in K.faces:
        for size in range(1, len(s)):
            for f in combinations(s, size):
                supers[f].append(s)

    def grow(chain):
        chains.append(chain)
        for t in supers[chain[-1]]:
            grow(chain + (t,))

    for s in faces_sorted:
        grow((s,))
    action = None
    if K.action is not None:
        action = {s: tuple(sorted(K.action[v] for v in s)) for s in K.faces}
    sdK = SimplicialComplexRep(chains, action, close=False, name=f"sd {K.name}")

    images: dict[Simplex, Chain] = {}
    for s in faces_sorted:
        if len(s) == 1:
            images[s] = Chain(0, {(s,): 1})
        else:
            bd = boundary(Chain(len(s) - 1, {s: 1}))
            acc = Chain(len(s) - 2)
            for f, c in bd.terms.items():
                acc = acc + images[f] * c
            images[s] = join(s, acc)
    return sdK, ChainMap(K, sdK, images, name="sd")


def random_chain(K: SimplicialComplexRep, dim: int, rng: random.Random, terms: int = 5) -> Chain:
    layer = K.simplices(dim)
    c = Chain(dim)
    for _ in range(terms):
        if layer:
            c = c + Chain(dim, {rng.choice(layer): rng.randint(-5, 5)})
    return c


# ---------------------------------------------------------------- chessboard square


def chessboard_complex(n: int, p: int, s) -> SimplicialComplexRep:
    """Faces = ``n x p`` 0/1 matrices with at most ``s_i`` ones in row ``i``; vertices
    are ``(row, column)``; the generator shifts columns by one."""
    from .tucker import FaceIndex

    index = FaceIndex(n, p, s)
    action = {(i, j): (i, (j + 1) % p) for i in range(1, n + 1) for j in range(p)}
    return SimplicialComplexRep([F.positions() for F in index.faces], action, name="chessboard")


class DimensionShortfall(ValueError):
    pass


class LabelChainExists(ValueError):
    def __init__(self, chain):
        super().__init__(f"labeling has a fully signed chain {chain!r}; it is not simplicial")
        self.chain = chain


def _row_of_rank(rank: int, s: Sequence[int]) -> int:
    acc = 0
    for t, x in enumerate(s, start=1):
        acc += x
        if rank <= acc:
            return t
    raise DimensionShortfall(f"rank {rank} exceeds the total multiplicity {acc}")


@dataclass
class KappaMap:
    """Equivariant vertex map from the subdivided color complex to chessboard positions."""

    n: int
    p: int
    s: tuple[int, ...]
    m: int
    vertex_map: dict  # face of the color complex (sorted positions) -> (row, column)
    top: tuple[int, int] | None  # image of the added top element, when it fits

    def row_of_rank(self, rank: int) -> int:
        return _row_of_rank(rank, self.s)

    def __call__(self, face) -> tuple[int, int]:
        return self.vertex_map[face]


TOP = ("top",)


def kappa_map(n: int, p: int, s, m: int) -> KappaMap:
    """Rank level ``l`` goes to row ``min{t : l <= s_1 + ... + s_t}``; the least face of each
    orbit goes to column 0 and its rotations follow."""
    from .hypercore import as_multiplicities
    from .tucker import FaceIndex, zp_action

    mv = as_multiplicities(s, n)
    if m * (p - 1) > mv.total:
        raise DimensionShortfall(f"m (p - 1) = {m * (p - 1)} exceeds total multiplicity {mv.total}")
    Q = FaceIndex(m, p, p - 1)
    vertex_map = {}
    for rep in Q.orbit_representatives():
        F = Q.faces[rep]
        row = _row_of_rank(F.size(), mv.s)
        for k in range(p):
            vertex_map[zp_action(F, k).positions()] = (row, k)
    top = None
    if m * (p - 1) + 1 <= mv.total:
        top = (_row_of_rank(m * (p - 1) + 1, mv.s), 0)
    return KappaMap(n, p, mv.s, m, vertex_map, top)


def color_complex(m: int, p: int) -> SimplicialComplexRep:
    """``m x p`` matrices with no full row, as a complex on positions with column shift."""
    return chessboard_complex(m, p, p - 1)


def kappa_hat_image(kappa: KappaMap) -> SimplicialComplexRep:
    """Image of the subdivided color complex coned off by the top element."""
    if kappa.top is None:
        raise DimensionShortfall("no room for the top element")
    Y = color_complex(kappa.m, kappa.p)
    sdY, _ = barycentric_sd(Y)
    images = set()
    for ch in sdY.faces:
        images.add(tuple(sorted({kappa(v) for v in ch} | {kappa.top})))
    return SimplicialComplexRep(images)


@dataclass
class Square:
    nu: ChainMap
    X: SimplicialComplexRep
    pieces: dict


def compose_square(n: int, p: int, s, m: int, lam) -> Square:
    """The self-map ``kappa# . sd . lambda# . sd`` of the chessboard chain complex."""
    from .tucker import ChessboardFace

    X = chessboard_complex(n, p, s)
    kappa = kappa_map(n, p, s, m)
    sd1_complex, sd1 = barycentric_sd(X)
    Y = color_complex(m, p)

    def label(face):
        lab = lam(ChessboardFace.from_positions(face, p))
        return (lab.value, lab.sign)

    for ch in sd1_complex.faces:
        img = {label(v) for v in ch}
        rows = {}
        for v, j in img:
            rows.setdefault(v, set()).add(j)
        if any(len(cols) == p for cols in rows.values()):
            raise LabelChainExists(ch)
    lam_sharp = simplicial_map(sd1_complex, Y, label, name="lambda")
    sd2_complex, sd2 = barycentric_sd(Y)
    kappa_sharp = simplicial_map(sd2_complex, X, kappa, name="kappa")
    nu = sd1.then(lam_sharp).then(sd2).then(kappa_sharp)
    nu = ChainMap(X, X, nu.images, name="nu")
    return Square(nu, X, {"sd1": sd1, "lambda": lam_sharp, "sd2": sd2, "kappa": kappa_sharp})


# ------------------------------------------------------------------ random maps


def _is_simplicial(K: SimplicialComplexRep, f: Mapping[Vertex, Vertex], target=None) -> bool:
    faces = (target or K).faces
    return all(tuple(sorted({f[v] for v in s})) in faces for s in K.by_dim[-1]) and all(
        tuple(sorted({f[v] for v in s})) in faces for layer in K.by_dim[1:-1] for s in layer
    )


def random_vertex_map(K: SimplicialComplexRep, rng: random.Random, tries: int = 50) -> dict:
    """A random simplicial self-map: rejection sampling, else collapse onto a random facet."""
    verts = K.vertices
    for _ in range(tries):
        f = {v: rng.choice(verts) for v in verts}
        if _is_simplicial(K, f):
            return f
    top = rng.choice(K.by_dim[-1])
    return {v: rng.choice(top) for v in verts}


def random_affine_map(K: SimplicialComplexRep, rng: random.Random, terms: int = 3) -> ChainMap:
    """Integer combination of simplicial self-maps with coefficients summing to 1."""
    coeffs = [rng.randint(-3, 3) for _ in range(terms - 1)]
    coeffs.append(1 - sum(coeffs))
    images = {s: Chain(len(s) - 1) for s in K.faces}
    for a in coeffs:
        f = simplicial_map(K, K, random_vertex_map(K, rng), verify=False)
        for s in K.faces:
            images[s] = images[s] + f.images[s] * a
    return ChainMap(K, K, images, name="affine")


def random_equivariant_vertex_map(K: SimplicialComplexRep, rng: random.Random, tries: int = 200) -> dict | None:
    """Random simplicial vertex map commuting with the generator, or ``None``."""
    if K.action is None:
        raise ValueError("complex carries no action")
    g = K.action
    reps, seen = [], set()
    for v in K.vertices:
        if v in seen:
            continue
        reps.append(v)
        w = v
        while w not in seen:
            seen.add(w)
            w = g[w]
    for _ in range(tries):
        f = {}
        ok = True
        for v in reps:
            img, w = rng.choice(K.vertices), v
            while w not in f:
                f[w] = img
                w, img = g[w], g[img]
            if f[w] != img:
                ok = False
                break
        if ok and _is_simplicial(K, f):
            return f
    return None


def equivariant_combination(K: SimplicialComplexRep, maps: Sequence[Mapping], coeffs: Sequence[int]) -> ChainMap:
    images = {s: Chain(len(s) - 1) for s in K.faces}
    for f, a in zip(maps, coeffs):
        fm = simplicial_map(K, K, f, verify=False)
        for s in K.faces:
            images[s] = images[s] + fm.images[s] * a
    return ChainMap(K, K, images, name="equivariant")


def cone_over(K: SimplicialComplexRep, apex: Vertex = "v0") -> SimplicialComplexRep:
    """``K * apex``; the apex must compare with the existing vertices."""
    return SimplicialComplexRep(list(K.faces) + [s + (apex,) for s in K.faces] + [(apex,)])


def boundary_of_simplex(dim: int) -> SimplicialComplexRep:
    verts = tuple(range(dim + 1))
    return SimplicialComplexRep(combinations(verts, dim))


def cyclic_free_complex(p: int, length: int) -> SimplicialComplexRep:
    """A cycle on ``p * length`` vertices with rotation by ``length`` (free Z_p action)."""
    N = p * length
    edges = [(i, (i + 1) % N) for i in range(N)]
    return SimplicialComplexRep(edges, {i: (i + length) % N for i in range(N)})
