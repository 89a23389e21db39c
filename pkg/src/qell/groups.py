"""Finite permutation groups: enumeration, conjugacy structure, homomorphisms.

Groups are fully enumerated with a deterministic element order (lexicographic
on image tuples), so conjugacy classes, centralizers and transporters are
exact brute-force computations.  The enumeration order fixes every canonical
representative downstream.
"""

from __future__ import annotations

import math
import os

from .errors import (
    GroupTooLargeError,
    InvalidGeneratorError,
    NotHomomorphismError,
    NotSubgroupError,
    PreconditionError,
)
from .perm import Permutation, from_cycles, identity

DEFAULT_ORDER_CAP = 20160


def order_cap() -> int:
    env = os.environ.get("QELL_ORDER_CAP")
    return int(env) if env else DEFAULT_ORDER_CAP


class FiniteGroup:
    """A permutation group with a cached, sorted element list."""

    def __init__(self, degree: int, generators, name: str = "", spec: str | None = None,
                 _elements=None):
        self.degree = int(degree)
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise InvalidGeneratorError(
                    f"invalid generator: degree {g.degree} != group degree {self.degree}"
                )
            gens.append(g)
        self.generators = tuple(gens)
        if _elements is None:
            _elements = _closure(self.degree, self.generators)
        self.elements = tuple(sorted(_elements))
        self.name = name or f"group<{self.degree}:{len(self.elements)}>"
        self.spec = spec
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._conjugacy = None
        self._exponent = None
        self._key = None
        self.identity = identity(self.degree)
        if self.identity not in self._index:
            raise InvalidGeneratorError("invalid generator: identity missing from closure")
        # metadata set by direct_product()
        self.factor_degrees: tuple[int, int] | None = None
        self.factors: tuple["FiniteGroup", "FiniteGroup"] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise PreconditionError(f"{g!r} is not an element of {self.name}") from None

    def __contains__(self, g) -> bool:
        return isinstance(g, Permutation) and g in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def key(self):
        """Structural identity used for caching: degree plus element tuple."""
        if self._key is None:
            self._key = (self.degree, tuple(g.images for g in self.elements))
        return self._key

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, FiniteGroup) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"{self.name} (order {self.order}, degree {self.degree})"

    def exponent(self) -> int:
        if self._exponent is None:
            e = 1
            for g in self.elements:
                e = math.lcm(e, g.order())
            self._exponent = e
        return self._exponent

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def is_subgroup(self, other: "FiniteGroup") -> bool:
        """True if ``other`` is a subgroup of self (same degree, subset)."""
        return other.degree == self.degree and all(g in self for g in other.elements)

    def subgroup(self, elements, name: str = "") -> "FiniteGroup":
        """The subgroup generated by ``elements`` (must lie in self)."""
        for g in elements:
            if g not in self:
                raise NotSubgroupError(f"{g!r} is not in {self.name}")
        return FiniteGroup(self.degree, tuple(elements), name=name or f"sub<{self.name}>")

    def conjugacy(self) -> "ConjugacyData":
        if self._conjugacy is None:
            self._conjugacy = _conjugacy_data(self)
        return self._conjugacy

    def centralizer(self, g: Permutation) -> "FiniteGroup":
        members = [h for h in self.elements if h * g == g * h]
        return FiniteGroup(self.degree, members, name=f"C_{self.name}({g!r})",
                           _elements=members)


def _closure(degree: int, generators) -> list[Permutation]:
    cap = order_cap()
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise GroupTooLargeError(
                            f"group too large: order exceeds cap {cap}"
                        )
        frontier = nxt
    return list(seen)


def make_group(degree: int, generators, name: str = "", spec: str | None = None) -> FiniteGroup:
    """Enumerate the group generated by ``generators`` on {0..degree-1}."""
    return FiniteGroup(degree, generators, name=name, spec=spec)


class ConjugacyData:
    """Conjugacy classes of a group, with centralizers and transport helpers.

    Class representatives are the least elements of their classes in the
    group's element order, listed in that same order.
    """

    def __init__(self, group: FiniteGroup, class_reps, class_of, class_elements):
        self.group = group
        self.class_reps = tuple(class_reps)
        self.class_of = class_of          # Permutation -> class index
        self.class_elements = tuple(tuple(c) for c in class_elements)
        self.class_sizes = tuple(len(c) for c in class_elements)
        self._centralizers: dict[int, FiniteGroup] = {}
        self._inverse_classes: tuple[int, ...] | None = None

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def class_index(self, g: Permutation) -> int:
        try:
            return self.class_of[g]
        except KeyError:
            raise PreconditionError(f"{g!r} is not an element of {self.group.name}") from None

    def centralizer(self, class_idx: int) -> FiniteGroup:
        if class_idx not in self._centralizers:
            self._centralizers[class_idx] = self.group.centralizer(self.class_reps[class_idx])
        return self._centralizers[class_idx]

    def transport_to_rep(self, g: Permutation) -> tuple[int, Permutation]:
        """Return (class index i, w) with ``g == w * rep_i * w^{-1}``."""
        i = self.class_index(g)
        rep = self.class_reps[i]
        ts = transporter(self.group, g, rep)
        return i, ts[0]

    def power_class(self, class_idx: int, m: int) -> int:
        return self.class_index(self.class_reps[class_idx] ** m)

    def inverse_classes(self) -> tuple[int, ...]:
        if self._inverse_classes is None:
            self._inverse_classes = tuple(
                self.class_index(rep.inverse()) for rep in self.class_reps)
        return self._inverse_classes

    def inverse_class(self, class_idx: int) -> int:
        return self.inverse_classes()[class_idx]


def _conjugacy_data(G: FiniteGroup) -> ConjugacyData:
    class_of: dict[Permutation, int] = {}
    reps, classes = [], []
    for g in G.elements:
        if g in class_of:
            continue
        # orbit of g under conjugation by the generators
        orbit = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for s in G.generators:
                    y = s * x * s.inverse()
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        idx = len(reps)
        reps.append(g)
        cls = sorted(orbit)
        classes.append(cls)
        for x in cls:
            class_of[x] = idx
    data = ConjugacyData(G, reps, class_of, classes)
    assert sum(data.class_sizes) == G.order
    return data


def transporter(G: FiniteGroup, g: Permutation, g2: Permutation) -> list[Permutation]:
    """The set {x in G : g*x == x*g2}, sorted; empty iff g, g2 not conjugate."""
    return [x for x in G.elements if g * x == x * g2]


class GroupHom:
    """A verified homomorphism between two finite groups."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup,
                 image_of: dict, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.image_of = dict(image_of)
        if check:
            self._verify()

    def _verify(self):
        if set(self.image_of) != set(self.domain.elements):
            raise NotHomomorphismError("image undefined: map is not total on the domain")
        for g, img in self.image_of.items():
            if img not in self.codomain:
                raise NotHomomorphismError(f"image {img!r} is not in the codomain")
        for a in self.domain.elements:
            fa = self.image_of[a]
            for b in self.domain.elements:
                if self.image_of[a * b] != fa * self.image_of[b]:
                    raise NotHomomorphismError(
                        f"not a homomorphism: fails at ({a!r}, {b!r})"
                    )

    def __call__(self, g: Permutation) -> Permutation:
        return self.image_of[g]

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner (apply ``inner`` first)."""
        if inner.codomain != self.domain:
            raise PreconditionError("homomorphisms not composable")
        return GroupHom(inner.domain, self.codomain,
                        {g: self(inner(g)) for g in inner.domain.elements}, check=False)

    def kernel(self) -> FiniteGroup:
        e = self.codomain.identity
        members = [g for g in self.domain.elements if self.image_of[g] == e]
        return FiniteGroup(self.domain.degree, members, name=f"ker<{self.domain.name}>",
                           _elements=members)

    @staticmethod
    def identity_on(G: FiniteGroup) -> "GroupHom":
        return GroupHom(G, G, {g: g for g in G.elements}, check=False)

    @staticmethod
    def inclusion(H: FiniteGroup, G: FiniteGroup) -> "GroupHom":
        if not G.is_subgroup(H):
            raise NotSubgroupError(f"{H.name} is not a subgroup of {G.name}")
        return GroupHom(H, G, {h: h for h in H.elements}, check=False)

    @staticmethod
    def conjugation(S: FiniteGroup, w: Permutation) -> "GroupHom":
        """s -> w s w^{-1}, from S onto w S w^{-1}."""
        wi = w.inverse()
        mapping = {s: w * s * wi for s in S.elements}
        target = FiniteGroup(S.degree, list(mapping.values()),
                             name=f"conj<{S.name}>", _elements=list(mapping.values()))
        return GroupHom(S, target, mapping, check=False)


def make_hom(G: FiniteGroup, H: FiniteGroup, generator_images) -> GroupHom:
    """Extend generator images to a verified homomorphism G -> H."""
    imgs = []
    for im in generator_images:
        if not isinstance(im, Permutation):
            im = Permutation(im)
        if im not in H:
            raise NotHomomorphismError(f"image {im!r} is not in {H.name}")
        imgs.append(im)
    if len(imgs) != len(G.generators):
        raise NotHomomorphismError(
            f"expected {len(G.generators)} generator images, got {len(imgs)}"
        )
    image_of = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for g in frontier:
            fg = image_of[g]
            for s, fs in zip(G.generators, imgs):
                h = g * s
                fh = fg * fs
                if h in image_of:
                    if image_of[h] != fh:
                        raise NotHomomorphismError("image undefined: extension inconsistent")
                else:
                    image_of[h] = fh
                    nxt.append(h)
        frontier = nxt
    return GroupHom(G, H, image_of)


# ---------------------------------------------------------------------------
# builtin families

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError(f"C{n}: parameter out of range")
    gens = [] if n == 1 else [from_cycles(n, [tuple(range(n))])]
    return FiniteGroup(n, gens, name=f"C{n}", spec=f"C{n}")

def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError(f"S{n}: parameter out of range")
    if n == 1:
        return FiniteGroup(1, [], name="S1", spec="S1")
    gens = [from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(from_cycles(n, [tuple(range(n))]))
    return FiniteGroup(n, gens, name=f"S{n}", spec=f"S{n}")

def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError(f"A{n}: parameter out of range")
    if n <= 2:
        return FiniteGroup(max(n, 1), [], name=f"A{n}", spec=f"A{n}")
    gens = [from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    return FiniteGroup(n, gens, name=f"A{n}", spec=f"A{n}")

def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n."""
    if n < 1:
        raise PreconditionError(f"D{n}: parameter out of range")
    if n == 1:
        return FiniteGroup(2, [from_cycles(2, [(0, 1)])], name="D1", spec="D1")
    if n == 2:
        return FiniteGroup(4, [from_cycles(4, [(0, 1)]), from_cycles(4, [(2, 3)])],
                           name="D2", spec="D2")
    r = from_cycles(n, [tuple(range(n))])
    s = Permutation([(n - i) % n for i in range(n)])
    return FiniteGroup(n, [r, s], name=f"D{n}", spec=f"D{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "",
                   spec: str | None = None) -> FiniteGroup:
    """G x H acting on the disjoint union of the factors' point sets."""
    dG, dH = G.degree, H.degree

    def pair(a: Permutation, b: Permutation) -> Permutation:
        return Permutation(tuple(a.images) + tuple(i + dG for i in b.images))

    elements = [pair(a, b) for a in G.elements for b in H.elements]
    gens = [pair(a, H.identity) for a in G.generators] + \
           [pair(G.identity, b) for b in H.generators]
    if len(elements) > order_cap():
        raise GroupTooLargeError(f"group too large: order exceeds cap {order_cap()}")
    P = FiniteGroup(dG + dH, gens, name=name or f"{G.name}x{H.name}",
                    spec=spec, _elements=elements)
    P.factor_degrees = (dG, dH)
    P.factors = (G, H)
    return P


def product_split(P: FiniteGroup, g: Permutation) -> tuple[Permutation, Permutation]:
    """Split an element of a direct product into its two factor parts."""
    if P.factor_degrees is None:
        raise PreconditionError(f"{P.name} is not a direct product")
    dG, _ = P.factor_degrees
    return (Permutation(g.images[:dG]),
            Permutation(tuple(i - dG for i in g.images[dG:])))


def product_pair(P: FiniteGroup, a: Permutation, b: Permutation) -> Permutation:
    if P.factor_degrees is None:
        raise PreconditionError(f"{P.name} is not a direct product")
    dG, _ = P.factor_degrees
    return Permutation(tuple(a.images) + tuple(i + dG for i in b.images))


def builtin(family: str, *params) -> FiniteGroup:
    """Construct a named family member: C/S/A/D with one integer parameter."""
    table = {"C": cyclic, "S": symmetric, "A": alternating, "D": dihedral}
    if family not in table:
        raise PreconditionError(f"unknown family {family!r}")
    return table[family](*params)


def all_subgroups(G: FiniteGroup) -> list[FiniteGroup]:
    """Every subgroup of G, by closing unions of cyclic subgroups.

    Exponential in principle; meant for the small groups exercised in tests.
    """
    seen: dict[frozenset, FiniteGroup] = {}
    trivial = FiniteGroup(G.degree, [], name="1", _elements=[G.identity])
    seen[frozenset(trivial.elements)] = trivial
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H:
                    continue
                K = FiniteGroup(G.degree, list(H.elements) + [g])
                fz = frozenset(K.elements)
                if fz not in seen:
                    seen[fz] = K
                    nxt.append(K)
        frontier = nxt
    subs = sorted(seen.values(), key=lambda H: (H.order, [g.images for g in H.elements]))
    return subs
