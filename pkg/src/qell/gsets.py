"""Finite G-sets and the combinatorial skeleton of the constant-loop groupoid.

A G-set stores a verified action table.  The inertia skeleton lists, per
torsion conjugacy class representative g, the fixed set X^g together with its
decomposition into centralizer orbits; every downstream structure map works
through the canonical orbit representatives and cached transport elements
recorded here.
"""

from __future__ import annotations

from .errors import NotSubgroupError, PreconditionError
from .groups import FiniteGroup, GroupHom, Permutation


class FiniteGSet:
    """A finite set {0..n-1} with a verified action of a finite group."""

    def __init__(self, group: FiniteGroup, n_points: int, act, name: str = "",
                 check: bool = True, labels=None):
        self.group = group
        self.n_points = int(n_points)
        if callable(act):
            table = {g: tuple(act(g, x) for x in range(self.n_points))
                     for g in group.elements}
        else:
            table = {g: tuple(row) for g, row in act.items()}
        self._table = table
        self.name = name or f"gset<{group.name}:{self.n_points}>"
        self.labels = list(labels) if labels is not None else None
        if check:
            self._verify()

    def _verify(self):
        e = self.group.identity
        if self._table[e] != tuple(range(self.n_points)):
            raise PreconditionError(f"{self.name}: identity does not act trivially")
        for g in self.group.elements:
            row = self._table[g]
            if sorted(row) != list(range(self.n_points)):
                raise PreconditionError(f"{self.name}: {g!r} does not act bijectively")
        for g in self.group.elements:
            for h in self.group.elements:
                gh = g * h
                for x in range(self.n_points):
                    if self._table[gh][x] != self._table[g][self._table[h][x]]:
                        raise PreconditionError(
                            f"{self.name}: action not compatible at ({g!r}, {h!r}, {x})"
                        )

    def act(self, g: Permutation, x: int) -> int:
        return self._table[g][x]

    def points(self) -> range:
        return range(self.n_points)

    def restrict_group(self, H: FiniteGroup) -> "FiniteGSet":
        """Same points, action restricted to a subgroup H <= G."""
        if not self.group.is_subgroup(H):
            raise NotSubgroupError(f"{H.name} is not a subgroup of {self.group.name}")
        return FiniteGSet(H, self.n_points, {h: self._table[h] for h in H.elements},
                          name=f"{self.name}|{H.name}", check=False, labels=self.labels)

    def via_hom(self, phi: GroupHom) -> "FiniteGSet":
        """Same points, G acting through phi: G -> group of self."""
        if phi.codomain != self.group:
            raise PreconditionError("hom codomain does not act on this set")
        return FiniteGSet(phi.domain, self.n_points,
                          {g: self._table[phi(g)] for g in phi.domain.elements},
                          name=f"{self.name}*{phi.domain.name}", check=False,
                          labels=self.labels)

    def key(self):
        return (self.group.key(), self.n_points,
                tuple(self._table[g] for g in self.group.elements))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGSet) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"{self.name} ({self.n_points} points)"


def point_set(G: FiniteGroup) -> FiniteGSet:
    return FiniteGSet(G, 1, lambda g, x: 0, name="pt", check=False)

def regular_gset(G: FiniteGroup) -> FiniteGSet:
    """G acting on itself by left translation; points indexed by element order."""
    idx = {g: i for i, g in enumerate(G.elements)}
    return FiniteGSet(G, G.order,
                      {g: tuple(idx[g * h] for h in G.elements) for g in G.elements},
                      name=f"reg<{G.name}>", check=False)

def coset_gset(G: FiniteGroup, H: FiniteGroup) -> FiniteGSet:
    """G/H with left translation; cosets labelled by their least member."""
    if not G.is_subgroup(H):
        raise NotSubgroupError(f"{H.name} is not a subgroup of {G.name}")
    rep_of = {}
    reps = []
    for g in G.elements:
        coset = min(g * h for h in H.elements)
        if coset not in rep_of:
            rep_of[coset] = len(reps)
            reps.append(coset)
        rep_of[g] = rep_of[coset]
    return FiniteGSet(G, len(reps),
                      {g: tuple(rep_of[min(g * r * h for h in H.elements)] for r in reps)
                       for g in G.elements},
                      name=f"{G.name}/{H.name}", check=False, labels=reps)

def product_gset(X: FiniteGSet, Y: FiniteGSet, P: FiniteGroup) -> FiniteGSet:
    """X x Y as a P-set for P = direct_product(X.group, Y.group).

    Point (x, y) is stored at index x * |Y| + y.
    """
    from .groups import product_split
    nY = Y.n_points

    def act(g, pt):
        a, b = product_split(P, g)
        x, y = divmod(pt, nY)
        return X.act(a, x) * nY + Y.act(b, y)

    table = {}
    for g in P.elements:
        a, b = product_split(P, g)
        rowX = [X.act(a, x) for x in range(X.n_points)]
        rowY = [Y.act(b, y) for y in range(nY)]
        table[g] = tuple(rowX[x] * nY + rowY[y]
                         for x in range(X.n_points) for y in range(nY))
    return FiniteGSet(P, X.n_points * nY, table,
                      name=f"{X.name}x{Y.name}", check=False)


def fixed_points(X: FiniteGSet, g: Permutation) -> list[int]:
    return [x for x in X.points() if X.act(g, x) == x]


class Orbit:
    """One orbit of an acting group on a point subset.

    ``transport[x]`` is a fixed group element carrying the orbit
    representative to x; the representative is the least point.
    """

    def __init__(self, rep: int, points, stabilizer: FiniteGroup, transport: dict):
        self.rep = rep
        self.points = tuple(points)
        self.stabilizer = stabilizer
        self.transport = transport

    def __repr__(self) -> str:
        return f"orbit(rep={self.rep}, size={len(self.points)})"


def orbits_with_stabilizers(C: FiniteGroup, X: FiniteGSet, subset=None) -> list[Orbit]:
    """Decompose ``subset`` (default: all points) into C-orbits.

    C must act on X's points (a subgroup of X.group, or X.group itself).
    Orbits are listed by increasing representative.
    """
    if subset is None:
        subset = range(X.n_points)
    remaining = sorted(set(subset))
    out = []
    seen = set()
    for x in remaining:
        if x in seen:
            continue
        transport = {x: C.identity}
        for c in C.elements:
            y = X.act(c, x)
            if y not in transport:
                transport[y] = c
        pts = sorted(transport)
        stab_members = [c for c in C.elements if X.act(c, x) == x]
        stab = FiniteGroup(C.degree, stab_members, name=f"stab({x})",
                           _elements=stab_members)
        assert len(pts) * stab.order == C.order
        out.append(Orbit(x, pts, stab, transport))
        seen.update(pts)
    return out


def induced_gset(G: FiniteGroup, H: FiniteGroup, X: FiniteGSet) -> FiniteGSet:
    """G x_H X: H-orbits of G x X under (g, x) ~ (g h^{-1}, h x).

    Points are labelled by canonical pairs (least (element index, point)).
    """
    if not G.is_subgroup(H):
        raise NotSubgroupError(f"{H.name} is not a subgroup of {G.name}")
    if X.group != H:
        raise PreconditionError("X must be an H-set")

    def canon(g: Permutation, x: int) -> tuple[int, int]:
        return min((G.index(g * h.inverse()), X.act(h, x)) for h in H.elements)

    rep_index: dict[tuple[int, int], int] = {}
    reps: list[tuple[int, int]] = []
    for gi, g in enumerate(G.elements):
        for x in X.points():
            c = canon(g, x)
            if c not in rep_index:
                rep_index[c] = 0
    for c in sorted(rep_index):
        rep_index[c] = len(reps)
        reps.append(c)
    assert len(reps) * H.order == G.order * X.n_points

    table = {}
    for a in G.elements:
        row = []
        for (gi, x) in reps:
            row.append(rep_index[canon(a * G.elements[gi], x)])
        table[a] = tuple(row)
    return FiniteGSet(G, len(reps), table, name=f"{G.name}x_{H.name}{X.name}",
                      check=False, labels=reps)


def quotient_set(X: FiniteGSet, G: FiniteGroup | None = None) -> list[tuple[int, ...]]:
    """The orbit partition X/G as a sorted list of point tuples."""
    G = G or X.group
    orbs = orbits_with_stabilizers(G, X)
    return [o.points for o in orbs]


class SkeletonEntry:
    """Data at one torsion class representative g: X^g and its orbit pieces."""

    def __init__(self, g: Permutation, order: int, centralizer: FiniteGroup,
                 fixed: tuple, orbits: list[Orbit]):
        self.g = g
        self.order = order
        self.centralizer = centralizer
        self.fixed = fixed
        self.orbits = orbits
        self.orbit_of_point = {}
        for oi, orb in enumerate(orbits):
            for x in orb.points:
                self.orbit_of_point[x] = oi

    def __repr__(self) -> str:
        return (f"skeleton@{self.g!r}: |X^g|={len(self.fixed)}, "
                f"{len(self.orbits)} orbit(s)")


class InertiaSkeleton:
    """Per conjugacy class rep g: the fixed set X^g cut into C_G(g)-orbits."""

    def __init__(self, G: FiniteGroup, X: FiniteGSet):
        if X.group != G:
            raise PreconditionError("X is not a G-set for the given G")
        self.group = G
        self.gset = X
        conj = G.conjugacy()
        self.conjugacy = conj
        entries = []
        for ci, g in enumerate(conj.class_reps):
            C = conj.centralizer(ci)
            fixed = tuple(fixed_points(X, g))
            orbits = orbits_with_stabilizers(C, X, fixed)
            for orb in orbits:
                if g not in orb.stabilizer:
                    raise PreconditionError(
                        f"stabilizer at {orb.rep} does not contain the class rep"
                    )
            entries.append(SkeletonEntry(g, g.order(), C, fixed, orbits))
        self.entries = entries

    def entry(self, class_idx: int) -> SkeletonEntry:
        return self.entries[class_idx]

    def __iter__(self):
        return iter(self.entries)


def inertia_skeleton(G: FiniteGroup, X: FiniteGSet) -> InertiaSkeleton:
    return InertiaSkeleton(G, X)
