"""Simplicial complexes from relations, covers, and explicit input.

Simplices are tuples of strictly increasing point indices; each
dimension layer is kept lexicographically sorted so downstream matrix
bases are deterministic. Complexes remember their enumeration cap
(max_dim) and whether enumeration was exhaustive below it (complete),
which is what lets homology flag an unreliable top dimension.

Flag complexes are grown incrementally: the k-cliques are extensions of
(k-1)-cliques by a later neighbor shared with every clique vertex, never
by scanning all vertex subsets. Directed input goes through a greedy
source-elimination test that recognizes vertex sets admitting a total
order with all forward pairs related.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .closure import Cover
from .relations import FiniteSpace, Relation, is_symmetric, relativize

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Layered simplex container, face-closed by construction.

    simplices[k] lists the k-simplices in lexicographic order; trailing
    empty layers are trimmed, so len(simplices) - 1 is the top occupied
    dimension. max_dim is the enumeration cap the complex was built
    with, and complete records whether anything above the cap could
    exist.
    """

    space: FiniteSpace
    simplices: tuple[tuple[Simplex, ...], ...]
    max_dim: int
    complete: bool = True
    _sets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        layers = [tuple(sorted(tuple(s) for s in layer)) for layer in self.simplices]
        while layers and not layers[-1]:
            layers.pop()
        object.__setattr__(self, "simplices", tuple(layers))
        object.__setattr__(self, "_sets", tuple(frozenset(layer) for layer in self.simplices))
        if self.max_dim < 0:
            raise ValueError("max_dim must be nonnegative")
        if len(self.simplices) - 1 > self.max_dim:
            raise ValueError("stored simplices exceed the enumeration cap")
        n = self.space.size
        for k, layer in enumerate(self.simplices):
            for s in layer:
                if len(s) != k + 1 or any(not 0 <= v < n for v in s):
                    raise ValueError(f"bad simplex {s} in dimension {k}")
                if any(a >= b for a, b in zip(s, s[1:])):
                    raise ValueError(f"simplex {s} is not strictly increasing")
                if k > 0:
                    for face in itertools.combinations(s, k):
                        if face not in self._sets[k - 1]:
                            raise ValueError(f"face {face} of {s} is missing: not face-closed")

    @property
    def top_dim(self) -> int:
        """Top occupied dimension; -1 for the empty complex."""
        return len(self.simplices) - 1

    def layer(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k <= self.top_dim:
            return self.simplices[k]
        return ()

    def has(self, s: Simplex) -> bool:
        k = len(s) - 1
        return 0 <= k <= self.top_dim and tuple(s) in self._sets[k]

    def n_cells(self, k: int) -> int:
        return len(self.layer(k))

    def vertices(self) -> frozenset[int]:
        return frozenset(v for (v,) in self.layer(0))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(layer) for k, layer in enumerate(self.simplices))

    def maximal_simplices(self) -> tuple[Simplex, ...]:
        """Simplices that are faces of nothing stored above them."""
        out = []
        for k, layer in enumerate(self.simplices):
            above = self._sets[k + 1] if k + 1 <= self.top_dim else frozenset()
            for s in layer:
                rest = set(range(self.space.size)) - set(s)
                if not any(tuple(sorted(s + (v,))) in above for v in rest):
                    out.append(s)
        return tuple(out)


@dataclass(frozen=True)
class ComplexPair:
    """A complex together with a subcomplex on the same space and cap."""

    total: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if self.total.space != self.sub.space:
            raise ValueError("pair members live on different spaces")
        if self.total.max_dim != self.sub.max_dim:
            raise ValueError("pair members have different enumeration caps")
        for k in range(self.sub.top_dim + 1):
            for s in self.sub.layer(k):
                if not self.total.has(s):
                    raise ValueError(f"subcomplex simplex {s} is not in the total complex")


def _clique_layers(n: int, nbr_above, accept, max_dim: int):
    layers = [[(i,) for i in range(n)]]
    frontier = [((i,), nbr_above[i]) for i in range(n)]
    for _ in range(max_dim):
        grown = []
        for simplex, cand in frontier:
            for j in sorted(cand):
                ext = simplex + (j,)
                if accept(ext):
                    grown.append((ext, cand & nbr_above[j]))
        if not grown:
            break
        layers.append([s for s, _ in grown])
        frontier = grown
    return layers


def _finished(layers, max_dim: int, ceiling: int) -> bool:
    # Nothing above the cap can exist if enumeration stopped early or the
    # cap already reaches the combinatorial ceiling.
    return len(layers) - 1 < max_dim or max_dim >= ceiling


def clique_complex(u: Relation, max_dim: int) -> SimplicialComplex:
    """Flag complex of a symmetric relation.

    Simplices are the vertex sets that are pairwise related; every point
    is a vertex because relations contain the diagonal. Non-symmetric
    input is rejected: apply directed_clique_complex or symmetric_part
    first, whichever matches the intent.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    if not is_symmetric(u):
        raise ValueError(
            "relation is not symmetric: use directed_clique_complex for order-aware "
            "simplices or symmetric_part(u) to symmetrize first"
        )
    n = u.space.size
    nbr = [frozenset(j for j in range(i + 1, n) if (i, j) in u.pairs) for i in range(n)]
    layers = _clique_layers(n, nbr, lambda s: True, max_dim)
    return SimplicialComplex(u.space, tuple(tuple(l) for l in layers), max_dim,
                             complete=_finished(layers, max_dim, n - 1))


def _has_source_order(vs: Simplex, pairs) -> bool:
    # Greedy source elimination: repeatedly remove a vertex with forward
    # pairs to everything remaining. Faces of recognized sets are always
    # recognized, so the greedy choice is never wrong.
    active = list(vs)
    out = {v: sum(1 for w in active if w != v and (v, w) in pairs) for v in active}
    for size in range(len(active), 1, -1):
        src = next((v for v in active if out[v] == size - 1), None)
        if src is None:
            return False
        active.remove(src)
        for v in active:
            if (v, src) in pairs:
                out[v] -= 1
    return True


def directed_clique_complex(u: Relation, max_dim: int) -> SimplicialComplex:
    """Order-aware flag complex of a possibly non-symmetric relation.

    A vertex set is a simplex when some linear order makes every forward
    pair related; diagonal pairs are ignored by the order test. On
    symmetric relations this agrees with clique_complex.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    n = u.space.size
    nbr = [
        frozenset(j for j in range(i + 1, n) if (i, j) in u.pairs or (j, i) in u.pairs)
        for i in range(n)
    ]
    layers = _clique_layers(n, nbr, lambda s: _has_source_order(s, u.pairs), max_dim)
    return SimplicialComplex(u.space, tuple(tuple(l) for l in layers), max_dim,
                             complete=_finished(layers, max_dim, n - 1))


def vr_complex(u: Relation, max_dim: int) -> SimplicialComplex:
    """Flag complex of a relation, order-aware exactly when it has to be."""
    if is_symmetric(u):
        return clique_complex(u, max_dim)
    return directed_clique_complex(u, max_dim)


def pair_complex(u: Relation, a, max_dim: int) -> ComplexPair:
    """Pair of flag complexes: the whole space against a nonempty subset.

    The subcomplex is built from the relation restricted to the subset
    and re-embedded on the ambient indices, which for flag complexes
    coincides with the full subcomplex on those vertices.
    """
    pts = sorted(u.space.check_points(a))
    if not pts:
        raise ValueError("the subset of a pair must be nonempty")
    total = vr_complex(u, max_dim)
    sub_rel = relativize(u, pts)
    sub_local = vr_complex(sub_rel, max_dim)
    embedded = tuple(
        tuple(tuple(pts[v] for v in s) for s in layer)
        for layer in sub_local.simplices
    )
    sub = SimplicialComplex(u.space, embedded, max_dim, complete=sub_local.complete)
    return ComplexPair(total, sub)


def full_subcomplex(k: SimplicialComplex, vertices) -> SimplicialComplex:
    """All stored simplices supported on the given vertex set."""
    vs = k.space.check_points(vertices)
    layers = tuple(
        tuple(s for s in layer if set(s) <= vs) for layer in k.simplices
    )
    return SimplicialComplex(k.space, layers, k.max_dim, complete=k.complete)


def nerve_of_cover(u: Cover, max_dim: int) -> SimplicialComplex:
    """Nerve of a cover: one vertex per set, simplices where intersections meet.

    Lives on a fresh space labeled U0, U1, ... in the cover's order.
    Empty member sets are rejected since they would be phantom vertices.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    for idx, s in enumerate(u.sets):
        if not s:
            raise ValueError(f"cover set {idx} is empty")
    m = len(u.sets)
    space = FiniteSpace(tuple(f"U{i}" for i in range(m)))
    layers = [[(i,) for i in range(m)]]
    frontier = [((i,), u.sets[i]) for i in range(m)]
    for _ in range(max_dim):
        grown = []
        for simplex, common in frontier:
            for j in range(simplex[-1] + 1, m):
                meet = common & u.sets[j]
                if meet:
                    grown.append((simplex + (j,), meet))
        if not grown:
            break
        layers.append([s for s, _ in grown])
        frontier = grown
    return SimplicialComplex(space, tuple(tuple(l) for l in layers), max_dim,
                             complete=_finished(layers, max_dim, m - 1))


def cover_complex(u: Cover, max_dim: int) -> SimplicialComplex:
    """Witness complex of a cover: simplices are subsets of single cover sets.

    This is the classical Vietoris construction for a cover, the partner
    of the nerve in Dowker duality. It can be strictly smaller than the
    flag complex of vietoris_relation(u), which only sees pairs.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    layers: list[set[Simplex]] = [set() for _ in range(max_dim + 1)]
    for s in u.sets:
        members = sorted(s)
        for k in range(min(len(members), max_dim + 1)):
            layers[k].update(itertools.combinations(members, k + 1))
    ceiling = max(len(s) for s in u.sets) - 1
    return SimplicialComplex(
        u.space,
        tuple(tuple(sorted(layer)) for layer in layers),
        max_dim,
        complete=len([l for l in layers if l]) - 1 < max_dim or max_dim >= ceiling,
    )


def explicit_complex(space: FiniteSpace, maximal_simplices, max_dim: int | None = None) -> SimplicialComplex:
    """Face closure of explicitly given simplices.

    The input is taken to be the entire intended complex, so the result
    is complete unless a smaller max_dim truncates it.
    """
    tops = [tuple(sorted(set(s))) for s in maximal_simplices]
    for s in tops:
        if not s:
            raise ValueError("simplices must be nonempty")
        space.check_points(s)
    native = max((len(s) - 1 for s in tops), default=0)
    cap = native if max_dim is None else max_dim
    if cap < 0:
        raise ValueError("max_dim must be nonnegative")
    layers: list[set[Simplex]] = [set() for _ in range(cap + 1)]
    for s in tops:
        for k in range(min(len(s), cap + 1)):
            layers[k].update(itertools.combinations(s, k + 1))
    return SimplicialComplex(
        space,
        tuple(tuple(sorted(layer)) for layer in layers),
        cap,
        complete=cap >= native,
    )


@dataclass(frozen=True)
class SimplicialVertexMap:
    """A vertex assignment that carries simplices to simplices.

    assignment has one entry per point of the domain space; entries are
    only meaningful (and only validated) at actual vertices of the
    domain complex. Degenerate images are fine as long as the collapsed
    vertex set is a codomain simplex.
    """

    domain: SimplicialComplex
    codomain: SimplicialComplex
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.domain.space.size:
            raise ValueError(
                f"assignment has {len(self.assignment)} entries, expected {self.domain.space.size}"
            )
        for (v,) in self.domain.layer(0):
            w = self.assignment[v]
            if not 0 <= w < self.codomain.space.size:
                raise IndexError(f"vertex {v} maps to {w}, out of range")
        for layer in self.domain.simplices:
            for s in layer:
                image = tuple(sorted({self.assignment[v] for v in s}))
                if not self.codomain.has(image):
                    raise ValueError(
                        f"vertex map is not simplicial: {s} maps onto {image}, "
                        "which is not a codomain simplex"
                    )


def simplicial_map(f, dom: SimplicialComplex, cod: SimplicialComplex) -> SimplicialVertexMap:
    return SimplicialVertexMap(dom, cod, tuple(f))


def are_contiguous(f: SimplicialVertexMap, g: SimplicialVertexMap) -> bool:
    """Do the two maps send every simplex into a common codomain simplex?"""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ValueError("contiguity needs maps with identical domain and codomain")
    for layer in f.domain.simplices:
        for s in layer:
            joint = tuple(sorted({f.assignment[v] for v in s} | {g.assignment[v] for v in s}))
            if not f.codomain.has(joint):
                return False
    return True


def chain_image(assignment, s: Simplex) -> tuple[int, Simplex | None]:
    """Oriented image of a simplex under a vertex map: (sign, simplex).

    Degenerate images return (0, None); otherwise the sign is the parity
    of the permutation sorting the image vertices.
    """
    img = [assignment[v] for v in s]
    if len(set(img)) != len(img):
        return 0, None
    inversions = sum(
        1 for a, b in itertools.combinations(img, 2) if a > b
    )
    return (-1) ** inversions, tuple(sorted(img))
