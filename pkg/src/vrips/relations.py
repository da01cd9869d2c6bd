"""Finite point sets, reflexive relations, and semi-uniform bases.

Points are indexed 0..n-1 and carry display labels. A Relation is a set
of ordered index pairs that always contains the diagonal; a
SemiUniformBase is a finite family of such relations that is directed
under intersection and closed under the inverse condition. Symmetric
distance tables (no triangle inequality assumed) and edge lists provide
the standard constructors, and the continuity checks reduce the usual
quantifier definitions to finite scans.

Scale comparisons are exact on the supplied numeric values: a strict
relation at scale q keeps pairs with d < q, a closed one keeps d <= q,
and ties are never fuzzed. Callers control the boundary by choosing the
mode and the numeric type (int, Fraction, float) of their distances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Pair = tuple[int, int]


@dataclass(frozen=True)
class FiniteSpace:
    """An indexed finite point set. Labels are display-only and distinct."""

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("a finite space needs at least one point")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("point labels must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    def points(self) -> range:
        return range(self.size)

    def check_points(self, indices) -> frozenset[int]:
        pts = frozenset(indices)
        for i in pts:
            if not isinstance(i, int) or not 0 <= i < self.size:
                raise IndexError(f"point index {i!r} out of range for {self.size} points")
        return pts


def space_of_size(n: int, prefix: str = "p") -> FiniteSpace:
    if n < 1:
        raise ValueError("space size must be at least 1")
    return FiniteSpace(tuple(f"{prefix}{i}" for i in range(n)))


def subspace(space: FiniteSpace, indices) -> FiniteSpace:
    """The space on a nonempty subset of points, in ascending index order."""
    pts = sorted(space.check_points(indices))
    if not pts:
        raise ValueError("subspace needs at least one point")
    return FiniteSpace(tuple(space.labels[i] for i in pts))


@dataclass(frozen=True)
class SemiPseudometric:
    """A symmetric distance table with zero diagonal.

    No triangle inequality is assumed or checked. Entries may be ints,
    Fractions, or floats; they are compared exactly as given.
    """

    space: FiniteSpace
    dist: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "dist", tuple(tuple(row) for row in self.dist))
        n = self.space.size
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise ValueError("distance table must be square and match the space")
        for i in range(n):
            if self.dist[i][i] != 0:
                raise ValueError(f"distance table has nonzero diagonal at {i}")
            for j in range(i + 1, n):
                if self.dist[i][j] != self.dist[j][i]:
                    raise ValueError(f"distance table is not symmetric at ({i},{j})")
                if self.dist[i][j] < 0:
                    raise ValueError(f"negative distance at ({i},{j})")

    def d(self, i: int, j: int):
        return self.dist[i][j]

    def values(self) -> tuple:
        """Sorted distinct off-diagonal distance values."""
        n = self.space.size
        vals = {self.dist[i][j] for i in range(n) for j in range(i + 1, n)}
        return tuple(sorted(vals))


def metric_from_points(labels, coords, dist_fn) -> SemiPseudometric:
    """Distance table from coordinates and a symmetric distance function."""
    space = FiniteSpace(tuple(labels))
    rows = []
    for i in range(space.size):
        rows.append(tuple(0 if i == j else dist_fn(coords[i], coords[j]) for j in range(space.size)))
    return SemiPseudometric(space, tuple(rows))


def shifted_metric(d: SemiPseudometric, q) -> SemiPseudometric:
    """Shift all distances down by q, clamped at zero.

    Strict relations of the shifted table at scale r coincide with strict
    relations of the original at scale q + r, which is what makes scale
    shifting compatible with the derived semi-uniform structures.
    """
    if q < 0:
        raise ValueError("shift must be nonnegative")
    rows = tuple(
        tuple((v - q) if v > q else 0 for v in row)
        for row in d.dist
    )
    return SemiPseudometric(d.space, rows)


def truncated_metric(d: SemiPseudometric, q) -> SemiPseudometric:
    """Collapse every distance at most q to zero, keeping the rest."""
    if q < 0:
        raise ValueError("truncation scale must be nonnegative")
    rows = tuple(tuple(0 if v <= q else v for v in row) for row in d.dist)
    return SemiPseudometric(d.space, rows)


def smallest_positive_gap(values):
    """Smallest positive difference between consecutive distinct values, or None."""
    vals = sorted(set(values))
    gaps = [b - a for a, b in zip(vals, vals[1:]) if b - a > 0]
    return min(gaps) if gaps else None


@dataclass(frozen=True)
class Relation:
    """Ordered index pairs over a space, always containing the diagonal."""

    space: FiniteSpace
    pairs: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        n = self.space.size
        for i, j in self.pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"pair ({i},{j}) out of range for {n} points")
        missing = [i for i in range(n) if (i, i) not in self.pairs]
        if missing:
            raise ValueError(f"relation is missing diagonal pairs at {missing}")

    def contains(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs

    def off_diagonal(self) -> frozenset[Pair]:
        return frozenset(p for p in self.pairs if p[0] != p[1])


def relation(space: FiniteSpace, pairs=()) -> Relation:
    """Build a relation from arbitrary pairs, adjoining the diagonal."""
    diag = {(i, i) for i in range(space.size)}
    return Relation(space, frozenset(pairs) | diag)


def diagonal(space: FiniteSpace) -> Relation:
    return relation(space)


def full_relation(space: FiniteSpace) -> Relation:
    n = space.size
    return Relation(space, frozenset(itertools.product(range(n), repeat=2)))


def relation_inverse(u: Relation) -> Relation:
    return Relation(u.space, frozenset((j, i) for i, j in u.pairs))


def relation_image(u: Relation, a) -> frozenset[int]:
    """All points reachable from the set a through the relation."""
    pts = u.space.check_points(a)
    return frozenset(j for i, j in u.pairs if i in pts)


def relation_intersect(u: Relation, v: Relation) -> Relation:
    if u.space != v.space:
        raise ValueError("relations live on different spaces")
    return Relation(u.space, u.pairs & v.pairs)


def symmetric_part(u: Relation) -> Relation:
    return Relation(u.space, frozenset(p for p in u.pairs if (p[1], p[0]) in u.pairs))


def is_symmetric(u: Relation) -> bool:
    return all((j, i) in u.pairs for i, j in u.pairs)


def metric_relation(d: SemiPseudometric, q, mode: str = "closed") -> Relation:
    """Scale-q relation of a distance table.

    mode "strict" keeps pairs with d < q, mode "closed" keeps d <= q.
    The diagonal is present either way.
    """
    if q < 0:
        raise ValueError("scale must be nonnegative")
    if mode not in ("strict", "closed"):
        raise ValueError(f"unknown mode {mode!r}: expected 'strict' or 'closed'")
    n = d.space.size
    if mode == "strict":
        pairs = {(i, j) for i in range(n) for j in range(n) if i != j and d.dist[i][j] < q}
    else:
        pairs = {(i, j) for i in range(n) for j in range(n) if i != j and d.dist[i][j] <= q}
    return relation(d.space, pairs)


def graph_relation(edges, space: FiniteSpace, directed: bool = False) -> Relation:
    """Edge relation of a graph on the space, diagonal adjoined."""
    pairs = set()
    n = space.size
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"edge ({i},{j}) out of range for {n} points")
        pairs.add((i, j))
        if not directed:
            pairs.add((j, i))
    return relation(space, pairs)


def product_relation(u: Relation, v: Relation) -> Relation:
    """Componentwise relation on the product space.

    The product point (x, y) gets index x * |Y| + y, so iterating the
    product space walks the second factor fastest.
    """
    ny = v.space.size
    labels = tuple(
        f"({lx},{ly})" for lx in u.space.labels for ly in v.space.labels
    )
    space = FiniteSpace(labels)
    pairs = frozenset(
        (x1 * ny + y1, x2 * ny + y2)
        for (x1, x2) in u.pairs
        for (y1, y2) in v.pairs
    )
    return Relation(space, pairs)


def relativize(u: Relation, a) -> Relation:
    """Restriction of the relation to a nonempty subset, reindexed.

    Point k of the result is the k-th smallest member of a; labels are
    carried over from the ambient space.
    """
    pts = sorted(u.space.check_points(a))
    if not pts:
        raise ValueError("cannot relativize to the empty set")
    index = {p: k for k, p in enumerate(pts)}
    sub = subspace(u.space, pts)
    pairs = frozenset((index[i], index[j]) for i, j in u.pairs if i in index and j in index)
    return Relation(sub, pairs)


@dataclass(frozen=True)
class SemiUniformBase:
    """A finite base for a semi-uniform structure.

    Every member contains the diagonal (enforced by Relation), every
    pairwise intersection of members contains some member, and every
    member's inverse contains some member. Use from_members to build
    one: it deduplicates and closes the family under intersection.
    """

    space: FiniteSpace
    members: tuple[Relation, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValueError("a base needs at least one member")
        for m in self.members:
            if m.space != self.space:
                raise ValueError("all members must live on the base's space")
        sets = [m.pairs for m in self.members]
        for a, b in itertools.combinations(sets, 2):
            cap = a & b
            if not any(s <= cap for s in sets):
                raise ValueError("base is not directed: an intersection contains no member")
        for s in sets:
            inv = frozenset((j, i) for i, j in s)
            if not any(t <= inv for t in sets):
                raise ValueError("base violates the inverse condition: a member's inverse contains no member")

    @classmethod
    def from_members(cls, members) -> "SemiUniformBase":
        members = list(members)
        if not members:
            raise ValueError("a base needs at least one member")
        space = members[0].space
        seen: dict[frozenset, Relation] = {}
        for m in members:
            seen.setdefault(m.pairs, m)
        family = list(seen.values())
        # Close under pairwise intersection until the family is directed.
        changed = True
        while changed:
            changed = False
            for u, v in itertools.combinations(list(family), 2):
                cap = u.pairs & v.pairs
                if not any(m.pairs <= cap for m in family):
                    family.append(Relation(space, cap))
                    seen[cap] = family[-1]
                    changed = True
        return cls(space, tuple(family))

    def minimum(self) -> Relation | None:
        """The inclusion-smallest member, if one exists."""
        for m in self.members:
            if all(m.pairs <= other.pairs for other in self.members):
                return m
        return None


def scale_base(d: SemiPseudometric, q, deltas) -> SemiUniformBase:
    """Base of strict relations at scales q + delta for each offset.

    The members are totally ordered by inclusion, so the family is
    already directed; the smallest offset gives the minimum member.
    """
    offs = sorted(set(deltas))
    if not offs:
        raise ValueError("at least one positive offset is required")
    if offs[0] <= 0:
        raise ValueError("offsets must be positive")
    return SemiUniformBase.from_members(
        [metric_relation(d, q + off, mode="strict") for off in offs]
    )


@dataclass(frozen=True)
class ContinuityVerdict:
    """Outcome of a uniform continuity scan.

    On failure, failing_target is a member of the codomain base that no
    domain member maps into, and violations lists one witness pair per
    domain member.
    """

    ok: bool
    failing_target: Relation | None = None
    violations: tuple[tuple[Relation, Pair], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _check_point_map(f, dom: FiniteSpace, cod: FiniteSpace) -> tuple[int, ...]:
    fm = tuple(f)
    if len(fm) != dom.size:
        raise ValueError(f"point map has {len(fm)} entries, expected {dom.size}")
    for v in fm:
        if not 0 <= v < cod.size:
            raise IndexError(f"point map value {v} out of range for {cod.size} points")
    return fm


def check_uniform_continuity(f, bx: SemiUniformBase, by: SemiUniformBase) -> ContinuityVerdict:
    """Scan whether f carries some member of bx into every member of by."""
    fm = _check_point_map(f, bx.space, by.space)
    for v in by.members:
        violations = []
        admissible = False
        for u in bx.members:
            bad = next(((i, j) for i, j in u.pairs if (fm[i], fm[j]) not in v.pairs), None)
            if bad is None:
                admissible = True
                break
            violations.append((u, bad))
        if not admissible:
            return ContinuityVerdict(False, v, tuple(violations))
    return ContinuityVerdict(True)


def check_pq_continuity(f, dx: SemiPseudometric, dy: SemiPseudometric, p, q) -> bool:
    """Finite-space scale continuity: every pair within p lands within q.

    On finite spaces the epsilon-delta definition collapses to this scan,
    because below the smallest positive gap of the distance values the
    strict relations at p + delta and q + epsilon stabilize to the closed
    relations at p and q.
    """
    if p < 0 or q < 0:
        raise ValueError("scales must be nonnegative")
    fm = _check_point_map(f, dx.space, dy.space)
    n = dx.space.size
    for i in range(n):
        for j in range(n):
            if dx.dist[i][j] <= p and dy.dist[fm[i]][fm[j]] > q:
                return False
    return True
