"""Relations, distance tables, bases, and continuity scans."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import vrips as v
from vrips.relations import (
    diagonal,
    full_relation,
    is_symmetric,
    relation,
    shifted_metric,
    smallest_positive_gap,
    space_of_size,
    truncated_metric,
)
from conftest import metrics, symmetric_relations


def test_space_rejects_empty_and_duplicate_labels():
    with pytest.raises(ValueError):
        v.FiniteSpace(())
    with pytest.raises(ValueError):
        v.FiniteSpace(("a", "a"))


def test_space_check_points_range():
    space = space_of_size(3)
    assert space.check_points([0, 2]) == frozenset({0, 2})
    with pytest.raises(IndexError):
        space.check_points([3])
    with pytest.raises(IndexError):
        space.check_points([-1])


def test_metric_validation():
    space = space_of_size(2)
    with pytest.raises(ValueError):
        v.SemiPseudometric(space, ((0, 1),))  # not square
    with pytest.raises(ValueError):
        v.SemiPseudometric(space, ((0, 1), (2, 0)))  # asymmetric
    with pytest.raises(ValueError):
        v.SemiPseudometric(space, ((1, 1), (1, 0)))  # diagonal
    with pytest.raises(ValueError):
        v.SemiPseudometric(space, ((0, -1), (-1, 0)))  # negative


def test_no_triangle_inequality_required():
    space = space_of_size(3)
    d = v.SemiPseudometric(space, (
        (0, 1, 100),
        (1, 0, 1),
        (100, 1, 0),
    ))
    assert d.d(0, 2) == 100


def test_relation_always_contains_diagonal():
    space = space_of_size(3)
    r = relation(space, [(0, 1)])
    assert r.contains(2, 2)
    with pytest.raises(ValueError):
        v.Relation(space, frozenset({(0, 1)}))  # diagonal missing
    with pytest.raises(IndexError):
        relation(space, [(0, 5)])


def test_metric_relation_tie_goes_to_closed(square_metric):
    q = Fraction(1)
    closed = v.metric_relation(square_metric, q, mode="closed")
    strict = v.metric_relation(square_metric, q, mode="strict")
    assert closed.contains(0, 1)       # distance exactly 1
    assert not strict.contains(0, 1)
    assert strict.pairs == diagonal(square_metric.space).pairs
    with pytest.raises(ValueError):
        v.metric_relation(square_metric, q, mode="open")
    with pytest.raises(ValueError):
        v.metric_relation(square_metric, -1)


@given(metrics(max_points=5), st.sampled_from([Fraction(k, 4) for k in range(9)]),
       st.sampled_from([Fraction(k, 4) for k in range(1, 9)]))
@settings(max_examples=50, deadline=None)
def test_shifted_metric_matches_scale_shift(d, q, r):
    shifted = shifted_metric(d, q)
    assert (v.metric_relation(shifted, r, mode="strict").pairs
            == v.metric_relation(d, q + r, mode="strict").pairs)


def test_truncated_metric_collapses_small_distances(square_metric):
    t = truncated_metric(square_metric, 1)
    assert t.d(0, 1) == 0
    assert t.d(0, 2) == square_metric.d(0, 2)


def test_smallest_positive_gap():
    assert smallest_positive_gap([1, 3, 7]) == 2
    assert smallest_positive_gap([5, 5]) is None
    assert smallest_positive_gap([Fraction(1, 2), Fraction(2, 3)]) == Fraction(1, 6)


def test_graph_relation_directions():
    space = space_of_size(3)
    und = v.graph_relation([(0, 1)], space)
    assert und.contains(0, 1) and und.contains(1, 0)
    dir_ = v.graph_relation([(0, 1)], space, directed=True)
    assert dir_.contains(0, 1) and not dir_.contains(1, 0)


def test_product_relation_indexing():
    a = relation(space_of_size(2), [(0, 1), (1, 0)])
    b = relation(space_of_size(3), [(0, 1), (1, 0)])
    prod = v.product_relation(a, b)
    assert prod.space.size == 6
    # (x, y) lives at index x * 3 + y
    assert prod.contains(0 * 3 + 0, 1 * 3 + 1)
    assert not prod.contains(0 * 3 + 0, 1 * 3 + 2)  # 0 -> 2 absent in b


def test_relativize_reindexes_and_keeps_labels():
    space = v.FiniteSpace(("a", "b", "c", "d"))
    r = v.graph_relation([(0, 2), (2, 3)], space)
    sub = v.relativize(r, [0, 2, 3])
    assert sub.space.labels == ("a", "c", "d")
    assert sub.contains(0, 1) and sub.contains(1, 2)
    assert not sub.contains(0, 2)
    with pytest.raises(ValueError):
        v.relativize(r, [])


def test_inverse_intersect_symmetric_part():
    space = space_of_size(3)
    r = relation(space, [(0, 1), (1, 2), (2, 1)])
    inv = v.relation_inverse(r)
    assert inv.contains(1, 0) and not inv.contains(0, 1)
    sym = v.symmetric_part(r)
    assert sym.contains(1, 2) and sym.contains(2, 1) and not sym.contains(0, 1)
    assert not is_symmetric(r) and is_symmetric(sym)
    meet = v.relation_intersect(r, inv)
    assert meet.pairs == sym.pairs  # here the two coincide
    with pytest.raises(ValueError):
        v.relation_intersect(r, relation(space_of_size(2)))


def test_relation_image():
    space = space_of_size(4)
    r = relation(space, [(0, 1), (1, 2)])
    assert v.relation_image(r, [0]) == frozenset({0, 1})
    assert v.relation_image(r, [0, 1]) == frozenset({0, 1, 2})


def test_base_rejects_undirected_family():
    space = space_of_size(2)
    u1 = relation(space, [(0, 1)])
    u2 = relation(space, [(1, 0)])
    with pytest.raises(ValueError):
        v.SemiUniformBase(space, (u1, u2))


def test_base_rejects_inverse_violation():
    space = space_of_size(2)
    u = relation(space, [(0, 1)])
    with pytest.raises(ValueError):
        v.SemiUniformBase(space, (u,))


def test_from_members_closes_under_intersection():
    space = space_of_size(3)
    u1 = v.graph_relation([(0, 1), (1, 2)], space)
    u2 = v.graph_relation([(0, 1), (0, 2)], space)
    base = v.SemiUniformBase.from_members([u1, u2])
    m = base.minimum()
    assert m is not None
    assert m.pairs == (u1.pairs & u2.pairs)
    assert len(base.members) == 3


@given(st.lists(symmetric_relations(min_points=3, max_points=3), min_size=1, max_size=4))
@settings(max_examples=50, deadline=None)
def test_from_members_always_has_minimum(rels):
    base = v.SemiUniformBase.from_members(rels)
    m = base.minimum()
    assert m is not None
    meet = rels[0].pairs
    for r in rels:
        meet = meet & r.pairs
    assert m.pairs == meet


def test_scale_base_total_order(square_metric):
    base = v.scale_base(square_metric, Fraction(1), [Fraction(1, 10), Fraction(1, 2), Fraction(2)])
    ms = sorted(base.members, key=lambda r: len(r.pairs))
    for small, big in zip(ms, ms[1:]):
        assert small.pairs <= big.pairs
    assert base.minimum() is not None
    with pytest.raises(ValueError):
        v.scale_base(square_metric, 1, [])
    with pytest.raises(ValueError):
        v.scale_base(square_metric, 1, [0])


def test_uniform_continuity_identity_and_collapse(square_metric):
    base = v.scale_base(square_metric, Fraction(1), [Fraction(1, 10)])
    assert v.check_uniform_continuity(range(4), base, base)
    # Collapsing everything to one point is continuous into the full relation.
    full = v.SemiUniformBase.from_members([full_relation(square_metric.space)])
    assert v.check_uniform_continuity([0, 0, 0, 0], base, full)


def test_uniform_continuity_failure_has_witness(square_metric):
    tight = v.scale_base(square_metric, Fraction(1, 10), [Fraction(1, 100)])
    loose = v.scale_base(square_metric, Fraction(3, 2), [Fraction(1)])
    # The identity from a coarse structure into a fine one fails.
    verdict = v.check_uniform_continuity(range(4), loose, tight)
    assert not verdict
    assert verdict.failing_target is not None
    assert verdict.violations
    u, (i, j) = verdict.violations[0]
    assert u.contains(i, j)
    assert not verdict.failing_target.contains(i, j)


def test_pq_continuity_path_example(path4):
    # Path metric on a-b-c-d: hop counts.
    space = path4.space
    d = v.SemiPseudometric(space, tuple(
        tuple(abs(i - j) for j in range(4)) for i in range(4)
    ))
    squash = [0, 0, 1, 1]
    d2 = v.SemiPseudometric(space_of_size(2), ((0, 1), (1, 0)))
    assert v.check_pq_continuity(squash, d, d2, 1, 1)
    # Mapping endpoints together while keeping p wide is not (1, 0)-continuous.
    assert not v.check_pq_continuity(squash, d, d2, 1, 0)
    with pytest.raises(ValueError):
        v.check_pq_continuity(squash, d, d2, -1, 0)


def _closing_offset(dist, scale):
    """Offset below which the strict relation at scale+offset equals the
    closed relation at scale: half the smallest gap with the scale adjoined."""
    gap = smallest_positive_gap(tuple(dist.values()) + (scale,))
    return gap / 2 if gap is not None else Fraction(1)


@given(metrics(min_points=2, max_points=4), metrics(min_points=2, max_points=4),
       st.data())
@settings(max_examples=60, deadline=None)
def test_pq_continuity_matches_uniform_continuity(dx, dy, data):
    p = data.draw(st.sampled_from([Fraction(k, 4) for k in range(9)]), label="p")
    q = data.draw(st.sampled_from([Fraction(k, 4) for k in range(9)]), label="q")
    f = tuple(
        data.draw(st.integers(0, dy.space.size - 1), label=f"f({i})")
        for i in range(dx.space.size)
    )
    bx = v.scale_base(dx, p, [_closing_offset(dx, p)])
    by = v.scale_base(dy, q, [_closing_offset(dy, q)])
    assert v.check_pq_continuity(f, dx, dy, p, q) == bool(
        v.check_uniform_continuity(f, bx, by)
    )
