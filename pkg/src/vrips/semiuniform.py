"""Limit homology over a base and mechanical checks of its axioms.

A finite base directed under intersection always has towers of flag
complexes indexed by its members; when an inclusion-smallest member
exists, the limit of the tower is just the homology at that member, and
everything here evaluates there. The verify_* functions each check one
axiom-shaped statement on a concrete instance and return a verdict that
carries a witness when the check fails, so a red result is always
accompanied by something a human can look at.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closure import Cover
from .complexes import (
    ComplexPair,
    cover_complex,
    full_subcomplex,
    nerve_of_cover,
    pair_complex,
    simplicial_map,
    vr_complex,
)
from .homology import (
    INTEGERS,
    Coefficients,
    HomologyResult,
    _chain_map_matrix,
    _chains_of_complex,
    _chains_of_pair,
    _field_of,
    _mat_rank_field,
    _Reducer,
    _reliable_top,
    _require_field,
    cohomology,
    homology,
    induced_map,
)
from .relations import (
    FiniteSpace,
    Relation,
    SemiPseudometric,
    SemiUniformBase,
    check_uniform_continuity,
    metric_relation,
    product_relation,
    relation_image,
    relativize,
    symmetric_part,
)


class NoMinimumError(ValueError):
    """Raised when a base has no inclusion-smallest member.

    Bases built through the public constructors are closed under
    intersection and therefore always have one; this guards hand-built
    instances.
    """


@dataclass(frozen=True)
class AxiomVerdict:
    """One axiom checked on one instance. Failing verdicts carry a witness."""

    axiom: str
    instance: str
    passed: bool
    witness: str = ""

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("a failing verdict must carry a witness")

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class MemberAgreement:
    """Whether one tower stage already agrees with the limit.

    Disagreement is not an error: coarse members may well have different
    homology. betti lists the member's ranks over the compared range.
    """

    member_index: int
    agrees: bool
    betti: tuple[int, ...]


@dataclass(frozen=True)
class LimitReport:
    """Limit homology of a base plus diagnostics about its member tower."""

    member_count: int
    inclusions: tuple[tuple[int, int], ...]
    minimum_index: int
    minimum: Relation
    result: HomologyResult
    cohomology_result: HomologyResult | None
    stabilization: tuple[MemberAgreement, ...]


def _minimum_or_raise(base: SemiUniformBase) -> tuple[int, Relation]:
    m = base.minimum()
    if m is None:
        raise NoMinimumError("the base has no inclusion-smallest member")
    return base.members.index(m), m


def _object_at(rel: Relation, subset, max_dim: int):
    if subset is None:
        return vr_complex(rel, max_dim)
    return pair_complex(rel, subset, max_dim)


def _inclusion_agrees(min_rel: Relation, u_rel: Relation, subset, coeffs: Coefficients,
                      max_dim: int) -> tuple[bool, tuple[int, ...]]:
    """Compare the limit stage against one member stage of the tower.

    Over a field this checks that the inclusion-induced maps are
    isomorphisms on the reliably computed range; over the integers it
    compares betti numbers and torsion on that range.
    """
    dom_obj = _object_at(min_rel, subset, max_dim)
    cod_obj = _object_at(u_rel, subset, max_dim)
    top = min(_reliable_top(dom_obj), _reliable_top(cod_obj))
    if top < 0:
        return True, ()
    field = _field_of(coeffs)
    if field is None:
        a = homology(dom_obj, coeffs)
        b = homology(cod_obj, coeffs)
        agrees = (a.betti[: top + 1] == b.betti[: top + 1]
                  and a.torsion[: top + 1] == b.torsion[: top + 1])
        return agrees, b.betti[: top + 1]

    if isinstance(dom_obj, ComplexPair):
        dom = _Reducer(_chains_of_pair(dom_obj), field)
        cod = _Reducer(_chains_of_pair(cod_obj), field)
        cod_sub = cod_obj.sub
        image_fn = lambda k, s: (0, None) if cod_sub.has(s) else (1, s)
    else:
        dom = _Reducer(_chains_of_complex(dom_obj), field)
        cod = _Reducer(_chains_of_complex(cod_obj), field)
        image_fn = lambda k, s: (1, s)
    betti = []
    agrees = True
    for k in range(top + 1):
        mat = _chain_map_matrix(dom, cod, image_fn, k)
        h_dom, h_cod = dom.basis(k).h, cod.basis(k).h
        betti.append(h_cod)
        if h_dom != h_cod or _mat_rank_field(mat, field) != h_dom:
            agrees = False
    return agrees, tuple(betti)


def limit_homology(base: SemiUniformBase, subset=None, coeffs: Coefficients = INTEGERS,
                   max_dim: int = 2, reduced: bool = False) -> LimitReport:
    """Homology of the tower limit, evaluated at the base's smallest member.

    The flag complex tower over a directed base with a smallest member
    has its limit at that member, so the result is the homology of its
    flag complex (or of the pair against the optional vertex subset).
    Cohomology is included for field coefficients, where the direct
    limit sits at the same member. The stabilization entries report
    which coarser members already agree with the limit.
    """
    idx, m = _minimum_or_raise(base)
    obj = _object_at(m, subset, max_dim)
    result = homology(obj, coeffs, reduced=reduced)
    coh = cohomology(obj, coeffs) if coeffs.is_field else None

    inclusions = tuple(
        (i, j)
        for i, u in enumerate(base.members)
        for j, v in enumerate(base.members)
        if i != j and u.pairs <= v.pairs
    )
    agreements = []
    for i, u in enumerate(base.members):
        if i == idx:
            continue
        agrees, betti = _inclusion_agrees(m, u, subset, coeffs, max_dim)
        agreements.append(MemberAgreement(i, agrees, betti))

    return LimitReport(
        member_count=len(base.members),
        inclusions=inclusions,
        minimum_index=idx,
        minimum=m,
        result=result,
        cohomology_result=coh,
        stabilization=tuple(agreements),
    )


# --------------------------------------------------------------------------
# dimension


def verify_dimension(coeffs: Coefficients = INTEGERS, max_dim: int = 2) -> AxiomVerdict:
    """One-point space: a single rank in degree zero and nothing else."""
    space = FiniteSpace(("pt",))
    base = SemiUniformBase.from_members([Relation(space, frozenset({(0, 0)}))])
    report = limit_homology(base, coeffs=coeffs, max_dim=max_dim)
    want = (1,) + (0,) * max_dim
    problems = []
    if report.result.betti != want:
        problems.append(f"betti {report.result.betti} != {want}")
    if any(report.result.torsion):
        problems.append(f"unexpected torsion {report.result.torsion}")
    if coeffs.is_field and report.cohomology_result.betti != want:
        problems.append(f"cohomology betti {report.cohomology_result.betti} != {want}")
    reduced = limit_homology(base, coeffs=coeffs, max_dim=max_dim, reduced=True)
    if any(reduced.result.betti):
        problems.append(f"reduced betti {reduced.result.betti} is not zero")
    return AxiomVerdict(
        "dimension",
        f"one point over {coeffs.describe()}",
        not problems,
        "; ".join(problems),
    )


# --------------------------------------------------------------------------
# excision


def _excision_witness_index(base: SemiUniformBase, a: frozenset, b: frozenset) -> int | None:
    """Index of a member W with U[B] inside A for every member U within W."""
    for w_idx, w in enumerate(base.members):
        ok = True
        for u in base.members:
            if u.pairs <= w.pairs and not relation_image(u, b) <= a:
                ok = False
                break
        if ok:
            return w_idx
    return None


def check_excision_hypothesis(base: SemiUniformBase, a, bset) -> AxiomVerdict:
    """Is there a member under which B never reaches outside A?"""
    a = base.space.check_points(a)
    b = base.space.check_points(bset)
    if not b <= a:
        raise ValueError("the excised set must sit inside the subset")
    idx = _excision_witness_index(base, a, b)
    if idx is not None:
        return AxiomVerdict(
            "excision-hypothesis",
            f"A={sorted(a)}, B={sorted(b)}",
            True,
            "",
        )
    _, m = _minimum_or_raise(base)
    leak = sorted(relation_image(m, b) - a)
    return AxiomVerdict(
        "excision-hypothesis",
        f"A={sorted(a)}, B={sorted(b)}",
        False,
        f"even the smallest member reaches {leak} from B outside A",
    )


def verify_excision(base: SemiUniformBase, a, bset, coeffs: Coefficients = INTEGERS,
                    max_dim: int = 2) -> AxiomVerdict:
    """Compare relative homology before and after cutting B out.

    For every member U under the hypothesis witness W, the symmetric
    part S of U gives a pair (X, A) whose homology must match the pair
    (X - B, A - B) built from S restricted to X - B. The comparison
    covers betti numbers and torsion on the reliably computed range.
    Raises when the hypothesis fails; check it first to get a verdict.
    """
    a = base.space.check_points(a)
    b = base.space.check_points(bset)
    if not b <= a:
        raise ValueError("the excised set must sit inside the subset")
    if not a:
        raise ValueError("the subset of the pair must be nonempty")
    rest = sorted(set(base.space.points()) - b)
    if not rest:
        raise ValueError("cutting B out must leave at least one point")
    w_idx = _excision_witness_index(base, a, b)
    if w_idx is None:
        raise ValueError("excision hypothesis fails: no member keeps U[B] inside A")
    w = base.members[w_idx]
    instance = f"A={sorted(a)}, B={sorted(b)}, witness member {w_idx}"

    index_in_rest = {p: k for k, p in enumerate(rest)}
    a_small = sorted(index_in_rest[p] for p in a - b)
    problems = []
    for u_idx, u in enumerate(base.members):
        if not u.pairs <= w.pairs:
            continue
        s = symmetric_part(u)
        big = pair_complex(s, a, max_dim)
        s_small = relativize(s, rest)
        if a_small:
            small = pair_complex(s_small, a_small, max_dim)
        else:
            small = vr_complex(s_small, max_dim)
        top = min(_reliable_top(big), _reliable_top(small))
        hb = homology(big, coeffs)
        hs = homology(small, coeffs)
        if (hb.betti[: top + 1] != hs.betti[: top + 1]
                or hb.torsion[: top + 1] != hs.torsion[: top + 1]):
            problems.append(
                f"member {u_idx}: pair gives betti {hb.betti[: top + 1]} "
                f"torsion {hb.torsion[: top + 1]}, cut space gives {hs.betti[: top + 1]} "
                f"torsion {hs.torsion[: top + 1]}"
            )
    return AxiomVerdict("excision", instance, not problems, "; ".join(problems))


# --------------------------------------------------------------------------
# homotopy via a discretized cylinder


def interval_space(n: int) -> FiniteSpace:
    if n < 2:
        raise ValueError("a discretized interval needs at least two points")
    return FiniteSpace(tuple(f"t{i}" for i in range(n)))


def interval_metric(n: int) -> SemiPseudometric:
    """n evenly spaced points on the unit interval, distances exact."""
    space = interval_space(n)
    rows = tuple(
        tuple(Fraction(abs(i - j), n - 1) for j in range(n))
        for i in range(n)
    )
    return SemiPseudometric(space, rows)


def interval_relation(n: int, r) -> Relation:
    """Strict scale-r relation of the n-point interval.

    Consecutive points are related exactly when r exceeds the spacing
    1/(n-1); below that the complex falls apart into components.
    """
    return metric_relation(interval_metric(n), r, mode="strict")


def check_interval_acyclic(n: int, r, max_dim: int = 2) -> AxiomVerdict:
    """Reduced integer homology of the discretized interval must vanish."""
    spacing = Fraction(1, n - 1) if n >= 2 else None
    rel = interval_relation(n, r)
    k = vr_complex(rel, max_dim)
    res = homology(k, INTEGERS, reduced=True)
    top = _reliable_top(k)
    ok = not any(res.betti[: top + 1]) and not any(res.torsion[: top + 1])
    witness = ""
    if not ok:
        hyp = "holds" if r > spacing else "FAILS"
        witness = (f"reduced betti {res.betti[: top + 1]}, torsion {res.torsion[: top + 1]}; "
                   f"spacing hypothesis r > {spacing} {hyp}")
    return AxiomVerdict("interval-acyclic", f"n={n}, r={r}", ok, witness)


def _cylinder_vertices(x: int, n: int) -> list[int]:
    return [x * n + t for t in range(n)]


def verify_homotopy_cylinder(u: Relation, n: int, r, coeffs: Coefficients,
                             max_dim: int = 2) -> AxiomVerdict:
    """Both ends of the cylinder over u must induce the same homology maps.

    The cylinder is the product of u with the strict scale-r relation on
    n interval points; the two end inclusions are compared as induced
    maps through dimension max_dim - 1. As a side condition, the
    cylinder over each maximal simplex must have vanishing reduced
    integer homology, which is what makes the end maps interchangeable.
    """
    _require_field(coeffs, "cylinder comparison")
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1 to compare any dimension")
    ivl = interval_relation(n, r)
    cyl = product_relation(u, ivl)
    kx = vr_complex(u, max_dim)
    kc = vr_complex(cyl, max_dim)
    size = u.space.size
    g0 = simplicial_map([x * n for x in range(size)], kx, kc)
    g1 = simplicial_map([x * n + (n - 1) for x in range(size)], kx, kc)
    m0 = induced_map(g0, coeffs, top_dim=max_dim - 1)
    m1 = induced_map(g1, coeffs, top_dim=max_dim - 1)

    problems = []
    if m0 != m1:
        bad = [k for k in range(max_dim) if m0.matrices[k] != m1.matrices[k]]
        problems.append(f"end maps differ in dimensions {bad}")
    for s in kx.maximal_simplices():
        block = sorted(v for x in s for v in _cylinder_vertices(x, n))
        piece = full_subcomplex(kc, block)
        res = homology(piece, INTEGERS, reduced=True)
        top = _reliable_top(piece)
        if any(res.betti[: top + 1]) or any(res.torsion[: top + 1]):
            problems.append(
                f"cylinder over simplex {s} has reduced betti {res.betti[: top + 1]}"
            )
            break
    return AxiomVerdict(
        "homotopy-cylinder",
        f"|X|={size}, n={n}, r={r}, over {coeffs.describe()}",
        not problems,
        "; ".join(problems),
    )


# --------------------------------------------------------------------------
# cover duality and functoriality


def verify_dowker(cover: Cover, coeffs: Coefficients = INTEGERS, max_dim: int = 2) -> AxiomVerdict:
    """Witness complex and nerve of one cover must agree in homology.

    Both complexes are enumerated to max_dim and compared strictly below
    it, since the top dimension is where truncation bites and the two
    complexes truncate differently.
    """
    kw = cover_complex(cover, max_dim)
    kn = nerve_of_cover(cover, max_dim)
    hw = homology(kw, coeffs)
    hn = homology(kn, coeffs)
    cut = max_dim
    ok = (hw.betti[:cut] == hn.betti[:cut] and hw.torsion[:cut] == hn.torsion[:cut])
    witness = ""
    if not ok:
        witness = (f"witness complex betti {hw.betti[:cut]} torsion {hw.torsion[:cut]}, "
                   f"nerve betti {hn.betti[:cut]} torsion {hn.torsion[:cut]}")
    return AxiomVerdict(
        "dowker-duality",
        f"{len(cover.sets)} sets over {coeffs.describe()}",
        ok,
        witness,
    )


def verify_functoriality(f, g, bx: SemiUniformBase, by: SemiUniformBase,
                         bz: SemiUniformBase, coeffs: Coefficients,
                         max_dim: int = 2) -> AxiomVerdict:
    """Composition and identity behave on induced maps.

    f and g are point maps (X to Y, Y to Z) that must be uniformly
    continuous against the given bases; continuity failures raise. The
    check compares the induced map of g after f with the composite of
    the individual induced maps, and checks that the identity on X
    induces identity matrices, all through dimension max_dim - 1.
    """
    _require_field(coeffs, "functoriality comparison")
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1 to compare any dimension")
    cf = check_uniform_continuity(f, bx, by)
    if not cf:
        raise ValueError("f is not uniformly continuous against the given bases")
    cg = check_uniform_continuity(g, by, bz)
    if not cg:
        raise ValueError("g is not uniformly continuous against the given bases")

    _, mx = _minimum_or_raise(bx)
    _, my = _minimum_or_raise(by)
    _, mz = _minimum_or_raise(bz)
    kx = vr_complex(mx, max_dim)
    ky = vr_complex(my, max_dim)
    kz = vr_complex(mz, max_dim)

    fm = tuple(f)
    gm = tuple(g)
    fmap = induced_map(simplicial_map(fm, kx, ky), coeffs, top_dim=max_dim - 1)
    gmap = induced_map(simplicial_map(gm, ky, kz), coeffs, top_dim=max_dim - 1)
    comp = induced_map(
        simplicial_map(tuple(gm[fm[x]] for x in range(bx.space.size)), kx, kz),
        coeffs, top_dim=max_dim - 1,
    )
    ident = induced_map(
        simplicial_map(tuple(range(bx.space.size)), kx, kx),
        coeffs, top_dim=max_dim - 1,
    )

    problems = []
    chained = gmap.compose(fmap)
    if comp != chained:
        bad = [k for k in range(max_dim) if comp.matrices[k] != chained.matrices[k]]
        problems.append(f"composite map differs from chained maps in dimensions {bad}")
    if not ident.is_identity():
        problems.append("identity point map does not induce identity matrices")
    return AxiomVerdict(
        "functoriality",
        f"|X|={bx.space.size}, |Y|={by.space.size}, |Z|={bz.space.size} over {coeffs.describe()}",
        not problems,
        "; ".join(problems),
    )
