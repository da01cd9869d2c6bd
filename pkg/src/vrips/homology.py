"""Exact simplicial homology, cohomology, and induced maps.

Boundary matrices are integer matrices over the canonical bases given by
the lexicographic simplex order. Integer homology goes through a Smith
normal form with full unimodular transform tracking in arbitrary
precision; field homology (rationals or a prime field) goes through
exact Gaussian elimination. Nothing here ever touches floating point.

Induced maps are computed over a field only: homology bases are chosen
deterministically by extending a boundary-space basis to a cycle-space
basis, so maps between the same complexes are directly comparable as
matrices. The long exact sequence check wires the inclusion, quotient,
and connecting maps together and verifies exactness by rank counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import ComplexPair, SimplicialComplex, SimplicialVertexMap, chain_image

Simplex = tuple[int, ...]


# --------------------------------------------------------------------------
# coefficients


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Coefficients:
    """Coefficient choice: integers, rationals, or a prime field."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Fp"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"{self.p!r} is not a prime modulus")
        elif self.p is not None:
            raise ValueError("a modulus only makes sense for prime fields")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def describe(self) -> str:
        return {"Z": "Z", "Q": "Q"}.get(self.kind, f"F{self.p}")


INTEGERS = Coefficients("Z")
RATIONALS = Coefficients("Q")


def prime_field(p: int) -> Coefficients:
    return Coefficients("Fp", p)


class _QField:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a


class _FpField:
    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)


def _field_of(coeffs: Coefficients):
    if coeffs.kind == "Q":
        return _QField()
    if coeffs.kind == "Fp":
        return _FpField(coeffs.p)
    return None


def _require_field(coeffs: Coefficients, what: str):
    field = _field_of(coeffs)
    if field is None:
        raise ValueError(f"{what} needs field coefficients (rationals or a prime field)")
    return field


# --------------------------------------------------------------------------
# integer matrices and Smith normal form


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise ValueError("an empty matrix needs an explicit column count")
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def mul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append(tuple(
                sum(row[k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ))
        return IntegerMatrix(self.rows, other.cols, tuple(out))


@dataclass(frozen=True)
class SNFResult:
    """Diagonal plus the unimodular transforms that produced it.

    left * original * right equals the diagonal matrix exactly, each
    diagonal entry is nonnegative, and each divides the next (trailing
    zeros included, since everything divides zero).
    """

    d: tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix


def _as_integer_matrix(m) -> IntegerMatrix:
    if isinstance(m, IntegerMatrix):
        return m
    return IntegerMatrix.from_rows(m)


def _snf_core(a: list[list[int]], rows: int, cols: int, track: bool):
    left = [[int(i == j) for j in range(rows)] for i in range(rows)] if track else None
    right = [[int(i == j) for j in range(cols)] for i in range(cols)] if track else None

    def swap_rows(x, y):
        a[x], a[y] = a[y], a[x]
        if track:
            left[x], left[y] = left[y], left[x]

    def swap_cols(x, y):
        for row in a:
            row[x], row[y] = row[y], row[x]
        if track:
            for row in right:
                row[x], row[y] = row[y], row[x]

    def add_row(dst, src, q):
        if q:
            ad, asr = a[dst], a[src]
            for k in range(cols):
                ad[k] += q * asr[k]
            if track:
                ld, ls = left[dst], left[src]
                for k in range(rows):
                    ld[k] += q * ls[k]

    def add_col(dst, src, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            if track:
                for row in right:
                    row[dst] += q * row[src]

    def negate_row(x):
        a[x] = [-v for v in a[x]]
        if track:
            left[x] = [-v for v in left[x]]

    size = min(rows, cols)
    t = 0
    while t < size:
        # Pivot on the smallest magnitude so remainders shrink quickly.
        pivot = None
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        if pivot != (t, t):
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            restart = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        # Leftover remainder is strictly smaller: promote it.
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            p = a[t][t]
            offender = None
            for i in range(t + 1, rows):
                row = a[i]
                for j in range(t + 1, cols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # Fold the offending row in; column t stays clear because the
            # offender's entry there is already zero.
            add_row(t, offender, 1)
        t += 1

    d = [a[i][i] for i in range(size)]
    return d, left, right


def smith_normal_form(m) -> SNFResult:
    """Smith normal form over the integers with transform tracking.

    Works in arbitrary precision. The transforms are built from
    elementary operations only, so their determinants are +1 or -1.
    """
    mat = _as_integer_matrix(m)
    a = [list(row) for row in mat.entries]
    d, left, right = _snf_core(a, mat.rows, mat.cols, track=True)
    return SNFResult(
        tuple(d),
        IntegerMatrix.from_rows(left, cols=mat.rows),
        IntegerMatrix.from_rows(right, cols=mat.cols),
    )


def _snf_diagonal(mat: IntegerMatrix) -> list[int]:
    a = [list(row) for row in mat.entries]
    d, _, _ = _snf_core(a, mat.rows, mat.cols, track=False)
    return d


# --------------------------------------------------------------------------
# field linear algebra (dense, exact)


def _f_rref(rows, field, width):
    """In-place style reduced row echelon form; returns (rows, pivot_cols)."""
    rows = [list(r) for r in rows]
    pivots = []
    pr = 0
    for col in range(width):
        hit = next((i for i in range(pr, len(rows)) if rows[i][col] != field.zero), None)
        if hit is None:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        inv = field.inv(rows[pr][col])
        rows[pr] = [field.mul(inv, x) for x in rows[pr]]
        lead = rows[pr]
        for i in range(len(rows)):
            if i != pr and rows[i][col] != field.zero:
                f = rows[i][col]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], lead)]
        pivots.append(col)
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def _f_rank(rows, field, width) -> int:
    return len(_f_rref(rows, field, width)[1])


def _f_kernel_basis(rows, field, n_rows, n_cols):
    """Basis of the null space of an n_rows x n_cols matrix, as vectors."""
    red, pivots = _f_rref(rows, field, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [field.zero] * n_cols
        vec[free] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(red[r][free])
        basis.append(vec)
    return basis


def _f_solver(columns, field, height):
    """Prepare repeated solving of [columns] x = v for vectors of given height.

    Eliminates once on the matrix augmented with an identity, then each
    solve is a matrix-vector product plus a consistency scan. Returns
    (solve, rank) where solve gives None on inconsistent input.
    """
    m = len(columns)
    aug = []
    for i in range(height):
        row = [columns[j][i] for j in range(m)]
        row.extend(field.one if k == i else field.zero for k in range(height))
        aug.append(row)
    red, pivots = _f_rref(aug, field, m)
    rank = len(pivots)

    def solve(v):
        x = [field.zero] * m
        for r in range(len(red)):
            acc = field.zero
            row = red[r]
            for k in range(height):
                if v[k] != field.zero and row[m + k] != field.zero:
                    acc = field.add(acc, field.mul(row[m + k], v[k]))
            if r < rank:
                x[pivots[r]] = acc
            elif acc != field.zero:
                return None
        return x

    return solve, rank


def _f_dot(xs, ys, field):
    acc = field.zero
    for x, y in zip(xs, ys):
        if x != field.zero and y != field.zero:
            acc = field.add(acc, field.mul(x, y))
    return acc


# --------------------------------------------------------------------------
# chain complexes


@dataclass(frozen=True)
class _Chains:
    """Bases and integer boundary matrices of a chain complex.

    bases[k] lists the dimension-k basis simplices (for a pair, the
    total simplices outside the subcomplex). boundaries[k] maps degree k
    to degree k-1; index 0 holds a shape-correct zero map.
    """

    bases: tuple[tuple[Simplex, ...], ...]
    boundaries: tuple[IntegerMatrix, ...]
    relative_nonempty: bool = False

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def n(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k <= self.top else 0

    def boundary(self, k: int) -> IntegerMatrix:
        if 1 <= k <= self.top:
            return self.boundaries[k]
        return IntegerMatrix(self.n(k - 1), self.n(k), tuple(tuple(0 for _ in range(self.n(k))) for _ in range(self.n(k - 1))))


def _boundary_matrix(lower: tuple[Simplex, ...], upper: tuple[Simplex, ...], keep) -> IntegerMatrix:
    index = {s: i for i, s in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, s in enumerate(upper):
        for drop in range(len(s)):
            face = s[:drop] + s[drop + 1:]
            if keep(face):
                rows[index[face]][j] = -1 if drop % 2 else 1
    return IntegerMatrix.from_rows(rows, cols=len(upper))


def _chains_of_complex(k: SimplicialComplex) -> _Chains:
    bases = tuple(k.simplices)
    mats = [IntegerMatrix(0, len(bases[0]) if bases else 0, ())]
    for dim in range(1, len(bases)):
        mats.append(_boundary_matrix(bases[dim - 1], bases[dim], lambda f: True))
    return _Chains(bases, tuple(mats))


def _chains_of_pair(p: ComplexPair) -> _Chains:
    bases = tuple(
        tuple(s for s in p.total.layer(k) if not p.sub.has(s))
        for k in range(p.total.top_dim + 1)
    )
    mats = [IntegerMatrix(0, len(bases[0]) if bases else 0, ())]
    for dim in range(1, len(bases)):
        in_rel = set(bases[dim - 1])
        mats.append(_boundary_matrix(bases[dim - 1], bases[dim], lambda f: f in in_rel))
    return _Chains(bases, tuple(mats), relative_nonempty=p.sub.top_dim >= 0)


def _chains_and_cap(obj):
    if isinstance(obj, SimplicialComplex):
        return _chains_of_complex(obj), obj.max_dim, not obj.complete
    if isinstance(obj, ComplexPair):
        return _chains_of_pair(obj), obj.total.max_dim, not obj.total.complete
    raise TypeError(f"expected a complex or a pair, got {type(obj).__name__}")


def boundary_matrices(obj) -> list[IntegerMatrix]:
    """Boundary matrices [d_1, ..., d_top] over the canonical bases.

    Entry k-1 maps degree-k chains to degree-(k-1) chains; for a pair
    the bases are the total simplices outside the subcomplex.
    """
    chains, _, _ = _chains_and_cap(obj)
    return [chains.boundaries[k] for k in range(1, chains.top + 1)]


# --------------------------------------------------------------------------
# homology and cohomology


@dataclass(frozen=True)
class HomologyResult:
    """Per-dimension betti numbers and torsion, dimensions 0..max_dim.

    torsion[k] lists the nontrivial invariant factors of the degree-k
    group in divisibility order (field coefficients never have any).
    truncated_dim names the top dimension when enumeration was capped
    there, meaning that group is only an upper bound.
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    generators: tuple | None = None
    truncated_dim: int | None = None

    def pretty(self) -> str:
        parts = []
        for k, b in enumerate(self.betti):
            t = f" + torsion{list(self.torsion[k])}" if self.torsion[k] else ""
            parts.append(f"H{k}: rank {b}{t}")
        return "; ".join(parts)


def homology(obj, coeffs: Coefficients = INTEGERS, reduced: bool = False,
             with_generators: bool = False) -> HomologyResult:
    """Homology of a complex or a pair, exact in the chosen coefficients.

    Results run from dimension 0 to the enumeration cap; ask for a cap
    of at least k+1 when H_k matters, since the top group cannot see
    boundaries from above the cap. The reduced flag lowers the rank of
    H_0 by one (no effect on a pair with a nonempty subcomplex).
    """
    chains, cap, truncated = _chains_and_cap(obj)
    top = chains.top
    field = _field_of(coeffs)

    ranks = [0] * (cap + 2)
    torsion: list[tuple[int, ...]] = [()] * (cap + 1)
    if field is None:
        diagonals = {}
        for k in range(1, top + 1):
            diagonals[k] = _snf_diagonal(chains.boundaries[k])
            ranks[k] = sum(1 for v in diagonals[k] if v)
        for k in range(cap + 1):
            diag = diagonals.get(k + 1, ())
            torsion[k] = tuple(v for v in diag if v > 1)
    else:
        for k in range(1, top + 1):
            mat = chains.boundaries[k]
            rows = [[field.from_int(x) for x in row] for row in mat.entries]
            ranks[k] = _f_rank(rows, field, mat.cols)

    betti = []
    for k in range(cap + 1):
        betti.append(chains.n(k) - ranks[k] - ranks[k + 1])
    if reduced and chains.n(0) > 0 and not chains.relative_nonempty:
        betti[0] -= 1

    generators = None
    if with_generators:
        if field is None:
            raise ValueError("generator extraction needs field coefficients")
        reducer = _Reducer(chains, field)
        gens = []
        for k in range(cap + 1):
            reps = reducer.basis(k).reps if k <= top else []
            gens.append(tuple(
                tuple((chains.bases[k][i], c) for i, c in enumerate(vec) if c != field.zero)
                for vec in reps
            ))
        generators = tuple(gens)

    return HomologyResult(
        tuple(betti),
        tuple(torsion),
        generators=generators,
        truncated_dim=cap if truncated else None,
    )


def cohomology(obj, coeffs: Coefficients) -> HomologyResult:
    """Cohomology over a field, computed from transposed boundaries."""
    field = _require_field(coeffs, "cohomology")
    chains, cap, truncated = _chains_and_cap(obj)
    top = chains.top
    ranks = [0] * (cap + 2)
    for k in range(1, top + 1):
        mat = chains.boundaries[k].transpose()
        rows = [[field.from_int(x) for x in row] for row in mat.entries]
        ranks[k] = _f_rank(rows, field, mat.cols)
    betti = tuple(chains.n(k) - ranks[k] - ranks[k + 1] for k in range(cap + 1))
    return HomologyResult(
        betti,
        tuple(() for _ in range(cap + 1)),
        truncated_dim=cap if truncated else None,
    )


# --------------------------------------------------------------------------
# homology bases and induced maps


class _DimBasis:
    """Homology basis in one dimension: representatives plus coordinates."""

    def __init__(self, n, reps, solve, boundary_rank):
        self.n = n
        self.reps = reps
        self._solve = solve
        self.boundary_rank = boundary_rank

    @property
    def h(self) -> int:
        return len(self.reps)

    def coords(self, vec):
        x = self._solve(vec)
        if x is None:
            raise ValueError("vector is not a cycle modulo boundaries")
        return tuple(x[self.boundary_rank:])


class _Reducer:
    """Lazy homology bases of one chain complex over one field."""

    def __init__(self, chains: _Chains, field):
        self.chains = chains
        self.field = field
        self._bases: dict[int, _DimBasis] = {}

    def basis(self, k: int) -> _DimBasis:
        if k in self._bases:
            return self._bases[k]
        field = self.field
        n = self.chains.n(k)
        if n == 0:
            self._bases[k] = _DimBasis(0, [], lambda v: [], 0)
            return self._bases[k]
        dmat = self.chains.boundary(k)
        rows = [[field.from_int(x) for x in row] for row in dmat.entries]
        cycles = _f_kernel_basis(rows, field, dmat.rows, n)
        up = self.chains.boundary(k + 1)
        bcols = [
            [field.from_int(up.entries[i][j]) for i in range(up.rows)]
            for j in range(up.cols)
        ]
        candidates = bcols + cycles
        chosen = self._independent(candidates, n)
        boundary_basis = [candidates[i] for i in chosen if i < len(bcols)]
        reps = [candidates[i] for i in chosen if i >= len(bcols)]
        solve, _ = _f_solver(boundary_basis + reps, field, n)
        self._bases[k] = _DimBasis(n, reps, solve, len(boundary_basis))
        return self._bases[k]

    def _independent(self, columns, height):
        if not columns:
            return []
        rows = [[col[i] for col in columns] for i in range(height)]
        _, pivots = _f_rref(rows, self.field, len(columns))
        return pivots


@dataclass(frozen=True)
class InducedMapResult:
    """Per-dimension homology matrices of a chain map over a field.

    matrices[k] has codomain_ranks[k] rows and domain_ranks[k] columns,
    relative to the deterministic bases both sides were given, so maps
    between the same complexes compare by plain equality.
    """

    coeffs: Coefficients
    matrices: tuple[tuple[tuple, ...], ...]
    domain_ranks: tuple[int, ...]
    codomain_ranks: tuple[int, ...]

    @property
    def top(self) -> int:
        return len(self.matrices) - 1

    def compose(self, inner: "InducedMapResult") -> "InducedMapResult":
        """Matrices of self after inner, dimension by dimension."""
        if self.coeffs != inner.coeffs:
            raise ValueError("cannot compose maps over different coefficients")
        top = min(self.top, inner.top)
        if inner.codomain_ranks[: top + 1] != self.domain_ranks[: top + 1]:
            raise ValueError("composition shape mismatch")
        field = _field_of(self.coeffs)
        mats = []
        for k in range(top + 1):
            a, b = self.matrices[k], inner.matrices[k]
            mid = self.domain_ranks[k]
            rows = []
            for i in range(self.codomain_ranks[k]):
                rows.append(tuple(
                    _f_dot(a[i], [b[t][j] for t in range(mid)], field)
                    for j in range(inner.domain_ranks[k])
                ))
            mats.append(tuple(rows))
        return InducedMapResult(
            self.coeffs,
            tuple(mats),
            inner.domain_ranks[: top + 1],
            self.codomain_ranks[: top + 1],
        )

    def is_identity(self) -> bool:
        field = _field_of(self.coeffs)
        for k in range(self.top + 1):
            if self.domain_ranks[k] != self.codomain_ranks[k]:
                return False
            m = self.matrices[k]
            for i in range(len(m)):
                for j in range(len(m[i])):
                    want = field.one if i == j else field.zero
                    if m[i][j] != want:
                        return False
        return True

    def rank(self, k: int) -> int:
        field = _field_of(self.coeffs)
        m = self.matrices[k]
        if not m or not m[0]:
            return 0
        return _f_rank([list(r) for r in m], field, len(m[0]))

    def is_isomorphism_at(self, k: int) -> bool:
        return (
            self.domain_ranks[k] == self.codomain_ranks[k]
            and self.rank(k) == self.domain_ranks[k]
        )


def _chain_map_matrix(dom_red: _Reducer, cod_red: _Reducer, image_fn, k: int):
    """Homology matrix of a simplexwise chain map at dimension k."""
    field = dom_red.field
    db = dom_red.basis(k)
    cb = cod_red.basis(k)
    cod_cells = cod_red.chains.bases[k] if k <= cod_red.chains.top else ()
    cod_index = {s: i for i, s in enumerate(cod_cells)}
    cols = []
    dom_cells = dom_red.chains.bases[k] if k <= dom_red.chains.top else ()
    for rep in db.reps:
        w = [field.zero] * len(cod_cells)
        for i, coeff in enumerate(rep):
            if coeff == field.zero:
                continue
            sign, target = image_fn(k, dom_cells[i])
            if not sign:
                continue
            j = cod_index.get(target)
            if j is None:
                raise ValueError(f"chain image {target} is not a codomain basis cell")
            w[j] = field.add(w[j], field.mul(coeff, field.from_int(sign)))
        cols.append(cb.coords(w))
    rows = tuple(
        tuple(cols[j][i] for j in range(len(cols)))
        for i in range(cb.h)
    )
    return rows


def _induced_result(dom_red, cod_red, image_fn, coeffs, top):
    mats = []
    dom_ranks = []
    cod_ranks = []
    for k in range(top + 1):
        mats.append(_chain_map_matrix(dom_red, cod_red, image_fn, k))
        dom_ranks.append(dom_red.basis(k).h)
        cod_ranks.append(cod_red.basis(k).h)
    return InducedMapResult(coeffs, tuple(mats), tuple(dom_ranks), tuple(cod_ranks))


def _reliable_top(obj) -> int:
    if isinstance(obj, SimplicialComplex):
        return obj.max_dim if obj.complete else obj.max_dim - 1
    return obj.total.max_dim if obj.total.complete else obj.total.max_dim - 1


def induced_map(f, coeffs: Coefficients, top_dim: int | None = None) -> InducedMapResult:
    """Homology maps of a simplicial vertex map, or of a pair's quotient.

    Passing a ComplexPair gives the map from the total complex's
    homology to the relative homology. Dimensions run to top_dim when
    given, else to the highest dimension both sides compute exactly.
    """
    field = _require_field(coeffs, "induced maps")
    if isinstance(f, SimplicialVertexMap):
        dom_chains = _chains_of_complex(f.domain)
        cod_chains = _chains_of_complex(f.codomain)
        assignment = f.assignment
        image_fn = lambda k, s: chain_image(assignment, s)
        auto_top = min(_reliable_top(f.domain), _reliable_top(f.codomain))
    elif isinstance(f, ComplexPair):
        dom_chains = _chains_of_complex(f.total)
        cod_chains = _chains_of_pair(f)
        sub = f.sub
        image_fn = lambda k, s: (0, None) if sub.has(s) else (1, s)
        auto_top = _reliable_top(f)
    else:
        raise TypeError("induced_map expects a SimplicialVertexMap or a ComplexPair")
    top = auto_top if top_dim is None else top_dim
    if top < 0:
        raise ValueError("no dimension is reliably computable at this cap")
    return _induced_result(_Reducer(dom_chains, field), _Reducer(cod_chains, field),
                           image_fn, coeffs, top)


# --------------------------------------------------------------------------
# long exact sequence of a pair


@dataclass(frozen=True)
class LESRow:
    dim: int
    h_sub: int
    h_total: int
    h_rel: int
    rank_inclusion: int
    rank_quotient: int
    rank_connecting: int


@dataclass(frozen=True)
class LESReport:
    exact: bool
    rows: tuple[LESRow, ...]
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.exact


def _connecting_matrix(rel_red: _Reducer, sub_red: _Reducer, total_chains: _Chains, k: int):
    """Connecting map H_k(total, sub) -> H_{k-1}(sub): lift, bound, restrict."""
    field = rel_red.field
    rb = rel_red.basis(k)
    sb = sub_red.basis(k - 1)
    rel_cells = rel_red.chains.bases[k] if k <= rel_red.chains.top else ()
    total_cells = total_chains.bases[k] if k <= total_chains.top else ()
    total_index = {s: i for i, s in enumerate(total_cells)}
    lower_cells = total_chains.bases[k - 1] if k - 1 <= total_chains.top else ()
    sub_cells = sub_red.chains.bases[k - 1] if k - 1 <= sub_red.chains.top else ()
    sub_index = {s: i for i, s in enumerate(sub_cells)}
    dmat = total_chains.boundary(k)
    cols = []
    for rep in rb.reps:
        lift = [field.zero] * len(total_cells)
        for i, coeff in enumerate(rep):
            lift[total_index[rel_cells[i]]] = coeff
        bound = [
            _f_dot([field.from_int(x) for x in dmat.entries[r]], lift, field)
            for r in range(dmat.rows)
        ]
        restricted = [field.zero] * len(sub_cells)
        for r, value in enumerate(bound):
            if value == field.zero:
                continue
            j = sub_index.get(lower_cells[r])
            if j is None:
                raise ValueError("boundary of a relative cycle leaked outside the subcomplex")
            restricted[j] = value
        cols.append(sb.coords(restricted))
    return tuple(
        tuple(cols[j][i] for j in range(len(cols)))
        for i in range(sb.h)
    )


def _mat_rank_field(rows, field) -> int:
    if not rows or not rows[0]:
        return 0
    return _f_rank([list(r) for r in rows], field, len(rows[0]))


def _mat_is_zero(rows, field) -> bool:
    return all(x == field.zero for row in rows for x in row)


def _mat_product(a, b, field):
    if not a or not b:
        return ()
    inner = len(b)
    return tuple(
        tuple(_f_dot(row, [b[t][j] for t in range(inner)], field) for j in range(len(b[0])))
        for row in a
    )


def check_les_exactness(p: ComplexPair, coeffs: Coefficients, top_dim: int) -> LESReport:
    """Verify exactness of the pair's long sequence by rank counting.

    Requires complexes enumerated at least one dimension above top_dim.
    At every homology node with both neighbors available, the check is
    that consecutive maps compose to zero and their ranks fill the
    middle dimension exactly.
    """
    field = _require_field(coeffs, "the long exact sequence check")
    if top_dim < 0:
        raise ValueError("top_dim must be nonnegative")
    if p.total.max_dim < top_dim + 1:
        raise ValueError("enumerate the pair to top_dim + 1 before checking exactness")

    total_chains = _chains_of_complex(p.total)
    sub_chains = _chains_of_complex(p.sub)
    rel_chains = _chains_of_pair(p)
    red_total = _Reducer(total_chains, field)
    red_sub = _Reducer(sub_chains, field)
    red_rel = _Reducer(rel_chains, field)

    sub_has = p.sub.has
    incl = {
        k: _chain_map_matrix(red_sub, red_total, lambda _k, s: (1, s), k)
        for k in range(top_dim + 1)
    }
    quot = {
        k: _chain_map_matrix(red_total, red_rel,
                             lambda _k, s: (0, None) if sub_has(s) else (1, s), k)
        for k in range(top_dim + 1)
    }
    conn = {
        k: _connecting_matrix(red_rel, red_sub, total_chains, k)
        for k in range(1, top_dim + 1)
    }

    rows = []
    failures = []
    for k in range(top_dim + 1):
        h_sub = red_sub.basis(k).h
        h_total = red_total.basis(k).h
        h_rel = red_rel.basis(k).h
        ri = _mat_rank_field(incl[k], field)
        rq = _mat_rank_field(quot[k], field)
        rc = _mat_rank_field(conn[k], field) if k >= 1 else 0
        rows.append(LESRow(k, h_sub, h_total, h_rel, ri, rq, rc))

        if not _mat_is_zero(_mat_product(quot[k], incl[k], field), field):
            failures.append(f"dim {k}: quotient after inclusion is nonzero")
        if ri + rq != h_total:
            failures.append(f"dim {k}: ranks {ri}+{rq} do not fill H_{k}(total)={h_total}")
        if k >= 1 and not _mat_is_zero(_mat_product(conn[k], quot[k], field), field):
            failures.append(f"dim {k}: connecting after quotient is nonzero")
        # At k = 0 the sequence exits into zero, so the quotient must fill
        # the relative group on its own (rc is zero there).
        if rq + rc != h_rel:
            failures.append(f"dim {k}: ranks {rq}+{rc} do not fill H_{k}(rel)={h_rel}")
        if k < top_dim:
            up = conn[k + 1]
            if not _mat_is_zero(_mat_product(incl[k], up, field), field):
                failures.append(f"dim {k}: inclusion after connecting is nonzero")
            ru = _mat_rank_field(up, field)
            if ru + ri != h_sub:
                failures.append(f"dim {k}: ranks {ru}+{ri} do not fill H_{k}(sub)={h_sub}")

    return LESReport(not failures, tuple(rows), tuple(failures))
