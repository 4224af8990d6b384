"""Simplicial chain complexes, (co)homology with coefficients, induced maps
of simplicial maps, and degreewise equality of induced maps.

Boundary matrices are integral with the usual alternating signs in the
complex's vertex order.  Coefficients are handled by three backends: a
bitset pipeline for Z_2 (the workhorse), dense exact elimination for Q and
Z_p, and Smith normal form over Z (which is where torsion comes from).

Equality of induced maps is decided two ways that must agree:

* the default "membership" path tests, for every generator of the relevant
  group, whether the difference of the two (co)chain images is a
  (co)boundary — over Z this is exact lattice membership, so it is
  relation-aware;
* the "presentation" path builds both induced homomorphisms on group
  presentations and compares them with :func:`exactalg.homs_equal`.

Results of both are pure functions of the inputs and are cached per
(complex, ring).
"""

from . import exactalg
from .exactalg import (
    GF2,
    Gf2Span,
    FieldSpan,
    Hom,
    Matrix,
    Presentation,
    Ring,
    ZZ,
    gf2_columns_from_sparse,
    gf2_kernel,
    gf2_vector_from_list,
    homs_equal,
    kernel_basis,
    quotient_presentation,
    smith_normal_form,
    trivial_presentation,
)
from .complexes import SimplicialComplex, SimplicialMap

COHOMOLOGY = "cohomology"
HOMOLOGY = "homology"


def _check_variance(variance):
    if variance not in (COHOMOLOGY, HOMOLOGY):
        raise ValueError(f"variance must be {COHOMOLOGY!r} or {HOMOLOGY!r}")


# ---------------------------------------------------------------------------
# chain complexes


class ChainComplexData:
    """Bases and boundary operators of a complex, in one place."""

    __slots__ = ("complex", "basis", "index", "_sparse")

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.basis = {d: K.simplices_of_dim(d) for d in range(K.dim + 1)}
        self.index = {}
        for d, simps in self.basis.items():
            for i, s in enumerate(simps):
                self.index[s] = i
        self._sparse = {}
        for d in range(1, K.dim + 1):
            cols = []
            for s in self.basis[d]:
                col = []
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    col.append((self.index[face], -1 if i % 2 else 1))
                cols.append(col)
            self._sparse[d] = cols

    def rank_of(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def sparse_boundary(self, d: int):
        """Columns of the boundary C_d -> C_{d-1} as (row, sign) lists."""
        return self._sparse.get(d, [[] for _ in range(self.rank_of(d))])

    def sparse_coboundary(self, d: int):
        """Columns of delta^d : C^d -> C^{d+1} (the transpose of boundary d+1)."""
        cols = [[] for _ in range(self.rank_of(d))]
        for j, col in enumerate(self.sparse_boundary(d + 1)):
            for i, sign in col:
                cols[i].append((j, sign))
        return cols

    def boundary_matrix(self, d: int) -> Matrix:
        """Dense integral boundary matrix (use only at desk scale)."""
        m, n = self.rank_of(d - 1), self.rank_of(d)
        rows = [[0] * n for _ in range(m)]
        for j, col in enumerate(self.sparse_boundary(d)):
            for i, sign in col:
                rows[i][j] = sign
        return Matrix(ZZ, rows, ncols=n)

    def coboundary_matrix(self, d: int) -> Matrix:
        return self.boundary_matrix(d + 1).transpose()


_chain_cache: dict = {}


def chain_complex(K: SimplicialComplex) -> ChainComplexData:
    data = _chain_cache.get(K)
    if data is None:
        data = _chain_cache[K] = ChainComplexData(K)
    return data


# ---------------------------------------------------------------------------
# graded modules


class GradedModule:
    """Per-degree presentations of H_*(K;R) or H^*(K;R)."""

    __slots__ = ("complex", "ring", "variance", "modules")

    def __init__(self, K, ring, variance, modules):
        self.complex = K
        self.ring = ring
        self.variance = variance
        self.modules = modules

    def presentation(self, d: int) -> Presentation:
        p = self.modules.get(d)
        if p is None:
            data = chain_complex(self.complex)
            return trivial_presentation(self.ring, data.rank_of(d))
        return p

    @property
    def degrees(self):
        return range(self.complex.dim + 1)

    def betti(self):
        return tuple(self.presentation(d).free_rank for d in self.degrees)

    def group_strs(self):
        return tuple(self.presentation(d).group_str() for d in self.degrees)

    def __repr__(self):
        return (f"GradedModule({self.variance} of {self.complex!r} over "
                f"{self.ring}: {', '.join(self.group_strs())})")


def _degree_presentation(data: ChainComplexData, ring: Ring, variance, d: int):
    if variance == COHOMOLOGY:
        cycle_src = data.sparse_coboundary(d)
        n_ambient = data.rank_of(d)
        bnd_src = data.sparse_coboundary(d - 1) if d >= 1 else []
        bnd_rows = n_ambient
    else:
        cycle_src = data.sparse_boundary(d)
        n_ambient = data.rank_of(d)
        bnd_src = data.sparse_boundary(d + 1)
        bnd_rows = n_ambient
    if ring == GF2:
        cols = gf2_columns_from_sparse(cycle_src, 0)
        cycles = gf2_kernel(cols, n_ambient)
        boundaries = gf2_columns_from_sparse(bnd_src, 0)
        return exactalg._gf2_quotient(n_ambient, cycles, boundaries)
    cycle_mat = _dense_from_sparse(ring, cycle_src, _sparse_nrows(data, variance, d))
    boundary_mat = _dense_from_sparse(ring, bnd_src, bnd_rows)
    cycles = kernel_basis(cycle_mat)
    return quotient_presentation(cycles, boundary_mat)


def _sparse_nrows(data, variance, d):
    if variance == COHOMOLOGY:
        return data.rank_of(d + 1)
    return data.rank_of(d - 1)


def _dense_from_sparse(ring, sparse_cols, nrows) -> Matrix:
    z = ring.zero
    rows = [[z] * len(sparse_cols) for _ in range(nrows)]
    for j, col in enumerate(sparse_cols):
        for i, sign in col:
            rows[i][j] = ring.normalize(sign)
    return Matrix(ring, rows, ncols=len(sparse_cols))


_graded_cache: dict = {}


def _graded_module(K, ring, variance) -> GradedModule:
    key = (K, ring, variance)
    gm = _graded_cache.get(key)
    if gm is None:
        data = chain_complex(K)
        modules = {d: _degree_presentation(data, ring, variance, d)
                   for d in range(K.dim + 1)}
        gm = _graded_cache[key] = GradedModule(K, ring, variance, modules)
    return gm


def homology(K: SimplicialComplex, ring: Ring) -> GradedModule:
    """H_*(K;R), one presentation per degree with cycle representatives.

    >>> from cohodist.complexes import from_maximal_faces
    >>> homology(from_maximal_faces([[0]]), ZZ).group_strs()
    ('Z',)
    """
    return _graded_module(K, ring, HOMOLOGY)


def cohomology(K: SimplicialComplex, ring: Ring) -> GradedModule:
    """H^*(K;R) via the transposed boundaries."""
    return _graded_module(K, ring, COHOMOLOGY)


# ---------------------------------------------------------------------------
# chain maps and induced homomorphisms


_chain_map_cache: dict = {}


def chain_map(phi: SimplicialMap, d: int):
    """Degree-d chain map as a list over the source basis: (target index, sign)
    per simplex, or None when the image is degenerate."""
    key = (phi, d)
    out = _chain_map_cache.get(key)
    if out is not None:
        return out
    src = chain_complex(phi.source)
    tgt = chain_complex(phi.target)
    entries = []
    for s in src.basis.get(d, ()):
        image = [phi.assignment[v] for v in s]
        if len(set(image)) != len(image):
            entries.append(None)
            continue
        pos = [phi.target.position(v) for v in image]
        sign = _permutation_sign(pos)
        entries.append((tgt.index[tuple(sorted(image, key=phi.target.position))], sign))
    _chain_map_cache[key] = entries
    return entries


def _permutation_sign(values) -> int:
    inversions = 0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def pullback_cochain(phi: SimplicialMap, ring: Ring, d: int, cochain):
    """phi^# of a degree-d cochain on the target (dense list over source basis)."""
    entries = chain_map(phi, d)
    z = ring.zero
    out = [z] * len(entries)
    for i, e in enumerate(entries):
        if e is not None:
            j, sign = e
            v = cochain[j]
            out[i] = ring.normalize(v if sign == 1 else -v)
    return out


def pushforward_chain(phi: SimplicialMap, ring: Ring, d: int, chain):
    """phi_# of a degree-d chain on the source (dense list over target basis)."""
    entries = chain_map(phi, d)
    n_t = chain_complex(phi.target).rank_of(d)
    z = ring.zero
    out = [z] * n_t
    for i, e in enumerate(entries):
        if e is not None and chain[i] != z:
            j, sign = e
            term = chain[i] if sign == 1 else ring.neg(chain[i])
            out[j] = ring.add(out[j], term)
    return out


class GradedHom:
    """Per-degree homomorphisms between two graded modules."""

    __slots__ = ("source", "target", "homs")

    def __init__(self, source: GradedModule, target: GradedModule, homs):
        self.source = source
        self.target = target
        self.homs = homs

    def hom(self, d: int) -> Hom:
        h = self.homs.get(d)
        if h is None:
            return Hom.zero(self.source.presentation(d), self.target.presentation(d))
        return h

    @property
    def degrees(self):
        top = max(self.source.complex.dim, self.target.complex.dim)
        return range(top + 1)

    def compose(self, other: "GradedHom") -> "GradedHom":
        homs = {d: self.hom(d).compose(other.hom(d)) for d in other.degrees}
        return GradedHom(other.source, self.target, homs)

    def is_iso(self) -> bool:
        return all(self.hom(d).is_iso() for d in self.degrees)

    def __repr__(self):
        return f"GradedHom({self.source!r} -> {self.target!r})"


def induced_map(phi: SimplicialMap, ring: Ring, variance: str) -> GradedHom:
    """Induced homomorphism on (co)homology presentations.

    Cohomology is contravariant: the result maps H^*(target complex) to
    H^*(source complex).
    """
    _check_variance(variance)
    if variance == COHOMOLOGY:
        src_gm = cohomology(phi.target, ring)
        tgt_gm = cohomology(phi.source, ring)
        push = lambda d, vec: pullback_cochain(phi, ring, d, vec)
    else:
        src_gm = homology(phi.source, ring)
        tgt_gm = homology(phi.target, ring)
        push = lambda d, vec: pushforward_chain(phi, ring, d, vec)
    top = max(phi.source.dim, phi.target.dim)
    homs = {}
    for d in range(top + 1):
        sp = src_gm.presentation(d)
        tp = tgt_gm.presentation(d)
        cols = [tp.coordinates(push(d, gen)) for gen in sp.gens]
        homs[d] = Hom(sp, tp, Matrix.from_columns(ring, cols, tp.ngens), check=False)
    return GradedHom(src_gm, tgt_gm, homs)


def identity_graded_hom(K: SimplicialComplex, ring: Ring, variance: str) -> GradedHom:
    gm = _graded_module(K, ring, variance)
    homs = {d: Hom.identity(gm.presentation(d)) for d in gm.degrees}
    return GradedHom(gm, gm, homs)


# ---------------------------------------------------------------------------
# membership solvers: is a vector a (co)boundary?


_span_cache: dict = {}


class _ZSpan:
    __slots__ = ("matrix", "snf")

    def __init__(self, matrix: Matrix):
        self.matrix = matrix
        self.snf = smith_normal_form(matrix)

    def contains(self, vec) -> bool:
        B = Matrix.from_columns(ZZ, [list(vec)], self.matrix.nrows)
        return exactalg._z_solve_with_snf(self.snf, self.matrix.ncols, B) is not None


def _image_span(K: SimplicialComplex, ring: Ring, variance: str, d: int):
    """Membership tester for im(delta^{d-1}) (cohomology) or im(boundary_{d+1})."""
    key = (K, ring, variance, d)
    span = _span_cache.get(key)
    if span is not None:
        return span
    data = chain_complex(K)
    if variance == COHOMOLOGY:
        sparse = data.sparse_coboundary(d - 1) if d >= 1 else []
        nrows = data.rank_of(d)
    else:
        sparse = data.sparse_boundary(d + 1)
        nrows = data.rank_of(d)
    if ring == GF2:
        span = Gf2Span()
        for c in gf2_columns_from_sparse(sparse, nrows):
            span.add(c)
        tester = _Gf2Membership(span)
    elif ring.is_field:
        fs = FieldSpan(ring)
        for col in _dense_from_sparse(ring, sparse, nrows).columns():
            fs.add(col)
        tester = fs
    else:
        tester = _ZSpan(_dense_from_sparse(ZZ, sparse, nrows))
    _span_cache[key] = tester
    return tester


class _Gf2Membership:
    __slots__ = ("span",)

    def __init__(self, span):
        self.span = span

    def contains(self, vec) -> bool:
        if not isinstance(vec, int):
            vec = gf2_vector_from_list(vec)
        return self.span.contains(vec)


# ---------------------------------------------------------------------------
# equality of induced maps


class MapsEqualReport:
    """Outcome of comparing two induced maps degree by degree."""

    __slots__ = ("equal", "first_failing_degree", "by_degree")

    def __init__(self, by_degree):
        self.by_degree = dict(by_degree)
        failing = [d for d, ok in sorted(self.by_degree.items()) if not ok]
        self.first_failing_degree = failing[0] if failing else None
        self.equal = not failing

    def __bool__(self):
        return self.equal

    def __repr__(self):
        if self.equal:
            return "MapsEqualReport(equal)"
        return f"MapsEqualReport(first failure in degree {self.first_failing_degree})"


def _require_parallel(phi, psi):
    if phi.source != psi.source or phi.target != psi.target:
        raise ValueError("maps must share source and target")


def maps_equal(phi: SimplicialMap, psi: SimplicialMap, ring: Ring, variance: str,
               method: str = "membership") -> MapsEqualReport:
    """Do phi and psi induce the same map in every degree?

    ``method='membership'`` tests generator differences for (co)boundary
    membership; ``method='presentation'`` goes through explicit
    homomorphisms.  The two agree; the latter exists as the independent
    slow path.
    """
    _require_parallel(phi, psi)
    _check_variance(variance)
    if method == "presentation":
        return _maps_equal_presentation(phi, psi, ring, variance)
    by_degree = {}
    if variance == COHOMOLOGY:
        gm = cohomology(phi.target, ring)
        top = max(phi.source.dim, phi.target.dim)
        for d in range(top + 1):
            pres = gm.presentation(d)
            if pres.is_trivial or d > phi.source.dim:
                by_degree[d] = True
                continue
            span = _image_span(phi.source, ring, COHOMOLOGY, d) if d >= 1 else None
            ok = True
            for gen in pres.gens:
                a = pullback_cochain(phi, ring, d, gen)
                b = pullback_cochain(psi, ring, d, gen)
                diff = [ring.sub(x, y) for x, y in zip(a, b)]
                if d == 0:
                    ok = all(x == ring.zero for x in diff)
                else:
                    ok = span.contains(diff)
                if not ok:
                    break
            by_degree[d] = ok
    else:
        gm = homology(phi.source, ring)
        top = max(phi.source.dim, phi.target.dim)
        for d in range(top + 1):
            pres = gm.presentation(d)
            if pres.is_trivial:
                by_degree[d] = True
                continue
            span = _image_span(phi.target, ring, HOMOLOGY, d)
            ok = True
            for gen in pres.gens:
                a = pushforward_chain(phi, ring, d, gen)
                b = pushforward_chain(psi, ring, d, gen)
                diff = [ring.sub(x, y) for x, y in zip(a, b)]
                ok = span.contains(diff)
                if not ok:
                    break
            by_degree[d] = ok
    return MapsEqualReport(by_degree)


def _maps_equal_presentation(phi, psi, ring, variance) -> MapsEqualReport:
    f = induced_map(phi, ring, variance)
    g = induced_map(psi, ring, variance)
    by_degree = {d: homs_equal(f.hom(d), g.hom(d)) for d in f.degrees}
    return MapsEqualReport(by_degree)


def equality_obstruction(phi: SimplicialMap, psi: SimplicialMap, ring: Ring,
                         variance: str) -> int:
    """Number of generators whose images differ; 0 means the maps agree.

    A finer-grained version of :func:`maps_equal`, used as a search score.
    """
    _require_parallel(phi, psi)
    _check_variance(variance)
    count = 0
    if variance == COHOMOLOGY:
        gm = cohomology(phi.target, ring)
        for d in range(phi.target.dim + 1):
            pres = gm.presentation(d)
            if pres.is_trivial or d > phi.source.dim:
                continue
            span = _image_span(phi.source, ring, COHOMOLOGY, d) if d >= 1 else None
            for gen in pres.gens:
                a = pullback_cochain(phi, ring, d, gen)
                b = pullback_cochain(psi, ring, d, gen)
                diff = [ring.sub(x, y) for x, y in zip(a, b)]
                if d == 0:
                    if any(x != ring.zero for x in diff):
                        count += 1
                elif not span.contains(diff):
                    count += 1
    else:
        gm = homology(phi.source, ring)
        for d in range(phi.source.dim + 1):
            pres = gm.presentation(d)
            if pres.is_trivial:
                continue
            span = _image_span(phi.target, ring, HOMOLOGY, d)
            for gen in pres.gens:
                a = pushforward_chain(phi, ring, d, gen)
                b = pushforward_chain(psi, ring, d, gen)
                diff = [ring.sub(x, y) for x, y in zip(a, b)]
                if not span.contains(diff):
                    count += 1
    return count
