"""Finite abstract simplicial complexes, simplicial maps, covers, and the
two constructions everything else leans on: barycentric subdivision and the
staircase triangulation of a product.

A complex carries a fixed total order on its vertices; simplices are stored
as tuples sorted by that order.  All objects are immutable after
construction and hash by content, so value-equal complexes share cached
chain data downstream.
"""

from .errors import (
    DisconnectedComplexError,
    DuplicateVertexInFaceError,
    EmptyInputError,
    NotASubcomplexError,
    NotSimplicialError,
)


def label_key(label):
    """Total order on vertex labels across the types we use.

    ints sort before strings before tuples; tuples sort lexicographically
    by their members' keys.
    """
    if isinstance(label, bool):
        raise TypeError("bool is not a vertex label")
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    raise TypeError(f"unsupported vertex label {label!r}")


class SimplicialComplex:
    """Finite abstract simplicial complex with a fixed vertex order."""

    __slots__ = ("vertices", "_pos", "simplices", "maximal_faces", "_by_dim",
                 "_hash")

    def __init__(self, vertices, simplices):
        """Internal constructor; use :func:`from_maximal_faces`.

        ``vertices``: ordered tuple of labels.  ``simplices``: iterable of
        tuples already sorted by the vertex order and downward closed.
        """
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        pos = self._pos
        self.simplices = frozenset(tuple(sorted(s, key=pos.__getitem__))
                                   for s in simplices)
        by_dim = {}
        for s in self.simplices:
            by_dim.setdefault(len(s) - 1, []).append(s)
        for d in by_dim:
            by_dim[d].sort(key=lambda s: tuple(self._pos[v] for v in s))
        self._by_dim = {d: tuple(v) for d, v in sorted(by_dim.items())}
        # a simplex is maximal iff it is nobody's facet (closure makes this enough)
        non_maximal = set()
        for s in self.simplices:
            if len(s) > 1:
                for i in range(len(s)):
                    non_maximal.add(s[:i] + s[i + 1:])
        self.maximal_faces = tuple(s for s in self.simplices_of_dim_all()
                                   if s not in non_maximal)
        self._hash = None

    def simplices_of_dim_all(self):
        out = []
        for d in sorted(self._by_dim):
            out.extend(self._by_dim[d])
        return out

    # -- basic queries

    @property
    def dim(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def simplices_of_dim(self, d: int):
        return self._by_dim.get(d, ())

    def f_vector(self):
        return tuple(len(self._by_dim.get(d, ())) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(v) for d, v in self._by_dim.items())

    def num_simplices(self) -> int:
        return len(self.simplices)

    def position(self, vertex):
        return self._pos[vertex]

    def sort_simplex(self, verts):
        return tuple(sorted(verts, key=self._pos.__getitem__))

    def __contains__(self, simplex) -> bool:
        try:
            return self.sort_simplex(simplex) in self.simplices
        except KeyError:
            return False

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for e in self._by_dim.get(1, ()):
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    # -- equality / hashing by content

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertices == other.vertices
                and self.simplices == other.simplices)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.simplices))
        return self._hash

    def __repr__(self):
        return (f"SimplicialComplex({len(self.vertices)} vertices, "
                f"f={self.f_vector()})")


def _downward_closure(faces):
    closure = set()
    for face in faces:
        n = len(face)
        for mask in range(1, 1 << n):
            sub = tuple(face[i] for i in range(n) if mask >> i & 1)
            closure.add(sub)
    return closure


def from_maximal_faces(faces, order=None, require_connected=True) -> SimplicialComplex:
    """Build the downward closure of the given faces.

    >>> K = from_maximal_faces([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    >>> K.f_vector()
    (4, 6, 4)
    """
    faces = [tuple(f) for f in faces]
    if not faces:
        raise EmptyInputError("need at least one face")
    verts = set()
    for f in faces:
        if not f:
            raise EmptyInputError("faces must be nonempty")
        if len(set(f)) != len(f):
            raise DuplicateVertexInFaceError(f"face {f!r} repeats a vertex")
        verts.update(f)
    if order is None:
        vertices = tuple(sorted(verts, key=label_key))
    else:
        vertices = tuple(order)
        if set(vertices) != verts or len(vertices) != len(set(vertices)):
            raise EmptyInputError("explicit order must list each vertex exactly once")
    pos = {v: i for i, v in enumerate(vertices)}
    sorted_faces = [tuple(sorted(f, key=pos.__getitem__)) for f in faces]
    K = SimplicialComplex(vertices, _downward_closure(sorted_faces))
    if require_connected and not K.is_connected():
        raise DisconnectedComplexError("1-skeleton is not path-connected")
    return K


def point_complex(label=0) -> SimplicialComplex:
    return from_maximal_faces([[label]])


class Subcomplex:
    """A downward-closed, nonempty subset of a parent complex's simplices.

    The subset is materialized as its own :class:`SimplicialComplex` (with
    the parent's vertex order restricted) so that it plugs into the
    homology machinery directly.
    """

    __slots__ = ("parent", "complex", "name")

    def __init__(self, parent: SimplicialComplex, simplices, name: str = ""):
        simplices = frozenset(parent.sort_simplex(s) for s in simplices)
        if not simplices:
            raise EmptyInputError("a subcomplex needs at least one simplex")
        for s in simplices:
            if s not in parent.simplices:
                raise NotASubcomplexError(f"{s!r} is not a simplex of the parent")
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face and face not in simplices:
                    raise NotASubcomplexError(f"missing face {face!r} of {s!r}")
        verts = sorted({v for s in simplices for v in s}, key=parent.position)
        self.parent = parent
        self.complex = SimplicialComplex(verts, simplices)
        self.name = name

    @classmethod
    def spanned_by(cls, parent: SimplicialComplex, faces, name: str = "") -> "Subcomplex":
        """Subcomplex generated by the given faces (downward closure)."""
        sorted_faces = [parent.sort_simplex(f) for f in faces]
        return cls(parent, _downward_closure(sorted_faces), name=name)

    @property
    def simplices(self):
        return self.complex.simplices

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"Subcomplex({tag} {self.complex.f_vector()} of {self.parent!r})"


class Cover:
    """A list of subcomplexes meant to cover a parent complex."""

    __slots__ = ("parent", "pieces")

    def __init__(self, parent: SimplicialComplex, pieces):
        pieces = tuple(pieces)
        if not pieces:
            raise EmptyInputError("a cover needs at least one piece")
        for p in pieces:
            if p.parent != parent:
                raise NotASubcomplexError("piece belongs to a different parent")
        self.parent = parent
        self.pieces = pieces

    @classmethod
    def from_face_lists(cls, parent, face_lists, names=None) -> "Cover":
        names = names or [f"K{i}" for i in range(len(face_lists))]
        return cls(parent, [Subcomplex.spanned_by(parent, fl, name=n)
                            for fl, n in zip(face_lists, names)])

    def __len__(self):
        return len(self.pieces)

    def __repr__(self):
        return f"Cover({len(self.pieces)} pieces of {self.parent!r})"


def is_cover(parent: SimplicialComplex, pieces):
    """(True, None) when the pieces cover every simplex, else (False, witness)."""
    covered = set()
    for p in pieces:
        if p.parent != parent:
            raise NotASubcomplexError("piece belongs to a different parent")
        covered |= p.simplices
    for d in range(parent.dim + 1):
        for s in parent.simplices_of_dim(d):
            if s not in covered:
                return False, s
    return True, None


class SimplicialMap:
    """Vertex assignment between complexes that carries simplices to simplices."""

    __slots__ = ("source", "target", "assignment", "_hash")

    def __init__(self, source, target, assignment):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        for v in source.vertices:
            if v not in self.assignment:
                raise NotSimplicialError(f"vertex {v!r} has no image")
            if self.assignment[v] not in target._pos:
                raise NotSimplicialError(f"image {self.assignment[v]!r} is not a vertex")
        for s in source.maximal_faces:
            if self.image_simplex(s) not in target.simplices:
                raise NotSimplicialError(f"image of {s!r} is not a simplex")
        self._hash = None

    def __call__(self, vertex):
        return self.assignment[vertex]

    def image_simplex(self, simplex):
        """Image vertex set, sorted in the target order (duplicates removed)."""
        return self.target.sort_simplex({self.assignment[v] for v in simplex})

    @classmethod
    def identity(cls, K) -> "SimplicialMap":
        return cls(K, K, {v: v for v in K.vertices})

    @classmethod
    def constant(cls, source, target, vertex=None) -> "SimplicialMap":
        if vertex is None:
            vertex = target.vertices[0]
        return cls(source, target, {v: vertex for v in source.vertices})

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self o other."""
        if other.target != self.source:
            raise NotSimplicialError("maps are not composable")
        return SimplicialMap(other.source, self.target,
                             {v: self.assignment[other.assignment[v]]
                              for v in other.source.vertices})

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.source == other.source
                and self.target == other.target and self.assignment == other.assignment)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source, self.target,
                               tuple(sorted(self.assignment.items(),
                                            key=lambda kv: self.source.position(kv[0])))))
        return self._hash

    def __repr__(self):
        return f"SimplicialMap({self.source!r} -> {self.target!r})"


def restrict(phi: SimplicialMap, piece: Subcomplex) -> SimplicialMap:
    """Restriction of a map to a subcomplex of its source."""
    if piece.parent != phi.source:
        raise NotASubcomplexError("piece is not a subcomplex of the map's source")
    return SimplicialMap(piece.complex, phi.target,
                         {v: phi.assignment[v] for v in piece.complex.vertices})


def diagonal_map(K: SimplicialComplex, product_complex=None):
    """The diagonal K -> K x K; its pullback computes cup products."""
    if product_complex is None:
        product_complex, _, _ = product(K, K)
    return SimplicialMap(K, product_complex, {v: (v, v) for v in K.vertices})


# ---------------------------------------------------------------------------
# barycentric subdivision


def barycentric_subdivision(K: SimplicialComplex):
    """(sd K, carrier map sd K -> K).

    Vertices of sd K are the simplices of K; its simplices are the chains
    under strict inclusion.  The carrier map sends a barycenter to the last
    vertex of its simplex in K's order, a simplicial approximation of the
    identity.
    """
    simplices = K.simplices_of_dim_all()
    chains_ending = {}
    all_chains = []
    for s in simplices:  # by ascending dimension
        sset = set(s)
        ending = [(s,)]
        n = len(s)
        if n > 1:
            for mask in range(1, (1 << n) - 1):
                t = tuple(s[i] for i in range(n) if mask >> i & 1)
                for c in chains_ending[t]:
                    ending.append(c + (s,))
        chains_ending[s] = ending
        all_chains.extend(ending)
    vertices = sorted(simplices, key=lambda s: label_key(tuple(s)))
    sd = SimplicialComplex(vertices, all_chains)
    carrier = SimplicialMap(sd, K, {s: s[-1] for s in simplices})
    return sd, carrier


def sd_map(phi: SimplicialMap, sd_source=None, sd_target=None) -> SimplicialMap:
    """Induced map sd(source) -> sd(target): barycenter to barycenter of the image."""
    if sd_source is None:
        sd_source, _ = barycentric_subdivision(phi.source)
    if sd_target is None:
        sd_target, _ = barycentric_subdivision(phi.target)
    assignment = {s: phi.image_simplex(s) for s in phi.source.simplices}
    return SimplicialMap(sd_source, sd_target, assignment)


def subdivide_cover(cover: Cover, sd_parent=None) -> Cover:
    """Subdivide each piece inside sd(parent); always covers sd(parent)."""
    if sd_parent is None:
        sd_parent, _ = barycentric_subdivision(cover.parent)
    pieces = []
    for p in cover.pieces:
        piece_simplices = p.simplices
        chains = [c for c in sd_parent.simplices if all(s in piece_simplices for s in c)]
        pieces.append(Subcomplex(sd_parent, chains, name=f"sd {p.name}".strip()))
    return Cover(sd_parent, pieces)


# ---------------------------------------------------------------------------
# staircase product


def _staircase_paths(a: int, b: int):
    """Monotone chains from (0,0) to (a,b) with unit steps (Delannoy paths)."""
    out = []

    def walk(i, j, path):
        if i == a and j == b:
            out.append(tuple(path))
            return
        if i < a:
            path.append((i + 1, j))
            walk(i + 1, j, path)
            path.pop()
        if j < b:
            path.append((i, j + 1))
            walk(i, j + 1, path)
            path.pop()
        if i < a and j < b:
            path.append((i + 1, j + 1))
            walk(i + 1, j + 1, path)
            path.pop()

    walk(0, 0, [(0, 0)])
    return out


def product(K: SimplicialComplex, L: SimplicialComplex):
    """Staircase triangulation of |K| x |L| plus the two projections.

    Simplices are the monotone chains in the product of the vertex orders
    whose coordinate projections are simplices of K and L.
    """
    simplices = set()
    path_cache = {}
    for dk in range(K.dim + 1):
        for sigma in K.simplices_of_dim(dk):
            for dl in range(L.dim + 1):
                key = (dk, dl)
                if key not in path_cache:
                    path_cache[key] = _staircase_paths(dk, dl)
                for tau in L.simplices_of_dim(dl):
                    for path in path_cache[key]:
                        simplices.add(tuple((sigma[i], tau[j]) for i, j in path))
    vertices = sorted({(u, v) for u in K.vertices for v in L.vertices},
                      key=lambda p: (K.position(p[0]), L.position(p[1])))
    P = SimplicialComplex(vertices, simplices)
    pi1 = SimplicialMap(P, K, {p: p[0] for p in vertices})
    pi2 = SimplicialMap(P, L, {p: p[1] for p in vertices})
    return P, pi1, pi2
