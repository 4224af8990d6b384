"""Named complexes, covers and maps used by the test suite and the CLI.

The two projective-space triangulations are reconstructed as the union of
the maximal faces printed for their cover pieces (the pieces cover the
whole complex, so the union *is* the complex); the test suite pins their
(co)homology to the known minimal-triangulation values.

``TABLE4`` is kept exactly as printed even though its second and third
piece lists are identical; cover verification is expected to flag the gap,
and the search machinery to repair it.
"""

from .complexes import Cover, SimplicialMap, from_maximal_faces, product

# --- small standard complexes ----------------------------------------------

S2_FACES = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]

C3_FACES = [[0, 1], [0, 2], [1, 2]]

K5_FACES = [[i, j] for i in range(1, 6) for j in range(i + 1, 6)]

# 6-vertex real projective plane (icosahedron modulo the antipodal map)
RP2_FACES = [
    [0, 1, 4], [0, 1, 5], [0, 2, 3], [0, 2, 4], [0, 3, 5],
    [1, 2, 3], [1, 2, 5], [1, 3, 4], [2, 4, 5], [3, 4, 5],
]

# --- cover tables -----------------------------------------------------------

TABLE1 = [
    [  # K0
        [1, 2, 5, 6, 8], [2, 4, 6, 7, 9], [1, 3, 4, 5, 7], [1, 3, 4, 7, 8],
        [1, 3, 5, 7, 9], [1, 2, 4, 5, 6], [1, 2, 6, 7, 8], [1, 2, 3, 7, 8],
        [1, 2, 5, 8, 9], [1, 4, 5, 7, 9], [1, 3, 4, 5, 6], [1, 2, 4, 7, 9],
    ],
    [  # K1
        [2, 4, 5, 8, 9], [1, 2, 4, 6, 7], [4, 5, 7, 8, 9], [1, 5, 6, 8, 9],
        [1, 3, 5, 6, 9], [1, 4, 6, 7, 8], [1, 3, 4, 6, 8], [3, 5, 6, 7, 9],
        [3, 4, 6, 8, 9], [4, 6, 7, 8, 9], [5, 6, 7, 8, 9], [1, 3, 6, 8, 9],
    ],
    [  # K2
        [2, 3, 4, 6, 9], [1, 2, 3, 7, 9], [2, 3, 6, 7, 9], [1, 2, 4, 5, 9],
        [2, 3, 4, 8, 9], [3, 4, 5, 7, 8], [2, 5, 6, 7, 8], [1, 2, 3, 8, 9],
        [2, 3, 5, 7, 8], [2, 3, 4, 5, 6], [2, 3, 5, 6, 7], [2, 3, 4, 5, 8],
    ],
]

TABLE2 = [
    [  # K0
        [3, 5, 9, 10], [3, 6, 7, 8], [1, 3, 5, 11], [2, 3, 7, 8],
        [3, 4, 5, 11], [1, 2, 3, 7], [1, 3, 5, 10], [3, 4, 5, 9],
        [3, 6, 9, 10], [2, 3, 4, 8],
    ],
    [  # K1
        [1, 4, 8, 10], [3, 6, 8, 9], [1, 5, 6, 11], [3, 4, 8, 9],
        [5, 6, 7, 8], [1, 5, 6, 8], [2, 5, 7, 8], [1, 5, 8, 10],
        [2, 5, 8, 10], [2, 4, 8, 10],
    ],
    [  # K2
        [2, 5, 7, 9], [1, 6, 8, 9], [2, 4, 6, 11], [2, 3, 4, 11],
        [1, 2, 3, 11], [1, 2, 6, 11], [2, 6, 9, 10], [1, 2, 6, 9],
        [2, 4, 6, 10], [2, 5, 9, 10],
    ],
    [  # K3
        [4, 5, 7, 9], [1, 3, 7, 10], [3, 6, 7, 10], [4, 5, 6, 11],
        [1, 4, 7, 10], [4, 6, 7, 10], [1, 4, 8, 9], [1, 2, 7, 9],
        [1, 4, 7, 9], [4, 5, 6, 7],
    ],
]

TABLE3 = [
    [  # K0
        [(2, 2), (1, 2), (1, 1), (2, 3)], [(2, 2), (1, 0), (2, 0), (2, 3)],
        [(2, 2), (0, 2), (0, 0), (2, 3)], [(2, 2), (1, 0), (1, 2), (2, 3)],
        [(2, 2), (2, 0), (0, 0), (2, 1)], [(2, 2), (1, 0), (2, 0), (2, 1)],
        [(0, 2), (0, 3), (0, 0), (2, 3)], [(2, 2), (2, 0), (0, 0), (2, 3)],
        [(2, 0), (0, 0), (2, 3), (2, 1)], [(2, 2), (0, 2), (0, 0), (0, 1)],
        [(2, 2), (1, 0), (1, 2), (1, 1)], [(1, 2), (1, 3), (1, 1), (2, 3)],
    ],
    [  # K1
        [(1, 3), (0, 3), (0, 0), (0, 1)], [(1, 0), (1, 3), (1, 1), (0, 0)],
        [(2, 2), (1, 1), (2, 3), (2, 1)], [(1, 0), (2, 0), (2, 3), (2, 1)],
        [(1, 2), (1, 3), (1, 1), (0, 1)], [(1, 3), (0, 2), (0, 3), (0, 0)],
        [(1, 0), (1, 3), (1, 1), (2, 3)], [(1, 0), (1, 1), (2, 3), (2, 1)],
        [(1, 3), (1, 1), (0, 0), (0, 1)], [(1, 0), (1, 2), (1, 3), (2, 3)],
        [(1, 2), (1, 3), (0, 2), (0, 1)], [(2, 2), (1, 0), (1, 1), (2, 1)],
    ],
    [  # K2
        [(0, 2), (0, 3), (2, 3), (0, 1)], [(1, 3), (0, 2), (0, 3), (0, 1)],
        [(0, 0), (2, 3), (2, 1), (0, 1)], [(2, 2), (0, 2), (2, 3), (0, 1)],
        [(1, 0), (1, 2), (1, 1), (0, 0)], [(2, 2), (2, 3), (2, 1), (0, 1)],
        [(2, 2), (0, 0), (2, 1), (0, 1)], [(1, 2), (1, 1), (0, 0), (0, 1)],
        [(1, 2), (1, 3), (0, 2), (0, 0)], [(1, 2), (0, 2), (0, 0), (0, 1)],
        [(1, 0), (1, 2), (1, 3), (0, 0)], [(0, 3), (0, 0), (2, 3), (0, 1)],
    ],
]

_TABLE4_K0 = [
    [(2, 3), (0, 1), (0, 3), (1, 3), (0, 0)], [(0, 1), (3, 3), (3, 1), (0, 0), (1, 1)],
    [(2, 3), (0, 2), (3, 3), (0, 3), (0, 0)], [(2, 3), (0, 2), (0, 1), (0, 3), (1, 3)],
    [(2, 3), (0, 1), (1, 3), (0, 0), (1, 1)], [(2, 3), (2, 1), (0, 0), (1, 1), (1, 0)],
    [(2, 3), (1, 2), (0, 2), (1, 3), (0, 0)], [(0, 1), (3, 3), (3, 1), (3, 2), (1, 1)],
    [(2, 3), (0, 2), (0, 3), (1, 3), (0, 0)], [(0, 1), (3, 3), (3, 1), (2, 1), (0, 0)],
    [(0, 2), (3, 3), (2, 2), (3, 2), (0, 0)], [(2, 3), (0, 2), (0, 1), (3, 3), (2, 2)],
    [(0, 2), (3, 3), (0, 3), (1, 3), (0, 0)], [(2, 3), (1, 2), (0, 1), (2, 2), (1, 1)],
    [(2, 3), (0, 1), (3, 3), (0, 3), (0, 0)], [(2, 3), (1, 2), (0, 2), (0, 1), (1, 3)],
    [(0, 1), (3, 3), (1, 3), (0, 0), (1, 1)], [(1, 2), (0, 2), (0, 1), (3, 3), (3, 2)],
    [(2, 3), (1, 2), (0, 2), (0, 1), (2, 2)], [(2, 3), (0, 2), (0, 1), (3, 3), (0, 3)],
    [(2, 3), (0, 2), (3, 3), (2, 2), (0, 0)], [(2, 3), (1, 2), (0, 1), (1, 3), (1, 1)],
    [(0, 2), (0, 1), (3, 3), (2, 2), (3, 2)], [(0, 1), (3, 3), (2, 2), (3, 2), (2, 1)],
    [(3, 3), (1, 3), (0, 0), (1, 1), (1, 0)], [(2, 3), (0, 1), (2, 1), (0, 0), (1, 1)],
    [(0, 1), (3, 3), (3, 1), (3, 2), (2, 1)], [(1, 2), (0, 1), (3, 3), (1, 3), (1, 1)],
    [(2, 3), (1, 2), (0, 2), (2, 2), (0, 0)], [(3, 3), (3, 1), (0, 0), (1, 1), (1, 0)],
    [(2, 3), (0, 1), (2, 2), (2, 1), (1, 1)], [(0, 1), (3, 3), (0, 3), (1, 3), (0, 0)],
]

_TABLE4_K1 = [
    [(3, 3), (2, 2), (2, 0), (3, 2), (0, 0)], [(2, 2), (2, 1), (0, 0), (1, 1), (1, 0)],
    [(2, 2), (2, 0), (2, 1), (0, 0), (1, 0)], [(2, 3), (3, 3), (1, 3), (1, 1), (1, 0)],
    [(2, 3), (3, 3), (2, 2), (2, 0), (0, 0)], [(2, 3), (2, 0), (2, 1), (0, 0), (1, 0)],
    [(2, 3), (1, 2), (3, 3), (2, 2), (1, 0)], [(2, 3), (3, 3), (2, 1), (1, 1), (1, 0)],
    [(3, 3), (2, 0), (3, 1), (2, 1), (0, 0)], [(1, 2), (0, 1), (2, 2), (0, 0), (1, 1)],
    [(2, 3), (0, 1), (3, 3), (2, 1), (0, 0)], [(2, 3), (1, 2), (2, 2), (0, 0), (1, 0)],
    [(1, 2), (0, 2), (0, 1), (2, 2), (0, 0)], [(2, 3), (1, 2), (1, 3), (0, 0), (1, 0)],
    [(1, 2), (2, 2), (0, 0), (1, 1), (1, 0)], [(0, 2), (0, 1), (2, 2), (3, 2), (0, 0)],
    [(3, 3), (3, 0), (2, 0), (3, 1), (1, 0)], [(3, 3), (3, 1), (3, 2), (2, 1), (1, 1)],
    [(3, 3), (3, 0), (2, 0), (3, 2), (1, 0)], [(3, 3), (2, 2), (2, 0), (3, 2), (1, 0)],
    [(2, 3), (3, 3), (2, 0), (2, 1), (1, 0)], [(2, 3), (1, 3), (0, 0), (1, 1), (1, 0)],
    [(3, 3), (3, 0), (2, 0), (3, 1), (0, 0)], [(2, 3), (1, 2), (3, 3), (1, 3), (1, 0)],
    [(1, 2), (3, 3), (2, 2), (3, 2), (1, 0)], [(2, 3), (2, 2), (2, 0), (0, 0), (1, 0)],
    [(2, 3), (3, 3), (2, 0), (2, 1), (0, 0)], [(2, 3), (3, 3), (2, 2), (2, 0), (1, 0)],
    [(0, 1), (2, 2), (2, 1), (0, 0), (1, 1)], [(3, 3), (3, 1), (2, 1), (1, 1), (1, 0)],
    [(3, 3), (2, 0), (3, 1), (2, 1), (1, 0)], [(3, 3), (3, 0), (2, 0), (3, 2), (0, 0)],
]

# the printed table repeats the second column verbatim
TABLE4 = [_TABLE4_K0, _TABLE4_K1, [list(f) for f in _TABLE4_K1]]

K5_COVER = [
    [[1, 2], [1, 3], [1, 4], [1, 5]],
    [[2, 3], [2, 4], [3, 5]],
    [[2, 5], [3, 4], [4, 5]],
]


def _dunce_hat_faces():
    """Triangulated dunce hat: a 9-gon disk whose rim is glued 1-2-3 thrice.

    Contractible realization, yet no subdivision admits a one-piece
    categorical cover; handy as a subdivision stress fixture.
    """
    rim = [1, 2, 3, 1, 2, 3, 1, 3, 2]
    inner = list(range(4, 13))
    center = 13
    faces = []
    for i in range(9):
        j = (i + 1) % 9
        faces.append([rim[i], rim[j], inner[i]])
        faces.append([rim[j], inner[i], inner[j]])
        faces.append([inner[i], inner[j], center])
    return faces


# --- catalog ----------------------------------------------------------------

_complex_builders = {}
_complex_cache = {}


def _register(name, builder):
    _complex_builders[name] = builder


def fixture_complex(name: str):
    """Fetch a named complex (cached; see :func:`fixture_names`)."""
    key = name.lower()
    if key not in _complex_builders:
        raise KeyError(f"no fixture complex named {name!r}")
    if key not in _complex_cache:
        _complex_cache[key] = _complex_builders[key]()
    return _complex_cache[key]


def fixture_names():
    return sorted(_complex_builders)


_register("point", lambda: from_maximal_faces([[0]]))
_register("edge", lambda: from_maximal_faces([[0, 1]]))
_register("c3", lambda: from_maximal_faces(C3_FACES))
_register("s2", lambda: from_maximal_faces(S2_FACES))
_register("k5", lambda: from_maximal_faces(K5_FACES))
_register("rp2", lambda: from_maximal_faces(RP2_FACES))
_register("rp3", lambda: from_maximal_faces([f for piece in TABLE2 for f in piece]))
_register("cp2", lambda: from_maximal_faces([f for piece in TABLE1 for f in piece]))
_register("figure1", lambda: from_maximal_faces(_dunce_hat_faces()))


def _product_fixture(name_a, name_b):
    K, _, _ = product(fixture_complex(name_a), fixture_complex(name_b))
    return K


_register("torus", lambda: _product_fixture("c3", "c3"))
_register("c3xs2", lambda: _product_fixture("c3", "s2"))
_register("s2xs2", lambda: _product_fixture("s2", "s2"))


_cover_tables = {
    "table1": ("cp2", TABLE1),
    "table2": ("rp3", TABLE2),
    "table3": ("c3xs2", TABLE3),
    "table4": ("s2xs2", TABLE4),
    "k5": ("k5", K5_COVER),
}


def fixture_cover(name: str) -> Cover:
    """Fetch a named cover; pieces are spanned by the printed maximal faces."""
    key = name.lower()
    if key not in _cover_tables:
        raise KeyError(f"no fixture cover named {name!r}")
    parent_name, table = _cover_tables[key]
    parent = fixture_complex(parent_name)
    return Cover.from_face_lists(parent, table)


def cover_names():
    return sorted(_cover_tables)


def rp2_loop() -> SimplicialMap:
    """A noncontractible loop C3 -> RP2 (its class generates H_1 = Z_2)."""
    c3 = fixture_complex("c3")
    rp2 = fixture_complex("rp2")
    # (0, 1, 2) is an empty triangle of this RP2; the test suite verifies
    # that its cycle is not a boundary.
    return SimplicialMap(c3, rp2, {0: 0, 1: 1, 2: 2})
