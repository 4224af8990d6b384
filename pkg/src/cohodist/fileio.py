"""Line-oriented text formats for complexes, covers and maps.

Complex files hold one maximal face per line, vertices comma-separated,
with ``#`` comments and an optional ``order:`` header fixing the vertex
order.  Pair labels (products) are serialized as quoted ``"a,b"`` tokens;
nested tuple labels (barycenters of product simplices) use parentheses
inside the quotes.  Cover files group face lines under ``piece <name>``
headers; map files hold ``u -> v`` lines.
"""

from .complexes import (
    Cover,
    SimplicialComplex,
    SimplicialMap,
    Subcomplex,
    from_maximal_faces,
)
from .errors import ParseError


# ---------------------------------------------------------------------------
# labels


def _label_token(label, top=True) -> str:
    if isinstance(label, tuple):
        inner = ",".join(_label_token(x, top=False) for x in label)
        return f'"{inner}"' if top else f"({inner})"
    return str(label)


def _split_top_level(text, sep=","):
    parts = []
    depth = 0
    quoted = False
    current = []
    for ch in text:
        if ch == '"':
            quoted = not quoted
            current.append(ch)
        elif not quoted and ch == "(":
            depth += 1
            current.append(ch)
        elif not quoted and ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parenthesis")
            current.append(ch)
        elif not quoted and depth == 0 and ch == sep:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if quoted or depth != 0:
        raise ValueError("unbalanced quote or parenthesis")
    parts.append("".join(current))
    return [p.strip() for p in parts]


def parse_label(token: str):
    """Inverse of the serializer: int, bare string, quoted or (...) tuple."""
    token = token.strip()
    if not token:
        raise ValueError("empty label")
    if token.startswith('"') and token.endswith('"') and len(token) >= 2:
        return tuple(parse_label(p) for p in _split_top_level(token[1:-1]))
    if token.startswith("(") and token.endswith(")"):
        return tuple(parse_label(p) for p in _split_top_level(token[1:-1]))
    try:
        return int(token)
    except ValueError:
        if any(ch in token for ch in ' \t",()'):
            raise ValueError(f"bad label {token!r}")
        return token


def _iter_content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


# ---------------------------------------------------------------------------
# complexes


def complex_to_text(K: SimplicialComplex, comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("order: " + " ".join(_label_token(v) for v in K.vertices))
    for f in K.maximal_faces:
        lines.append(",".join(_label_token(v) for v in f))
    return "\n".join(lines) + "\n"


def complex_from_text(text: str, require_connected: bool = True) -> SimplicialComplex:
    order = None
    faces = []
    for lineno, line in _iter_content_lines(text):
        if line.startswith("order:"):
            if faces:
                raise ParseError("order header must precede faces", lineno)
            try:
                order = [parse_label(tok) for tok in line[len("order:"):].split()]
            except ValueError as e:
                raise ParseError(str(e), lineno)
            continue
        try:
            faces.append([parse_label(tok) for tok in _split_top_level(line)])
        except ValueError as e:
            raise ParseError(str(e), lineno)
    if not faces:
        raise ParseError("no faces found", None)
    try:
        return from_maximal_faces(faces, order=order, require_connected=require_connected)
    except (ValueError, KeyError) as e:
        raise ParseError(str(e), None)


def write_complex(K: SimplicialComplex, path, comment: str = ""):
    with open(path, "w") as fh:
        fh.write(complex_to_text(K, comment))


def read_complex(path, require_connected: bool = True) -> SimplicialComplex:
    with open(path) as fh:
        return complex_from_text(fh.read(), require_connected)


# ---------------------------------------------------------------------------
# covers


def cover_to_text(cover: Cover) -> str:
    lines = []
    for i, piece in enumerate(cover.pieces):
        lines.append(f"piece {piece.name or f'K{i}'}")
        for f in piece.complex.maximal_faces:
            lines.append(",".join(_label_token(v) for v in f))
    return "\n".join(lines) + "\n"


def cover_from_text(text: str, parent: SimplicialComplex) -> Cover:
    pieces = []
    name = None
    faces = []

    def flush(lineno):
        nonlocal name, faces
        if name is not None:
            if not faces:
                raise ParseError(f"piece {name!r} has no faces", lineno)
            pieces.append(Subcomplex.spanned_by(parent, faces, name=name))
        name, faces = None, []

    last = None
    for lineno, line in _iter_content_lines(text):
        last = lineno
        if line.startswith("piece"):
            flush(lineno)
            name = line[len("piece"):].strip() or f"K{len(pieces)}"
            continue
        if name is None:
            raise ParseError("face line before any 'piece' header", lineno)
        try:
            faces.append([parse_label(tok) for tok in _split_top_level(line)])
        except ValueError as e:
            raise ParseError(str(e), lineno)
    flush(last)
    if not pieces:
        raise ParseError("no pieces found", None)
    return Cover(parent, pieces)


def write_cover(cover: Cover, path):
    with open(path, "w") as fh:
        fh.write(cover_to_text(cover))


def read_cover(path, parent: SimplicialComplex) -> Cover:
    with open(path) as fh:
        return cover_from_text(fh.read(), parent)


# ---------------------------------------------------------------------------
# maps


def map_to_text(phi: SimplicialMap) -> str:
    lines = []
    for v in phi.source.vertices:
        lines.append(f"{_label_token(v)} -> {_label_token(phi.assignment[v])}")
    return "\n".join(lines) + "\n"


def map_from_text(text: str, source: SimplicialComplex,
                  target: SimplicialComplex) -> SimplicialMap:
    assignment = {}
    for lineno, line in _iter_content_lines(text):
        if "->" not in line:
            raise ParseError("expected 'u -> v'", lineno)
        left, right = line.split("->", 1)
        try:
            assignment[parse_label(left)] = parse_label(right)
        except ValueError as e:
            raise ParseError(str(e), lineno)
    try:
        return SimplicialMap(source, target, assignment)
    except Exception as e:
        raise ParseError(str(e), None)


def write_map(phi: SimplicialMap, path):
    with open(path, "w") as fh:
        fh.write(map_to_text(phi))


def read_map(path, source, target) -> SimplicialMap:
    with open(path) as fh:
        return map_from_text(fh.read(), source, target)
