"""Plain-text serialization for complexes and collapse certificates.

The complex format is line-oriented and strict:

    scx 1
    dim 2
    vertices 4
    facets 4
    0 1 2
    ...

Writing always renumbers vertices densely by first appearance in the sorted
facet list.  One renumbering pass is not idempotent (resorting the facets can
change which vertex appears first), so the pass is iterated until the facet
list stops changing; if the iteration ever cycles, the lexicographically
smallest state of the cycle is used.  Rewriting a written file is therefore
byte-identical.

Certificates use one line per step:

    remove 0 1 2            (at most once, first; endo-collapsible claims only)
    collapse 1,2 1,2,3      (free face, then its coface)
    claim endo-collapsible
    target 0 1              (collapse-to claims only, one facet per line)
"""

from .collapse import CollapsePair, CollapseSequence
from .complexes import SimplicialComplex, face_tuple
from .errors import InvalidComplexError, ScxFormatError

MAGIC = "scx 1"


def _relabel_once(facets):
    order = {}
    for F in facets:
        for v in F:
            if v not in order:
                order[v] = len(order)
    return tuple(sorted(tuple(sorted(order[v] for v in F)) for F in facets))


def canonical_facets(complex):
    """Dense int relabeling that is stable under being applied again."""
    cur = complex.facets
    seen = {}
    states = []
    while cur not in seen:
        seen[cur] = True
        states.append(cur)
        cur = _relabel_once(cur)
    if cur == states[-1]:
        return cur
    return min(states[states.index(cur):])


def complex_to_text(complex):
    facets = canonical_facets(complex)
    n_vertices = len({v for F in facets for v in F})
    dim = max((len(F) for F in facets), default=0) - 1
    lines = [MAGIC,
             "dim %d" % dim,
             "vertices %d" % n_vertices,
             "facets %d" % len(facets)]
    lines.extend(" ".join(str(v) for v in F) for F in facets)
    return "\n".join(lines) + "\n"


def _split_strict(line, line_no):
    parts = line.split(" ")
    if any(p == "" for p in parts):
        raise ScxFormatError("malformed spacing", line_no)
    return parts


def _int_fields(parts, line_no):
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ScxFormatError("expected an integer, got %r" % p, line_no)
    return out


def _header_value(lines, idx, keyword):
    if idx >= len(lines):
        raise ScxFormatError("missing %r header" % keyword, idx + 1)
    parts = _split_strict(lines[idx], idx + 1)
    if len(parts) != 2 or parts[0] != keyword:
        raise ScxFormatError("expected %r header" % keyword, idx + 1)
    return _int_fields(parts[1:], idx + 1)[0]


def complex_from_text(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise ScxFormatError("first line must be %r" % MAGIC, 1)
    dim = _header_value(lines, 1, "dim")
    n_vertices = _header_value(lines, 2, "vertices")
    n_facets = _header_value(lines, 3, "facets")
    if len(lines) != 4 + n_facets:
        raise ScxFormatError("expected %d facet lines, found %d"
                             % (n_facets, len(lines) - 4), len(lines))
    facets = []
    for k in range(n_facets):
        line_no = 5 + k
        vs = _int_fields(_split_strict(lines[4 + k], line_no), line_no)
        if vs != sorted(vs) or len(set(vs)) != len(vs):
            raise ScxFormatError("facet vertices must be strictly increasing",
                                 line_no)
        f = tuple(vs)
        if facets and f <= facets[-1]:
            raise ScxFormatError("facets must be listed in increasing order",
                                 line_no)
        for j, g in enumerate(facets):
            if set(g) < set(f) or set(f) < set(g):
                raise ScxFormatError("facet is nested with the one on line %d"
                                     % (5 + j), line_no)
        facets.append(f)
    used = {v for F in facets for v in F}
    if used != set(range(n_vertices)):
        raise ScxFormatError("vertex labels must be exactly 0..%d"
                             % (n_vertices - 1), 4)
    got_dim = max((len(F) for F in facets), default=0) - 1
    if got_dim != dim:
        raise ScxFormatError("declared dim %d but facets have dim %d"
                             % (dim, got_dim), 2)
    return SimplicialComplex(facets)


def write_complex(complex, path):
    with open(path, "w") as fh:
        fh.write(complex_to_text(complex))


def read_complex(path):
    with open(path) as fh:
        return complex_from_text(fh.read())


# -- certificates -------------------------------------------------------------


def _int_face_str(face, joiner):
    for v in face:
        if not isinstance(v, int):
            raise ScxFormatError(
                "certificate serialization needs integer vertex labels; "
                "write the complex first to normalize it")
    return joiner.join(str(v) for v in face)


def certificate_to_text(cert):
    lines = []
    if cert.removed_facet is not None:
        lines.append("remove " + _int_face_str(cert.removed_facet, " "))
    for p in cert.pairs:
        lines.append("collapse %s %s" % (_int_face_str(p.free, ","),
                                         _int_face_str(p.coface, ",")))
    lines.append("claim " + cert.claim)
    if cert.claim == "collapse-to":
        if cert.target_facets is None:
            raise ScxFormatError("collapse-to certificate without a target")
        for F in cert.target_facets:
            lines.append("target " + _int_face_str(F, " "))
    return "\n".join(lines) + "\n"


def _parse_face(token, line_no, sep):
    vs = _int_fields(token.split(sep), line_no)
    try:
        return face_tuple(vs)
    except InvalidComplexError as e:
        raise ScxFormatError(str(e), line_no)


def certificate_from_text(text, complex):
    """Parse a certificate against the complex it talks about."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    removed = None
    pairs = []
    claim = None
    targets = []
    for i, line in enumerate(lines):
        line_no = i + 1
        parts = _split_strict(line, line_no)
        if parts[0] == "remove":
            if removed is not None or pairs or claim:
                raise ScxFormatError("remove must be the first line", line_no)
            removed = face_tuple(_int_fields(parts[1:], line_no))
        elif parts[0] == "collapse":
            if claim is not None:
                raise ScxFormatError("collapse after claim", line_no)
            if len(parts) != 3:
                raise ScxFormatError("collapse needs two faces", line_no)
            pairs.append(CollapsePair(free=_parse_face(parts[1], line_no, ","),
                                      coface=_parse_face(parts[2], line_no, ",")))
        elif parts[0] == "claim":
            if claim is not None:
                raise ScxFormatError("duplicate claim", line_no)
            if len(parts) != 2:
                raise ScxFormatError("claim needs one word", line_no)
            claim = parts[1]
        elif parts[0] == "target":
            if claim != "collapse-to":
                raise ScxFormatError("target lines only follow a collapse-to claim",
                                     line_no)
            targets.append(face_tuple(_int_fields(parts[1:], line_no)))
        else:
            raise ScxFormatError("unknown directive %r" % parts[0], line_no)
    if claim is None:
        raise ScxFormatError("certificate has no claim line", len(lines) or 1)
    target_facets = tuple(targets) if targets else None
    if claim == "endo-collapsible":
        # the goal of an endo collapse is the boundary, which is implied by
        # the complex rather than stored in the file
        try:
            bd = complex.boundary()
            target_facets = bd.facets if bd.facets else None
        except InvalidComplexError:
            target_facets = None
    return CollapseSequence(
        initial_facets=complex.facets,
        removed_facet=removed,
        pairs=tuple(pairs),
        claim=claim,
        target_facets=target_facets,
    )


def write_certificate(cert, path):
    with open(path, "w") as fh:
        fh.write(certificate_to_text(cert))


def read_certificate(path, complex):
    with open(path) as fh:
        return certificate_from_text(fh.read(), complex)
