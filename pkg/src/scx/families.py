"""Explicit surface families whose isomorphism types multiply with size.

Two positive constructions and one documented dead end:

* strip surfaces: cap a triangle strip into a sphere, punch out 2g strip
  triangles in two blocks of g, and reconnect the holes through fresh
  three-vertex tubes according to a permutation.  Genus g with 14g + 8
  facets, and the permutation can be read back off the surface.
* grid surfaces: the same plan starting from a triangulated 1 x 4g grid.
  The holes are pairwise vertex disjoint there, so the reconnecting prisms
  need no fresh vertices at all: genus g with 20g facets on 8g + 2 vertices.
* quotient tori: triangulate a (2r + 2)-gon and glue its boundary by the
  usual torus identification.  The left edge of the polygon always maps to
  a loop, so every single pattern is rejected; the functions exist to make
  that failure checkable rather than folklore.

The kept strip triangles sit asymmetrically between the hole blocks (one
before, two between, none after), which kills the end-for-end symmetry and
lets recovery orient the strip.
"""

import math
from dataclasses import dataclass

from .census import iso
from .complexes import SimplicialComplex, _vkey, face_tuple
from .errors import InvalidComplexError, QuotientRejected


def _check_perm(perm):
    p = tuple(int(x) for x in perm)
    if not p or sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidComplexError("need a permutation of 1..g, got %r" % (perm,))
    return p


# -- triangle strips ----------------------------------------------------------


def triangle_strip(k):
    """Strip of k triangles {i, i+1, i+2} on the vertices 0..k+1."""
    if k < 1:
        raise InvalidComplexError("strip needs at least one triangle")
    return SimplicialComplex([(i, i + 1, i + 2) for i in range(k)])


def strip_sphere(g):
    """Sphere with 4g + 8 facets: a (2g+3)-strip plus a cone over its rim."""
    if g < 1:
        raise InvalidComplexError("genus must be >= 1")
    strip = triangle_strip(2 * g + 3)
    return strip.cone(apex=2 * g + 5).boundary()


def _oriented_cycle(facet, sign):
    x, y, z = facet
    return (x, y, z) if sign > 0 else (x, z, y)


def _tube(ring_a, mids, ring_b):
    # cylinder ring_a -> mids -> ring_b, all three listed as oriented cycles
    tris = []
    for R, S in ((ring_a, mids), (mids, ring_b)):
        for i in range(3):
            tris.append((R[i], R[(i + 1) % 3], S[(i + 1) % 3]))
            tris.append((R[i], S[i], S[(i + 1) % 3]))
    return tris


def strip_surface(perm):
    """Orientable genus-g surface with 14g + 8 facets from a permutation.

    Hole j in the first block tunnels to hole perm[j-1] in the second; the
    tube around hole j uses the fresh vertices 2g + 3j + 3 .. 2g + 3j + 5.
    """
    perm = _check_perm(perm)
    g = len(perm)
    sphere = strip_sphere(g)
    signs = sphere.orientation()
    holes_a = [face_tuple((j, j + 1, j + 2)) for j in range(1, g + 1)]
    holes_b = [face_tuple((g + 2 + i, g + 3 + i, g + 4 + i)) for i in range(1, g + 1)]
    removed = set(holes_a) | set(holes_b)
    tris = [F for F in sphere.facets if F not in removed]
    for j in range(1, g + 1):
        A = holes_a[j - 1]
        B = holes_b[perm[j - 1] - 1]
        mids = tuple(2 * g + 6 + 3 * (j - 1) + t for t in range(3))
        ca = _oriented_cycle(A, signs[A])
        cb = _oriented_cycle(B, signs[B])
        tris.extend(_tube(ca, mids, tuple(reversed(cb))))
    return SimplicialComplex(tris)


def _walk_strip_order(start, L, nbrs, ldeg):
    # the strip vertices induce the square of a path; recover the path order
    first = sorted(nbrs[start] & L, key=_vkey)
    if len(first) != 2:
        return None
    by_deg = {ldeg[v]: v for v in first}
    # the second and third vertices along the path have degrees 3 and 4
    if set(by_deg) != {3, 4}:
        return None
    order = [start, by_deg[3], [v for v in first if v != by_deg[3]][0]]
    used = set(order)
    while len(order) < len(L):
        cand = (nbrs[order[-2]] & nbrs[order[-1]] & L) - used
        if len(cand) != 1:
            return None
        nxt = cand.pop()
        order.append(nxt)
        used.add(nxt)
    return order


def _mid_rings(M, nbrs, mids):
    rings = []
    seen = set()
    for v in sorted(mids, key=_vkey):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in nbrs[u] & mids:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        if len(comp) != 3:
            return None
        a, b, c = sorted(comp, key=_vkey)
        if not (b in nbrs[a] and c in nbrs[a] and c in nbrs[b]):
            return None
        seen |= comp
        rings.append((a, b, c))
    return rings


def _decode_apex(M, nbrs, c, g):
    L = nbrs[c]
    if len(L) != 2 * g + 5:
        return None
    mids = set(M.vertices) - L - {c}
    if len(mids) != 3 * g:
        return None
    rings = _mid_rings(M, nbrs, mids)
    if rings is None:
        return None
    ldeg = {v: len(nbrs[v] & L) for v in L}
    ends = [v for v in sorted(L, key=_vkey) if ldeg[v] == 2]
    if len(ends) != 2:
        return None
    for start in ends:
        order = _walk_strip_order(start, L, nbrs, ldeg)
        if order is None:
            continue
        pos = {v: i for i, v in enumerate(order)}
        a_starts = {}
        ok = True
        for R in rings:
            touched = set()
            for m in R:
                touched |= nbrs[m]
            touched -= set(R)
            touched -= {c}
            if len(touched) != 6 or not touched <= L:
                ok = False
                break
            ps = sorted(pos[v] for v in touched)
            if ps[0] + 2 != ps[2] or ps[3] + 2 != ps[5] or \
               ps[0] + 1 != ps[1] or ps[3] + 1 != ps[4]:
                ok = False
                break
            a_starts[ps[0]] = ps[3]
        if not ok:
            continue
        if sorted(a_starts) != list(range(1, g + 1)):
            continue
        if sorted(a_starts.values()) != list(range(g + 3, 2 * g + 3)):
            continue
        return tuple(a_starts[j] - (g + 2) for j in range(1, g + 1))
    return None


def recover_strip_permutation(complex):
    """Read the permutation back off a strip surface, labels irrelevant.

    The apex is the only vertex whose link is a long cycle missing the
    tube interiors; every guess is cross-checked by rebuilding the surface
    and demanding an isomorphism, so a wrong decode cannot be returned.
    """
    n = len(complex.facets)
    g, rem = divmod(n - 8, 14)
    if g < 1 or rem != 0:
        raise InvalidComplexError("facet count %d is not 14g + 8" % n)
    nbrs = {v: set() for v in complex.vertices}
    for a, b in complex.faces(1):
        nbrs[a].add(b)
        nbrs[b].add(a)
    candidates = sorted(complex.vertices,
                        key=lambda v: (-len(nbrs[v]), _vkey(v)))
    for c in candidates:
        perm = _decode_apex(complex, nbrs, c, g)
        if perm is None:
            continue
        if iso(strip_surface(perm), complex) is not None:
            return perm
    raise InvalidComplexError("complex is not a strip surface")


# -- grid surfaces ------------------------------------------------------------


def grid_disk(g):
    """Triangulated 1 x 4g grid missing one corner triangle: 8g - 1 facets.

    Top vertices are 0..4g left to right, bottom vertices 4g+1..8g+1; the
    diagonals flip direction halfway along and the last lower corner is cut,
    which also drops the bottom-right vertex.
    """
    if g < 1:
        raise InvalidComplexError("genus must be >= 1")

    def t(j):
        return j

    def b(j):
        return 4 * g + 1 + j

    tris = []
    for k in range(1, 4 * g + 1):
        if k <= 2 * g:
            tris.append((t(k - 1), b(k - 1), b(k)))
            tris.append((t(k - 1), t(k), b(k)))
        else:
            tris.append((t(k - 1), t(k), b(k - 1)))
            tris.append((t(k), b(k - 1), b(k)))
    tris.pop()  # the corner triangle (t_{4g}, b_{4g-1}, b_{4g})
    return SimplicialComplex(tris)


def grid_sphere(g):
    """Sphere with 16g facets: the grid disk plus a cone over its rim."""
    disk = grid_disk(g)
    return disk.cone(apex=8 * g + 1).boundary()


def _grid_holes(g):
    def t(j):
        return j

    def b(j):
        return 4 * g + 1 + j

    # hole j of the first block sits in square 2j-1, leftmost corner first;
    # hole i of the second block sits in square 2g+2i, rightmost corner first
    first = [(t(2 * j - 2), t(2 * j - 1), b(2 * j - 1)) for j in range(1, g + 1)]
    second = [(t(2 * g + 2 * i), t(2 * g + 2 * i - 1), b(2 * g + 2 * i - 1))
              for i in range(1, g + 1)]
    return first, second


def _quad(a, b, c, d):
    # cyclic quad a-b-c-d split along the diagonal at its least corner
    m = min((a, b, c, d), key=_vkey)
    if m in (a, c):
        return [(a, b, c), (a, c, d)]
    return [(b, c, d), (b, d, a)]


def _prism(tri1, tri2):
    p0, p1, p2 = tri1
    q0, q1, q2 = tri2
    tris = []
    tris.extend(_quad(p0, p1, q1, q0))
    tris.extend(_quad(p1, p2, q2, q1))
    tris.extend(_quad(p2, p0, q0, q2))
    return tris


def grid_surface(perm):
    """Orientable genus-g surface with 20g facets on 8g + 2 vertices.

    Because the punched holes share no vertices, each pair is joined by a
    bare six-triangle prism between the matched hole corners.
    """
    perm = _check_perm(perm)
    g = len(perm)
    sphere = grid_sphere(g)
    first, second = _grid_holes(g)
    removed = {face_tuple(h) for h in first} | {face_tuple(h) for h in second}
    tris = [F for F in sphere.facets if F not in removed]
    for j in range(1, g + 1):
        tris.extend(_prism(first[j - 1], second[perm[j - 1] - 1]))
    return SimplicialComplex(tris)


# -- polygon triangulations and the torus quotient ----------------------------


def polygon_triangulations(n):
    """All triangulations of a convex n-gon on the cyclic labels 0..n-1."""
    if n < 3:
        raise InvalidComplexError("a polygon needs at least 3 vertices")

    def rec(i, j):
        if j - i < 2:
            yield ()
            return
        for k in range(i + 1, j):
            for left in rec(i, k):
                for right in rec(k, j):
                    yield ((i, k, j),) + left + right

    yield from rec(0, n - 1)


def dyck_words(length):
    """All balanced 1/0 words of the given length, lexicographically."""
    if length % 2:
        raise InvalidComplexError("balanced words have even length")

    def rec(prefix, opens, closes):
        if opens + closes == length:
            yield "".join(prefix)
            return
        if closes < opens:
            prefix.append("0")
            yield from rec(prefix, opens, closes + 1)
            prefix.pop()
        if opens < length // 2:
            prefix.append("1")
            yield from rec(prefix, opens + 1, closes)
            prefix.pop()

    yield from rec([], 0, 0)


def triangulation_from_pattern(n, pattern):
    """Decode a balanced word of length 2(n-2) into an n-gon triangulation.

    The word is the preorder walk of the diagonal tree: a triangle on the
    root edge (i, j) with apex k is written 1, then the left part over
    (i, k), then 0, then the right part over (k, j).
    """
    if len(pattern) != 2 * (n - 2) or set(pattern) - {"0", "1"}:
        raise InvalidComplexError("pattern must be a 1/0 word of length %d"
                                  % (2 * (n - 2)))

    def matching(word):
        depth = 0
        for idx, ch in enumerate(word):
            depth += 1 if ch == "1" else -1
            if depth == 0:
                return idx
        raise InvalidComplexError("pattern is not balanced")

    def rec(i, j, word):
        if not word:
            if j != i + 1:
                raise InvalidComplexError("pattern is not balanced")
            return ()
        if word[0] != "1":
            raise InvalidComplexError("pattern is not balanced")
        cut = matching(word)
        left = word[1:cut]
        right = word[cut + 1:]
        k = i + 1 + len(left) // 2
        if k >= j:
            raise InvalidComplexError("pattern is not balanced")
        return ((i, k, j),) + rec(i, k, left) + rec(k, j, right)

    return rec(0, n - 1, pattern)


def torus_from_pattern(r, pattern):
    """Attempt the torus quotient of a triangulated (2r + 2)-gon.

    The polygon rim reads u_0 .. u_r along the bottom and back along the
    top, and the quotient identifies u_i with w_i and both ends of each
    path with each other.  The left edge (u_0, w_0) then joins two
    identified vertices, so the attempt is rejected for every pattern;
    the exception says which triangle degenerated first.
    """
    if r < 2:
        raise InvalidComplexError("need r >= 2")
    n = 2 * r + 2
    tris = triangulation_from_pattern(n, pattern)

    def cls(p):
        i = p if p <= r else 2 * r + 1 - p
        return 0 if i == r else i

    glued = []
    images = {}
    for tri in tris:
        img = tuple(cls(p) for p in tri)
        if len(set(img)) < 3:
            raise QuotientRejected(
                "triangle %r degenerates to %r under the gluing"
                % (tri, tuple(sorted(set(img)))))
        f = face_tuple(img)
        if f in images:
            raise QuotientRejected(
                "triangles %r and %r glue to the same image %r"
                % (images[f], tri, f))
        images[f] = tri
        glued.append(f)
    quotient = SimplicialComplex(glued)
    sc = quotient.classify_surface()
    if sc.kind != "closed-surface":
        raise QuotientRejected("quotient is %s, not a closed surface" % sc.kind)
    return quotient


def count_torus_outcomes(r):
    """(patterns tried, quotients accepted) over every pattern for this r."""
    total = 0
    accepted = 0
    for word in dyck_words(4 * r):
        total += 1
        try:
            torus_from_pattern(r, word)
            accepted += 1
        except QuotientRejected:
            pass
    return total, accepted


# -- headline numbers ----------------------------------------------------------


@dataclass(frozen=True)
class LowerBoundRow:
    family: str
    parameter: int
    n_facets: int
    n_types: int


def lower_bound_table(max_g=3, max_r=4):
    """Facet counts against how many distinct surfaces each family yields.

    Strip and grid families give one surface per permutation (g! of them,
    pairwise nonisomorphic; the tests check that for small g), all of genus
    g.  The torus quotients contribute nothing because every pattern is
    rejected, which is the point of listing them.
    """
    rows = []
    for g in range(1, max_g + 1):
        rows.append(LowerBoundRow("strip", g, 14 * g + 8, math.factorial(g)))
    for g in range(1, max_g + 1):
        rows.append(LowerBoundRow("grid", g, 20 * g, math.factorial(g)))
    for r in range(2, max_r + 1):
        rows.append(LowerBoundRow("torus-quotient", r, 2 * r, 0))
    return rows
