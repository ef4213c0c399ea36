"""Derived (order-complex) subdivision and derived neighborhoods.

The derived subdivision of a complex is the order complex of its face poset:
vertices are the faces, facets are the maximal chains.  A maximal chain inside
a facet F is a sequence of nested prefixes of an ordering of F, so F
contributes (dim F + 1)! facets and the subdivision of the whole complex has
sum_F (dim F + 1)! facets.  Chain vertices keep their face-of-the-base labels,
which is what lets neighborhoods and repeated rounds line up without any
renaming; normalize() flattens the labels when ints are wanted.
"""

import itertools
import math

from .complexes import SimplicialComplex, face_tuple, _fkey
from .errors import BudgetExceededError, InvalidComplexError

DEFAULT_MAX_FACETS = 10 ** 7


class Subdivision:
    """One round of derived subdivision with its carrier bookkeeping.

    base is the complex subdivided in the last round; rounds counts how many
    rounds produced `complex` in total.  carrier maps a face of `complex` to
    the smallest face of `base` containing it, which for a chain is just its
    top element.
    """

    def __init__(self, base, complex, rounds=1):
        self.base = base
        self.complex = complex
        self.rounds = rounds

    def carrier(self, face):
        f = face_tuple(face)
        if not self.complex.has_face(f):
            raise InvalidComplexError("%r is not a face of the subdivision" % (f,))
        if self.rounds == 0:
            return f
        return max(f, key=len)

    def table(self):
        """All (face, carrier) pairs, smallest faces first."""
        fs = sorted(self.complex.faces(), key=lambda f: (len(f), _fkey(f)))
        return [(f, self.carrier(f)) for f in fs]


def _predict_facets(complex):
    return sum(math.factorial(len(F)) for F in complex.facets)


def sd(complex, max_facets=DEFAULT_MAX_FACETS):
    """Derived subdivision, as a Subdivision object."""
    predicted = _predict_facets(complex)
    if predicted > max_facets:
        raise BudgetExceededError(
            "subdivision would have %d facets (budget %d)" % (predicted, max_facets),
            requested=predicted, budget=max_facets,
        )
    chains = []
    for F in complex.facets:
        for perm in itertools.permutations(F):
            chains.append(tuple(face_tuple(perm[:i + 1]) for i in range(len(perm))))
    return Subdivision(base=complex, complex=SimplicialComplex(chains), rounds=1)


def sd_k(complex, k, max_facets=DEFAULT_MAX_FACETS):
    """k rounds of derived subdivision; base of the result is round k-1."""
    if k < 0:
        raise InvalidComplexError("subdivision rounds must be >= 0")
    out = Subdivision(base=complex, complex=complex, rounds=0)
    for _ in range(k):
        nxt = sd(out.complex, max_facets=max_facets)
        out = Subdivision(base=out.complex, complex=nxt.complex, rounds=out.rounds + 1)
    return out


def derived_neighborhood(complex, sub, k=1, max_facets=DEFAULT_MAX_FACETS):
    """Closed union of the facets of sd^k(complex) meeting sd^k(sub).

    sub must be a subcomplex; its faces are faces of the ambient complex, so
    after k rounds its chain vertices are literally a subset of the ambient
    chain vertices and membership is plain label lookup.
    """
    if k < 1:
        raise InvalidComplexError("derived neighborhoods need at least one round")
    for F in sub.facets:
        if not complex.has_face(F):
            raise InvalidComplexError("%r is not a face of the ambient complex" % (F,))
    ambient = sd_k(complex, k, max_facets=max_facets).complex
    marked = set(sd_k(sub, k, max_facets=max_facets).complex.vertices)
    picked = [F for F in ambient.facets if marked & set(F)]
    return SimplicialComplex(picked)
