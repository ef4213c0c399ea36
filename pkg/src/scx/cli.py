"""Command line front end.

Every subcommand reads and writes the plain text complex format.  Exit
codes are uniform: 0 is success or a positive verdict, 1 a negative
verdict, 2 an unknown verdict or an exhausted search budget, 3 a usage or
format problem.  Output depends only on the inputs and flags, never on
timing, so identical invocations produce identical bytes.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .census import census, derived_count_bound, iso, manifold_count_bound
from .collapse import (DEFAULT_MAX_NODES, DEFAULT_SEEDS, collapses_to,
                       discrete_morse_vector, is_collapsible,
                       is_endo_collapsible, sd_endo_collapsibility_report)
from .complexes import (SimplicialComplex, face_tuple, full_simplex,
                        octahedron, simplex_boundary)
from .errors import (BudgetExceededError, InvalidComplexError,
                     NotDerivedSubdivisionError, QuotientRejected,
                     ScxFormatError)
from .families import (grid_surface, lower_bound_table, strip_surface,
                       torus_from_pattern)
from .reconstruct import reconstruct
from .scxio import (certificate_to_text, complex_to_text, read_certificate,
                    read_complex)
from .subdivision import DEFAULT_MAX_FACETS, derived_neighborhood, sd_k
from .verify import verify_certificate


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_faces(text):
    """Inline subcomplex syntax: facets joined by commas, vertices by spaces."""
    facets = []
    for chunk in text.split(","):
        parts = chunk.split()
        if not parts:
            raise ScxFormatError("empty facet in %r" % text)
        try:
            facets.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ScxFormatError("non-integer vertex in %r" % chunk)
    return SimplicialComplex(facets)


def _verdict_exit(res):
    print("verdict %s" % res.verdict)
    print("reason %s" % res.reason)
    return {"yes": 0, "no": 1}.get(res.verdict, 2)


def _write_cert(res, out):
    if out and res.certificate is not None:
        _emit(certificate_to_text(res.certificate), out)


def _parallel_tries(run_one, tries, jobs):
    """Run seeds 0..tries-1 in a pool; report the first success in seed order."""
    seeds = list(range(tries))
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        results = list(ex.map(run_one, seeds))
    for res in results:
        if res.verdict == "yes":
            return res
    for res in results:
        if res.verdict == "no":
            return res
    return results[-1]


def cmd_validate(args):
    C = read_complex(args.file)
    print("dim %d" % C.dim)
    print("vertices %d" % C.n_vertices)
    print("facets %d" % len(C.facets))
    print("pure %s" % ("yes" if C.is_pure() else "no"))
    dg = C.dual_graph()
    print("pseudomanifold %s" % ("yes" if dg.pseudomanifold else "no"))
    print("connected %s" % ("yes" if dg.connected else "no"))
    print("euler %d" % C.euler_characteristic())
    try:
        sc = C.classify_surface()
        line = "surface %s" % sc.kind
        if sc.kind == "closed-surface":
            line += " orientable=%s genus=%s" % (
                "yes" if sc.orientable else "no",
                sc.genus if sc.orientable else sc.cross_caps)
        elif sc.kind == "surface-with-boundary":
            line += " genus=%s boundary=%d" % (sc.genus, sc.boundary_components)
        print(line)
    except InvalidComplexError:
        print("surface not-applicable")
    return 0


def cmd_sd(args):
    C = read_complex(args.file)
    out = sd_k(C, args.k, max_facets=args.budget).complex
    _emit(complex_to_text(out), args.output)
    return 0


def cmd_neighborhood(args):
    C = read_complex(args.file)
    sub = _parse_faces(args.sub)
    nb = derived_neighborhood(C, sub, k=args.k, max_facets=args.budget)
    _emit(complex_to_text(nb), args.output)
    return 0


def cmd_collapse(args):
    C = read_complex(args.file)
    target = _parse_faces(args.target) if args.target else None

    def run(seed, tries):
        if target is not None:
            return collapses_to(C, target, strategy=args.strategy,
                                seed=seed, seeds=tries, max_nodes=args.budget)
        return is_collapsible(C, strategy=args.strategy, seed=seed,
                              seeds=tries, max_nodes=args.budget)

    if args.jobs > 1 and args.strategy == "greedy":
        res = _parallel_tries(lambda s: run(args.seed + s, 1),
                              args.tries, args.jobs)
    else:
        res = run(args.seed, args.tries)
    _write_cert(res, args.cert)
    return _verdict_exit(res)


def cmd_endo(args):
    C = read_complex(args.file)
    if args.report:
        rep = sd_endo_collapsibility_report(C, strategy=args.strategy,
                                            seed=args.seed, seeds=args.tries,
                                            max_nodes=args.budget)
        for face, verdict, reason in rep.face_verdicts:
            print("link %s %s (%s)" % (" ".join(str(v) for v in face),
                                       verdict, reason))
        print("hypotheses %s" % rep.hypotheses_met)
        return _verdict_exit(rep.conclusion)
    facet = face_tuple(int(v) for v in args.facet.split()) if args.facet else None

    def run(seed, tries):
        return is_endo_collapsible(C, facet=facet, strategy=args.strategy,
                                   seed=seed, seeds=tries,
                                   max_nodes=args.budget)

    if args.jobs > 1 and args.strategy == "greedy":
        res = _parallel_tries(lambda s: run(args.seed + s, 1),
                              args.tries, args.jobs)
    else:
        res = run(args.seed, args.tries)
    _write_cert(res, args.cert)
    return _verdict_exit(res)


def cmd_morse(args):
    C = read_complex(args.file)
    vec = discrete_morse_vector(C, attempts=args.attempts, seed=args.seed)
    print("morse %s" % " ".join(str(c) for c in vec))
    return 0


def cmd_reconstruct(args):
    C = read_complex(args.file)
    try:
        T = reconstruct(C)
    except NotDerivedSubdivisionError as e:
        print("not a derived subdivision: %s" % e, file=sys.stderr)
        return 1
    _emit(complex_to_text(T), args.output)
    return 0


def cmd_generate(args):
    if args.family == "strip":
        C = strip_surface(tuple(int(v) for v in args.perm.split()))
    elif args.family == "grid":
        C = grid_surface(tuple(int(v) for v in args.perm.split()))
    elif args.family == "torus":
        try:
            C = torus_from_pattern(args.r, args.pattern)
        except QuotientRejected as e:
            print("rejected: %s" % e, file=sys.stderr)
            return 1
    elif args.family == "octahedron":
        C = octahedron()
    elif args.family == "simplex":
        C = full_simplex(args.d)
    else:
        C = simplex_boundary(args.d)
    _emit(complex_to_text(C), args.output)
    return 0


def cmd_iso(args):
    a = read_complex(args.file)
    b = read_complex(args.other)
    cert = iso(a, b, max_nodes=args.budget)
    if cert is None:
        print("not isomorphic")
        return 1
    print("isomorphic")
    for v, w in cert.mapping:
        print("%s -> %s" % (v, w))
    return 0


def cmd_census(args):
    rows = census(args.max_vertices, seeds=args.tries, max_nodes=args.budget)
    print("vertices orientable genus count endo min_facets")
    for r in rows:
        print("%d %s %d %d %s %d" % (r.n_vertices,
                                     "yes" if r.orientable else "no",
                                     r.genus, r.count, r.endo, r.min_facets))
    return 0


def cmd_verify_cert(args):
    C = read_complex(args.file)
    cert = read_certificate(args.cert, C)
    ok, message = verify_certificate(cert, C)
    if ok:
        print("certificate ok")
        return 0
    print("certificate rejected: %s" % message)
    return 1


def cmd_bounds(args):
    print("dim %d facets %d" % (args.d, args.facets))
    print("manifold-count-bound %d" % manifold_count_bound(args.d, args.facets))
    print("derived-count-bound %d" % derived_count_bound(args.d, args.facets))
    if args.table:
        print("family parameter facets types")
        for row in lower_bound_table():
            print("%s %d %d %d" % (row.family, row.parameter,
                                   row.n_facets, row.n_types))
    return 0


def _add_search_flags(p):
    p.add_argument("--strategy", default="greedy",
                   choices=["greedy", "lex", "exhaustive", "auto"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tries", type=int, default=DEFAULT_SEEDS,
                   help="number of greedy restarts")
    p.add_argument("--budget", type=int, default=DEFAULT_MAX_NODES,
                   help="search node budget")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for greedy restarts")
    p.add_argument("--cert", help="write the certificate here on success")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="scx",
        description="Inspect, subdivide, collapse and generate simplicial complexes.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="parse a complex and print a summary")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("sd", help="derived subdivision")
    p.add_argument("file")
    p.add_argument("-k", type=int, default=1, help="rounds")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--budget", type=int, default=DEFAULT_MAX_FACETS,
                   help="largest facet count to allow")
    p.set_defaults(func=cmd_sd)

    p = subs.add_parser("neighborhood",
                        help="derived neighborhood of a subcomplex")
    p.add_argument("file")
    p.add_argument("--sub", required=True,
                   help="subcomplex facets, e.g. '0 1 2, 2 3'")
    p.add_argument("-k", type=int, default=1, help="subdivision rounds")
    p.add_argument("-o", "--output")
    p.add_argument("--budget", type=int, default=DEFAULT_MAX_FACETS)
    p.set_defaults(func=cmd_neighborhood)

    p = subs.add_parser("collapse", help="collapsibility search")
    p.add_argument("file")
    p.add_argument("--target", help="collapse onto these facets instead of a point")
    _add_search_flags(p)
    p.set_defaults(func=cmd_collapse)

    p = subs.add_parser("endo", help="endo-collapsibility search")
    p.add_argument("file")
    p.add_argument("--facet", help="remove this facet, e.g. '0 1 2'")
    p.add_argument("--report", action="store_true",
                   help="per-face report over subdivided links")
    _add_search_flags(p)
    p.set_defaults(func=cmd_endo)

    p = subs.add_parser("morse", help="best discrete Morse vector found")
    p.add_argument("file")
    p.add_argument("--attempts", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_morse)

    p = subs.add_parser("reconstruct",
                        help="invert a derived subdivision if possible")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reconstruct)

    p = subs.add_parser("generate", help="builtin families and shapes")
    p.add_argument("family", choices=["strip", "grid", "torus", "octahedron",
                                      "simplex", "simplex-boundary"])
    p.add_argument("--perm", default="1",
                   help="permutation of 1..g, e.g. '2 1' (strip and grid)")
    p.add_argument("-r", type=int, default=2, help="torus polygon parameter")
    p.add_argument("--pattern", default="", help="torus triangulation pattern")
    p.add_argument("-d", type=int, default=2, help="simplex dimension")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("iso", help="isomorphism test between two complexes")
    p.add_argument("file")
    p.add_argument("other")
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_iso)

    p = subs.add_parser("census", help="closed surface census by vertex count")
    p.add_argument("-n", "--max-vertices", type=int, default=7)
    p.add_argument("--tries", type=int, default=16)
    p.add_argument("--budget", type=int, default=10 ** 5)
    p.set_defaults(func=cmd_census)

    p = subs.add_parser("verify-cert", help="replay a collapse certificate")
    p.add_argument("file")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify_cert)

    p = subs.add_parser("bounds", help="counting bounds for a facet budget")
    p.add_argument("-d", type=int, default=2)
    p.add_argument("-n", "--facets", type=int, default=20)
    p.add_argument("--table", action="store_true",
                   help="also print the family table")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 3
    try:
        return args.func(args)
    except ScxFormatError as e:
        print("format error: %s" % e, file=sys.stderr)
        return 3
    except InvalidComplexError as e:
        print("invalid input: %s" % e, file=sys.stderr)
        return 3
    except BudgetExceededError as e:
        print("budget exceeded: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print(str(e), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
