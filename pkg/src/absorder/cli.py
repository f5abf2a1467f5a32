"""Command-line surface: order tests, the signed Euler-characteristic table,
Hasse-diagram export, order-complex homology, and constructibility
certificates.

Exit codes: 0 success; 1 mathematical disagreement or verification failure;
2 usage error (including requests past a resource cap that were rejected up
front); 3 a resource cap stopped an operation midway.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificates import (
    DEFAULT_MATERIALIZE_CAP,
    build_certificate,
    certificate_json,
    verify_certificate,
)
from .complexes import DEFAULT_SHELLING_FACET_CAP, SimplicialComplex, order_complex
from .errors import (
    DegreeMismatchError,
    PermutationParseError,
    PreconditionError,
    ResourceCapError,
)
from .homology import is_cohen_macaulay_Z, reduced_homology
from .mobius import table1_value
from .order import (
    DEFAULT_POSET_CAP,
    RSpec,
    build_Pn,
    hasse_export,
    leq_length,
    leq_noncrossing,
)
from .perms import parse_permutation

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_HOMOLOGY_CAP = 5


def _usage(message: str) -> int:
    print("error: %s" % message, file=sys.stderr)
    return EXIT_USAGE


def _write_output(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ----- order ------------------------------------------------------------------


def cmd_order(args) -> int:
    try:
        u = parse_permutation(args.u, args.n)
        v = parse_permutation(args.v, args.n)
    except PermutationParseError as exc:
        return _usage(str(exc))
    if u.n != v.n:
        return _usage(
            "degree mismatch: %d vs %d (pass --n to fix a common degree)"
            % (u.n, v.n)
        )
    results = {}
    if args.method in ("length", "both"):
        results["length"] = leq_length(u, v)
    if args.method in ("noncrossing", "both"):
        results["noncrossing"] = leq_noncrossing(u, v)
    print("u = %s" % u.cycle_str())
    print("v = %s" % v.cycle_str())
    for name in ("length", "noncrossing"):
        if name in results:
            print("%s: %s" % (name, "true" if results[name] else "false"))
    if args.method == "both":
        if results["length"] == results["noncrossing"]:
            print("agreement: yes")
        else:
            print("agreement: NO")
            return EXIT_DISAGREEMENT
    return EXIT_OK


# ----- table1 -----------------------------------------------------------------


def cmd_table1(args) -> int:
    if args.max < 1:
        return _usage("--max must be at least 1")
    methods = ["mobius", "gf"] if args.method == "both" else [args.method]
    rows = []
    for n in range(1, args.max + 1):
        row = {"n": n}
        for method in methods:
            row[method] = table1_value(n, method=method)
        rows.append(row)
    disagreements = [
        row["n"]
        for row in rows
        if len(methods) == 2 and row["mobius"] != row["gf"]
    ]
    if args.format == "json":
        print(json.dumps({"method": args.method, "rows": rows}, indent=2))
    else:
        headers = ["n"] + methods
        table = [[str(row[h]) for h in headers] for row in rows]
        widths = [
            max([len(h)] + [len(line[c]) for line in table])
            for c, h in enumerate(headers)
        ]
        print("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
        for line in table:
            print("  ".join(s.rjust(w) for s, w in zip(line, widths)))
    if disagreements:
        print(
            "disagreement between routes at n = %s"
            % ", ".join(map(str, disagreements)),
            file=sys.stderr,
        )
        return EXIT_DISAGREEMENT
    return EXIT_OK


# ----- hasse ------------------------------------------------------------------


def cmd_hasse(args) -> int:
    if args.n < 1:
        return _usage("n must be at least 1")
    if args.n > args.cap:
        return _usage(
            "P_%d exceeds the poset cap %d; raise --cap to insist"
            % (args.n, args.cap)
        )
    out = hasse_export(args.n, fmt=args.format, cap=args.cap)
    if args.format == "json":
        out = json.dumps(out, indent=2) + "\n"
    _write_output(out, args.output)
    return EXIT_OK


# ----- homology ---------------------------------------------------------------


def _proper_part_complex(n: int) -> SimplicialComplex:
    """Order complex of P_n minus its minimum (its proper part once a top
    is adjoined)."""
    if n == 1:
        return SimplicialComplex([])
    P = build_Pn(n)
    keep = [i for i, w in enumerate(P.elements) if w.reflection_length() > 0]
    return order_complex(P.restrict(keep))


def _homology_cells(groups) -> list[dict]:
    return [
        {"i": i - 1, "rank": g.free_rank, "torsion": list(g.torsion)}
        for i, g in enumerate(groups)
    ]


def cmd_homology(args) -> int:
    if args.n < 1:
        return _usage("n must be at least 1")
    if args.n > args.cap:
        return _usage(
            "homology of Delta(P~_%d) exceeds the cap %d; raise --cap to insist"
            % (args.n, args.cap)
        )
    K = _proper_part_complex(args.n)
    groups = reduced_homology(K)
    payload = {
        "n": args.n,
        "f_vector": list(K.f_vector()),
        "dimension": K.dim,
        "homology": _homology_cells(groups),
    }
    exit_code = EXIT_OK
    cm = None
    if args.cm:
        cm = is_cohen_macaulay_Z(K, jobs=args.jobs)
        payload["cohen_macaulay_Z"] = {
            "ok": cm.ok,
            "witness_face": (
                sorted(map(str, cm.witness_face))
                if cm.witness_face is not None
                else None
            ),
            "witness_dim": cm.witness_dim,
            "witness_group": str(cm.witness_group) if cm.witness_group else None,
        }
        if not cm.ok:
            exit_code = EXIT_DISAGREEMENT
    links = None
    if args.links:
        links = []
        for face in K.faces(0):
            (i,) = face
            vertex = K.labels[i] if K.labels is not None else i
            link = K.link(face)
            links.append(
                {
                    "vertex": str(vertex),
                    "homology": _homology_cells(reduced_homology(link)),
                }
            )
        payload["links"] = links
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return exit_code
    print("Delta(P~_%d): f-vector %s, dimension %d" % (
        args.n,
        tuple(payload["f_vector"]),
        payload["dimension"],
    ))
    for i, group in enumerate(groups):
        print("H~_%d = %s" % (i - 1, group))
    if cm is not None:
        if cm.ok:
            print("Cohen-Macaulay over Z: yes")
        else:
            print(
                "Cohen-Macaulay over Z: NO (link of %s has H~_%d = %s)"
                % (
                    payload["cohen_macaulay_Z"]["witness_face"],
                    cm.witness_dim,
                    cm.witness_group,
                )
            )
    if links is not None:
        print("vertex links:")
        for entry in links:
            parts = []
            for cell in entry["homology"]:
                if cell["rank"] or cell["torsion"]:
                    parts.append(
                        "H~_%d rank %d torsion %s"
                        % (cell["i"], cell["rank"], cell["torsion"] or "none")
                    )
            print("  %s: %s" % (entry["vertex"], "; ".join(parts) or "acyclic"))
    return exit_code


# ----- certify ------------------------------------------------------------------


def _parse_tau(text: str) -> frozenset[int]:
    body = text.strip().lstrip("{").rstrip("}")
    body = body.replace(",", " ")
    try:
        return frozenset(int(tok) for tok in body.split())
    except ValueError:
        raise PreconditionError("bad tau set %r" % text) from None


def cmd_certify(args) -> int:
    taus = tuple(_parse_tau(t) for t in args.tau or []) or (frozenset(),)
    try:
        rspec = RSpec(args.n, tuple(args.sigma), taus)
    except (PreconditionError, ValueError) as exc:
        return _usage(str(exc))
    cert = build_certificate(
        rspec,
        materialize_cap=args.materialize_cap,
        shelling_facet_cap=args.shelling_cap,
    )
    nodes = sum(1 for _ in cert.walk())
    try:
        report = verify_certificate(cert, shelling_facet_cap=args.shelling_cap)
    except ResourceCapError as exc:
        print("tree built: %d distinct nodes" % nodes)
        print("verification refused: %s" % exc, file=sys.stderr)
        if args.output:
            summary = {
                "rspec": rspec.to_json(),
                "kind": cert.kind,
                "rank": cert.rank,
                "distinct_nodes": nodes,
                "status": "UNVERIFIED",
                "note": str(exc),
            }
            _write_output(json.dumps(summary, indent=2) + "\n", args.output)
        return EXIT_RESOURCE
    print("certificate for %s" % json.dumps(rspec.to_json()))
    print("distinct nodes: %d" % nodes)
    print(report.summary())
    for failure in report.failures:
        print("FAILED: %s" % failure)
    print("status: %s" % ("OK" if report.ok else "FAILED"))
    if args.output:
        text = json.dumps(certificate_json(cert, report.statuses), indent=2) + "\n"
        _write_output(text, args.output)
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


# ----- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="absorder",
        description="Absolute order on S_n: order tests, Hasse diagrams, "
        "homology, Euler-characteristic table, constructibility certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="test u <= v in the absolute order")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument(
        "--method",
        choices=["length", "noncrossing", "both"],
        default="both",
    )
    p.add_argument("--n", type=int, default=None, help="common degree")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser(
        "table1", help="the integers (-1)^n * reduced Euler characteristic"
    )
    p.add_argument("--max", type=int, default=9)
    p.add_argument("--method", choices=["gf", "mobius", "both"], default="both")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("hasse", help="export the Hasse diagram of P_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--output", default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_POSET_CAP)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser(
        "homology", help="reduced homology of the proper part's order complex"
    )
    p.add_argument("n", type=int)
    p.add_argument("--links", action="store_true", help="also each vertex link")
    p.add_argument(
        "--cm", action="store_true", help="check Cohen-Macaulayness over Z"
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cap", type=int, default=DEFAULT_HOMOLOGY_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser(
        "certify", help="build and verify a strong-constructibility certificate"
    )
    p.add_argument("n", type=int)
    p.add_argument("--sigma", type=int, nargs="+", default=[1])
    p.add_argument(
        "--tau",
        action="append",
        default=None,
        help="tau sets like '{3,4}'; the first is tau_0 (may be '{}')",
    )
    p.add_argument(
        "--materialize-cap", type=int, default=DEFAULT_MATERIALIZE_CAP
    )
    p.add_argument(
        "--shelling-cap", type=int, default=DEFAULT_SHELLING_FACET_CAP
    )
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except (
        PermutationParseError,
        PreconditionError,
        DegreeMismatchError,
        ValueError,
    ) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
