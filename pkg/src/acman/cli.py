"""Command line front end.

Usage::

    acman decide --manifold cp2.json --target r4m-immerse
    acman decide --catalog T4 --target r6-ph --json
    acman segre --m 3
    acman bott --k 2 --n 3
    acman catalog list
    acman catalog show K3 > k3.json
    acman lefschetz verify
    acman lefschetz critical --n-seeds 200 --seed 1
    acman lefschetz fiber --value 0,0,1 --n 500 --seed 7 --out torus.csv

Exit codes for ``decide``: 0 Yes, 1 No, 2 Undetermined. Every command
exits 64 on bad input. With ``--json`` exactly one JSON document is written
to standard output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import lefschetz, obstruction
from .chern_algebra import segre_polynomial
from .errors import AcmanError, DescriptorError, OffSphere
from .manifolds import FourManifoldDescriptor, catalog, descriptor_to_json, load_descriptor

EXIT_YES, EXIT_NO, EXIT_UNDETERMINED, EXIT_INPUT = 0, 1, 2, 64
SEGRE_TESTED_MAX = 12

_EXIT = {
    obstruction.Verdict.YES: EXIT_YES,
    obstruction.Verdict.NO: EXIT_NO,
    obstruction.Verdict.UNDETERMINED: EXIT_UNDETERMINED,
}

TARGETS = {
    "r4m2": obstruction.decide_embed_R_4m_plus_2,
    "r4m-immerse": obstruction.decide_immerse_R_4m,
    "r4m-embed": obstruction.decide_embed_R_4m,
    "r6-ph": obstruction.decide_embed_R6,
    "r6-smooth": obstruction.smooth_embed_R6,
}


class InputError(Exception):
    def __init__(self, message, path=""):
        super().__init__(message)
        self.path = path


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("ACMAN_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"ACMAN_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default: $ACMAN_SEED or 0)")

    p = _Parser(prog="acman", description="Segre-class embedding obstructions and Lefschetz numerics")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decide", parents=[common], help="decide embeddability of a descriptor")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--manifold", metavar="FILE", help="JSON descriptor file")
    src.add_argument("--catalog", metavar="NAME", help="shipped descriptor, see 'catalog list'")
    d.add_argument("--target", required=True, choices=list(TARGETS))

    s = sub.add_parser("segre", parents=[common], help="print the Segre polynomial s_k")
    s.add_argument("--m", type=int, required=True, metavar="K")

    b = sub.add_parser("bott", parents=[common], help="stable homotopy group pi_k(Gamma(n))")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, required=True)

    c = sub.add_parser("catalog", parents=[common], help="list or show shipped descriptors")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("name", nargs="?")

    lf = sub.add_parser("lefschetz", help="numerics of the fibration on S^4")
    lsub = lf.add_subparsers(dest="action", required=True, parser_class=_Parser)
    v = lsub.add_parser("verify", parents=[common], help="run the invariant suite")
    v.add_argument("--n", type=int, default=10_000, help="random points per check")
    cr = lsub.add_parser("critical", parents=[common], help="locate critical points by descent")
    cr.add_argument("--map", default="f1", choices=["f1", "f_full", "hopf"])
    cr.add_argument("--n-seeds", type=int, default=200)
    cr.add_argument("--tol", type=float, default=1e-7, help="smallest-singular-value threshold")
    fb = lsub.add_parser("fiber", parents=[common], help="sample a fiber and export the point cloud")
    fb.add_argument("--map", default="f1", choices=["f1", "f_full"])
    fb.add_argument("--value", required=True, help="target point 're,im,t' on S^2")
    fb.add_argument("--n", type=int, default=500)
    fb.add_argument("--out", required=True, metavar="PATH")
    fb.add_argument("--format", choices=["csv", "json"], default="csv")
    fb.add_argument("--tol-fiber", type=float, default=lefschetz.TOL_FIBER)
    return p


# -- command implementations ------------------------------------------------------
# each returns (exit_code, json_document, human_text)


def _load(args):
    if args.catalog is not None:
        cat = catalog()
        if args.catalog not in cat:
            raise InputError(f"unknown catalog entry {args.catalog!r}", "catalog")
        return cat[args.catalog]()
    try:
        return load_descriptor(args.manifold)
    except OSError as exc:
        raise InputError(f"cannot read {args.manifold}: {exc.strerror}", "manifold") from None


def _format_decision(name: str, d: obstruction.EmbeddingDecision) -> str:
    lines = [f"{name}: {d.verdict.value} (target R^{d.target})"]
    if d.invariant_I is not None:
        lines.append(f"  I(M,J) = {d.invariant_I}")
    if d.double_points is not None:
        lines.append(f"  double points = {d.double_points}")
    if d.normal_euler_number is not None:
        lines.append(f"  normal Euler number = {d.normal_euler_number}")
    if d.regular_homotopy_class is not None:
        lines.append(f"  regular homotopy class = {d.regular_homotopy_class}")
    for note in d.notes:
        lines.append(f"  note: {note}")
    lines.append("  ledger:")
    for e in d.ledger:
        fact = e.to_json()["fact"]
        lines.append(f"    {e.space:<22} {fact!s:<8} {e.role}")
    lines.append("  citations: " + ", ".join(d.citations))
    return "\n".join(lines)


def cmd_decide(args):
    M = _load(args)
    if args.target.startswith("r6"):
        if not isinstance(M, FourManifoldDescriptor):
            raise InputError(f"target {args.target} needs a four_manifold descriptor", "kind")
    elif isinstance(M, FourManifoldDescriptor):
        M = M.chern_table()
    decision = TARGETS[args.target](M)
    return _EXIT[decision.verdict], decision.to_json(), _format_decision(M.name, decision)


def cmd_segre(args):
    k = args.m
    if k < 0:
        raise InputError("K must be non-negative", "m")
    if k > SEGRE_TESTED_MAX:
        print(f"warning: s_{k} is beyond the tested range k <= {SEGRE_TESTED_MAX}", file=sys.stderr)
    poly = segre_polynomial(k)
    terms = [
        {"partition": list(lam), "coefficient": int(a)}
        for lam, a in sorted(poly.terms.items(), key=lambda t: tuple(t[0]))
    ]
    return 0, {"k": k, "polynomial": str(poly), "terms": terms}, str(poly)


def cmd_bott(args):
    if args.k < 1 or args.n < 1:
        raise InputError("k and n must be positive", "k" if args.k < 1 else "n")
    g = obstruction.bott_group(args.k, args.n)
    doc = {"k": args.k, "n": args.n, "group": g.value, "stable": args.k <= 2 * args.n - 2}
    return 0, doc, g.value


def cmd_catalog(args):
    cat = catalog()
    if args.action == "list":
        items = []
        for name, make in cat.items():
            kind = "four_manifold" if isinstance(make(), FourManifoldDescriptor) else "chern_table"
            items.append({"name": name, "kind": kind})
        text = "\n".join(f"{i['name']:<10} {i['kind']}" for i in items)
        return 0, {"descriptors": items}, text
    if not args.name:
        raise InputError("catalog show needs a NAME", "name")
    if args.name not in cat:
        raise InputError(f"unknown catalog entry {args.name!r}", "name")
    doc = descriptor_to_json(cat[args.name]())
    return 0, doc, json.dumps(doc, indent=2)


def _parse_value(text: str) -> np.ndarray:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse {text!r} as 're,im,t'", "value") from None
    if len(vals) != 3:
        raise InputError("value needs three comma-separated numbers 're,im,t'", "value")
    return np.array(vals)


def cmd_lefschetz(args):
    if args.action == "verify":
        checks = lefschetz.verify(n=args.n, seed=args.seed)
        ok = all(c.passed for c in checks)
        text = "\n".join(
            f"{'PASS' if c.passed else 'FAIL'}  {c.name:<52} {c.value:.3e} (threshold {c.threshold:g})" for c in checks
        )
        return (0 if ok else 1), {"passed": ok, "checks": [c.to_json() for c in checks]}, text
    if args.action == "critical":
        res = lefschetz.search_critical_points(args.map, args.n_seeds, args.seed, tol=args.tol)
        pts = [[float(v) for v in p.to_array()] for p in res.points]
        doc = {"map": args.map, "n_seeds": args.n_seeds, "seed": args.seed, "converged": res.converged, "points": pts}
        lines = [f"{res.converged} of {args.n_seeds} descents converged; {len(pts)} critical point(s)"]
        lines += ["  (" + ", ".join(f"{v:+.9f}" for v in p) + ")" for p in pts]
        return 0, doc, "\n".join(lines)
    target = _parse_value(args.value)
    if args.n < 1:
        raise InputError("n must be at least 1", "n")
    try:
        sample = lefschetz.sample_fiber(args.map, target, args.n, args.seed, tol_fiber=args.tol_fiber)
    except OffSphere as exc:
        raise InputError(str(exc), "value") from None
    try:
        lefschetz.export_point_cloud(sample, args.out, args.format)
    except OSError as exc:
        raise InputError(str(exc), "out") from None
    doc = {
        "map": args.map,
        "target": [float(v) for v in target],
        "n_starts": args.n,
        "converged": len(sample),
        "convergence_rate": sample.convergence_rate,
        "out": args.out,
        "format": args.format,
    }
    text = f"{len(sample)} of {args.n} starts converged ({100 * sample.convergence_rate:.1f}%); wrote {args.out}"
    return 0, doc, text


COMMANDS = {
    "decide": cmd_decide,
    "segre": cmd_segre,
    "bott": cmd_bott,
    "catalog": cmd_catalog,
    "lefschetz": cmd_lefschetz,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    try:
        code, doc, text = COMMANDS[args.command](args)
    except (InputError, DescriptorError) as exc:
        path = getattr(exc, "path", "")
        msg = exc.args[0] if exc.args else str(exc)
        if args.json:
            print(json.dumps({"error": msg, "path": path}))
        else:
            print(f"error: {path + ': ' if path else ''}{msg}", file=sys.stderr)
        return EXIT_INPUT
    except AcmanError as exc:
        if args.json:
            print(json.dumps({"error": f"{type(exc).__name__}: {exc}", "path": ""}))
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(doc))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
