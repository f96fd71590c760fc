"""Command-line front end: ``premonoid {factor,enumerate,verify,oracle}``.

Points of X are written 1-based (``--images 2,3,2``). Output is JSON unless
``--format`` says otherwise; JSON output is deterministic for a given request.
Exit codes: 0 success, 1 a verification or ``--check`` failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import core
from . import linear as la
from . import oracle
from . import transformations as tf
from .config import DEFAULT_SEED
from .errors import DegreeTooLarge, PremonoidError
from .factorizers import cartan_dieudonne_factor, howie_factor, transposition_factor
from .monoids import (divisibility_preorder, full_transformation_monoid, parse_table_text,
                      reduced_power_monoid, singular_submonoid, symmetric_group)
from .rfix import fix_preorder_of, rfix_preorder

MONOIDS = ["tn", "sn", "singular-tn", "power", "table-file", "orthogonal"]


class UsageError(Exception):
    """Malformed request; ``field`` names the offending option."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _require(args, name):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise UsageError(f"--{name}", f"required for --monoid {args.monoid}")
    return value


def _images(args):
    n = _require(args, "n")
    text = _require(args, "images")
    try:
        return tf.parse_images(text, n)
    except PremonoidError as exc:
        raise UsageError("--images", str(exc).removeprefix("images: ")) from None


def _read_matrix(path):
    try:
        return la.matrix_from_json(Path(path).read_text())
    except OSError as exc:
        raise UsageError("--matrix", str(exc)) from None
    except (PremonoidError, json.JSONDecodeError) as exc:
        raise UsageError("--matrix", str(exc)) from None


def _generic_premonoid(args):
    """Premonoid plus an element renderer for power / table-file / transformation monoids."""
    if args.monoid == "power":
        try:
            m = reduced_power_monoid(oracle.base_monoid(_require(args, "base")))
        except PremonoidError as exc:
            raise UsageError("--base", str(exc)) from None

        def label(i):
            return list(m.elements[i])
    elif args.monoid == "table-file":
        path = _require(args, "table")
        try:
            m = parse_table_text(Path(path).read_text(), name=Path(path).name)
        except OSError as exc:
            raise UsageError("--table", str(exc)) from None
        except PremonoidError as exc:
            raise UsageError("--table", str(exc)) from None

        def label(i):
            return i
    else:
        n = _require(args, "n")
        build = {"tn": full_transformation_monoid, "sn": symmetric_group,
                 "singular-tn": singular_submonoid}[args.monoid]
        try:
            m = build(n)
        except PremonoidError as exc:
            raise UsageError("--n", str(exc)) from None

        def label(i):
            return tf.format_images(m.elements[i])

    try:
        order = _order_for(args, m)
    except PremonoidError as exc:
        raise UsageError("--preorder", str(exc)) from None
    return core.Premonoid(m, order, name=f"{args.preorder}({m.name})"), label


def _order_for(args, m):
    if args.preorder == "div":
        return divisibility_preorder(m)
    if args.monoid in ("tn", "sn", "singular-tn"):
        return fix_preorder_of(m)
    return rfix_preorder(m)


def _element_field(args) -> str:
    return {"power": "--subset", "table-file": "--element"}.get(args.monoid, "--images")


def _generic_element(args, pm):
    m = pm.monoid
    if args.monoid == "power":
        text = _require(args, "subset")
        try:
            key = tuple(sorted({int(v) for v in text.split(",")}))
        except ValueError:
            raise UsageError("--subset", f"expected comma-separated base indices, got {text!r}") from None
        if key not in m:
            raise UsageError("--subset", f"{text!r} is not an element (it must contain the base identity)")
        return m.index(key)
    if args.monoid == "table-file":
        x = _require(args, "element")
        if not 0 <= x < m.size:
            raise UsageError("--element", f"index must lie in 0..{m.size - 1}")
        return x
    t = _images(args)
    if t not in m:
        raise UsageError("--images", f"{tf.format_images(t)} is not in {m.name}")
    return m.index(t)


def cmd_factor(args) -> tuple[int, str]:
    if args.monoid == "orthogonal":
        f = _read_matrix(_require(args, "matrix"))
        try:
            cert = cartan_dieudonne_factor(f)
        except PremonoidError as exc:
            raise UsageError("--matrix", str(exc)) from None
        out = {"monoid": "orthogonal", "n": f.n, "kind": "reflection",
               "target": la.matrix_to_json(f),
               "factors": [la.matrix_to_json(g) for g in cert.factors],
               "length": cert.length, "bound": cert.bound, "trace": cert.trace}
    elif args.monoid in ("tn", "sn", "singular-tn") and not args.generic:
        t = _images(args)
        if tf.is_identity(t):
            raise UsageError("--images", "the identity is a unit (the empty product); nothing to factor")
        if args.monoid == "sn" and tf.is_singular(t):
            raise UsageError("--images", "not a permutation")
        if args.monoid == "singular-tn" and not tf.is_singular(t):
            raise UsageError("--images", "not a singular map")
        if tf.is_singular(t):
            cert, kind = howie_factor(t), "quasi-identity"
        else:
            cert, kind = transposition_factor(t), "transposition"
        out = {"monoid": args.monoid, "n": len(t), "kind": kind,
               "target": tf.format_images(t),
               "factors": [tf.format_images(q) for q in cert.factors],
               "length": cert.length, "bound": cert.bound, "trace": cert.trace}
    else:
        pm, label = _generic_premonoid(args)
        x = _generic_element(args, pm)
        if pm.unit_mask[x]:
            raise UsageError(_element_field(args), "the element is a unit (the empty product); nothing to factor")
        try:
            if args.bounded:
                cert = core.factor_into_quarks_bounded(pm, x, args.degree)
                kind = "quark"
            else:
                cert = core.factor_into_irreducibles(pm, x, args.degree)
                kind = "irreducible"
        except DegreeTooLarge as exc:
            raise UsageError("--degree", str(exc)) from None
        except PremonoidError as exc:
            raise UsageError(_element_field(args), str(exc)) from None
        out = {"monoid": args.monoid, "preorder": args.preorder, "degree": args.degree,
               "kind": kind, "target": label(x), "factors": [label(f) for f in cert.factors],
               "length": cert.length, "bound": cert.bound, "trace": cert.trace}
        for key in ("n", "base", "table"):
            if getattr(args, key, None) is not None:
                out[key] = getattr(args, key)
    text = _dump(out)
    if args.check:
        problems = check_certificate(json.loads(text))
        if problems:
            return 1, text + "\n" + _dump({"check": "FAIL", "problems": problems})
    return 0, text


def check_certificate(cert: dict) -> list[str]:
    """Re-verify a serialized certificate from its JSON form alone."""
    problems = []
    kind = cert.get("kind")
    factors = cert.get("factors", [])
    if cert.get("length") != len(factors):
        problems.append("length field does not match the factor list")
    if cert.get("bound") is not None and len(factors) > cert["bound"]:
        problems.append(f"{len(factors)} factors exceed the bound {cert['bound']}")
    if kind in ("quasi-identity", "transposition"):
        n = cert["n"]
        target = [int(v) for v in cert["target"].split(",")]
        maps = [[int(v) for v in f.split(",")] for f in factors]
        point_images = []
        for x in range(1, n + 1):
            for f in reversed(maps):
                x = f[x - 1]
            point_images.append(x)
        if point_images != target:
            problems.append("factors do not compose to the target")
        for f in maps:
            fixed = sum(1 for i, v in enumerate(f, start=1) if i == v)
            if kind == "quasi-identity" and fixed != n - 1:
                problems.append(f"{f} is not a quasi-identity")
            if kind == "transposition" and (fixed != n - 2 or sorted(f) != list(range(1, n + 1))):
                problems.append(f"{f} is not a transposition")
    elif kind == "reflection":
        n = cert["n"]
        target = [[Fraction(v) for v in row] for row in cert["target"]["entries"]]
        acc = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for g in factors:
            rows = [[Fraction(v) for v in row] for row in g["entries"]]
            gram = [[sum(rows[k][i] * rows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
            if gram != [[int(i == j) for j in range(n)] for i in range(n)]:
                problems.append("a factor is not orthogonal")
            # reflection: symmetric orthogonal with trace n - 2 (eigenvalues 1,...,1,-1)
            if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)) or \
                    sum(rows[i][i] for i in range(n)) != n - 2:
                problems.append("a factor is not a reflection")
            acc = [[sum(acc[i][k] * rows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        if acc != target:
            problems.append("factors do not multiply to the target")
        if len(factors) > n:
            problems.append("more than n reflections")
    elif kind in ("irreducible", "quark"):
        if not factors:
            problems.append("empty factorization of a non-unit")
        elif _generic_product(cert) != _generic_key(cert, cert["target"]):
            problems.append("factors do not multiply to the target")
    else:
        problems.append(f"unknown certificate kind {kind!r}")
    return problems


def _generic_key(cert, element):
    if cert["monoid"] == "power":
        return tuple(sorted(element))
    if cert["monoid"] == "table-file":
        return element
    return tuple(int(v) for v in element.split(","))


def _generic_product(cert):
    """Multiply the factors using only the certificate's own fields and the monoid op."""
    keys = [_generic_key(cert, f) for f in cert["factors"]]
    if cert["monoid"] == "power":
        base = oracle.base_monoid(cert["base"])
        acc = {base.identity}
        for k in keys:
            acc = {base.mul(a, b) for a in acc for b in k}
        return tuple(sorted(acc))
    if cert["monoid"] == "table-file":
        rows = [ln.split() for ln in Path(cert["table"]).read_text().split("\n")[1:] if ln.strip()]
        acc = None
        for k in keys:
            acc = k if acc is None else int(rows[acc][k])
        return acc
    n = len(keys[0])
    out = []
    for x in range(1, n + 1):
        for f in reversed(keys):
            x = f[x - 1]
        out.append(x)
    return tuple(out)


def cmd_enumerate(args) -> tuple[int, str]:
    if args.monoid == "orthogonal":
        raise UsageError("--monoid", "the orthogonal group is infinite and cannot be enumerated")
    pm, label = _generic_premonoid(args)
    cls = args.cls
    if cls == "units":
        picked = core.units(pm)
    elif cls == "quarks":
        picked = core.quarks(pm)
    elif cls == "irreducibles":
        try:
            picked = core.irreducibles(pm, args.degree)
        except PremonoidError as exc:
            raise UsageError("--degree", str(exc)) from None
    else:
        picked = core.atoms(pm)
    heights = pm.heights
    out = {"monoid": args.monoid, "preorder": args.preorder, "class": cls, "count": len(picked),
           "elements": [{"element": label(x), "height": heights[x]} for x in picked]}
    if cls == "irreducibles":
        out["degree"] = args.degree
    if args.format == "text":
        return 0, "\n".join(f"{e['element']}\theight={e['height']}" for e in out["elements"])
    return 0, _dump(out)


SUITE_DEFAULT_MAX_N = {"howie": 5, "transpositions": 7, "characterizations": 5, "heights": 5}


def _run_suite(name, args) -> oracle.SweepReport:
    max_n = args.max_n or SUITE_DEFAULT_MAX_N.get(name)
    if name == "howie":
        return oracle.sweep_howie(max_n)
    if name == "transpositions":
        return oracle.sweep_transpositions(max_n)
    if name == "characterizations":
        return oracle.sweep_characterizations(max_n)
    if name == "heights":
        return oracle.sweep_heights(max_n)
    if name == "cd":
        dims = [int(v) for v in args.dims.split(",")]
        return oracle.sweep_cd(dims, args.trials, args.seed)
    if name == "power":
        return oracle.sweep_power_monoids(args.bases.split(","))
    if name == "bounded":
        return oracle.sweep_bounded((3, 4) if args.max_n is None else range(3, args.max_n + 1))
    raise UsageError("--suite", f"unknown suite {name!r}")


SUITES = ["howie", "transpositions", "characterizations", "heights", "cd", "power", "bounded"]


def cmd_verify(args) -> tuple[int, str]:
    names = SUITES if args.suite == "all" else [args.suite]
    try:
        reports = [_run_suite(name, args) for name in names]
    except PremonoidError as exc:
        raise UsageError("--max-n", str(exc)) from None
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "csv":
        body = "".join(r.to_csv() if i == 0 else r.to_csv().split("\n", 1)[1]
                       for i, r in enumerate(reports))
    elif args.format == "text":
        body = "\n".join(f"{r.suite}: checked={r.checked} failures={len(r.failures)} "
                         f"time={r.wall_time:.2f}s {'PASS' if r.passed else 'FAIL'}" for r in reports)
    else:
        payload = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports]}
        body = _dump(payload)
    return status, body


def cmd_oracle(args) -> tuple[int, str]:
    if args.monoid not in ("tn", "singular-tn", "sn"):
        raise UsageError("--monoid", "the oracle supports tn, singular-tn and sn")
    t = _images(args)
    n = len(t)
    try:
        if args.monoid == "sn":
            if tf.is_singular(t):
                raise UsageError("--images", "not a permutation")
            bfs = oracle.transposition_bfs(n)
            gens = "transpositions"
        else:
            bfs = oracle.quasi_identity_bfs(n)
            gens = "quasi-identities"
    except PremonoidError as exc:
        raise UsageError("--n", str(exc)) from None
    res = bfs.result(bfs.monoid.index(t))
    out = {"monoid": args.monoid, "n": n, "generators": gens, "target": tf.format_images(t),
           "min_length": res.min_length, "reachable": res.reachable,
           "witness": [tf.format_images(bfs.monoid.elements[w]) for w in res.witness]}
    return 0, _dump(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="premonoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, monoids=MONOIDS):
        p.add_argument("--monoid", choices=monoids, required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--images", help="comma-separated 1-based images, e.g. 2,3,2")

    f = sub.add_parser("factor", help="factor one element and print a certificate")
    common(f)
    f.add_argument("--matrix", help="matrix JSON file (orthogonal)")
    f.add_argument("--base", help=f"base monoid for power: {', '.join(sorted(oracle.BASE_MONOIDS))}")
    f.add_argument("--subset", help="power monoid element as comma-separated 0-based base carrier indices, e.g. 0,1")
    f.add_argument("--table", help="monoid table file (table-file)")
    f.add_argument("--element", type=int, help="0-based carrier index (table-file)")
    f.add_argument("--preorder", choices=["rfix", "div"], default="div")
    f.add_argument("--degree", type=int, default=2)
    f.add_argument("--bounded", action="store_true", help="use the height-bounded quark engine")
    f.add_argument("--generic", action="store_true",
                   help="tn/sn/singular-tn: use the generic engines instead of the constructive ones")
    f.add_argument("--check", action="store_true", help="re-parse and re-verify the emitted certificate")
    f.add_argument("--format", choices=["json"], default="json")
    f.set_defaults(func=cmd_factor)

    e = sub.add_parser("enumerate", help="list the units, quarks, irreducibles or atoms")
    common(e)
    e.add_argument("--base")
    e.add_argument("--table")
    e.add_argument("--preorder", choices=["rfix", "div"], default="rfix")
    e.add_argument("--class", dest="cls", choices=["quarks", "irreducibles", "atoms", "units"], required=True)
    e.add_argument("--degree", type=int, default=2)
    e.add_argument("--format", choices=["json", "text"], default="json")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--suite", choices=SUITES + ["all"], required=True)
    v.add_argument("--max-n", type=int)
    v.add_argument("--dims", default="2,3,4,5")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--bases", default="Z2,Z3,Z2xZ2,S3")
    v.add_argument("--format", choices=["json", "csv", "text"], default="json")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="BFS minimal factorization length")
    common(o, ["tn", "singular-tn", "sn"])
    o.add_argument("--format", choices=["json"], default="json")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"premonoid: error: {exc}", file=sys.stderr)
        return 2
    except PremonoidError as exc:
        print(f"premonoid: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
