"""Command line entry point.

Exit codes: 0 on success, 1 when a verification finds a violated invariant,
2 on malformed input or usage errors. All mathematical output goes to stdout
as JSON (one object per line for enumerations and sweeps); identical inputs
produce byte-identical output.

Order specs are ME, FE, seed:<n>, or @file.json holding an array of cells.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize, sweeps
from .crystal import verify_decomposition_glmn, verify_decomposition_glr
from .diagram import SkewShape, as_partition, hook_partitions_up_to, partitions_up_to
from .lr import (
    companion_tableau,
    glmn_lr_tableaux,
    glr_lr_tableaux,
    lr_coefficient,
    picture_to_tableau,
    tableau_to_picture,
)
from .picture import enumerate_pictures, omega
from .reading import is_admissible
from .render import render_picture, render_shape, render_tableau
from .tableau import Tableau, content, enumerate_glmn, enumerate_ssyt


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _parse_partition(text: str):
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return as_partition(int(v) for v in text.split(","))
    except ValueError as e:
        raise InputError(f"bad partition {text!r}: {e}") from None


def _parse_shape(text: str) -> SkewShape:
    outer, _, inner = text.partition("/")
    try:
        return SkewShape(_parse_partition(outer), _parse_partition(inner))
    except ValueError as e:
        raise InputError(f"bad shape {text!r}: {e}") from None


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    except OSError as e:
        raise InputError(str(e)) from None


def _resolve_order(spec: str | None, shape: SkewShape, seed: int):
    if spec is None:
        spec = "ME"
    if spec.startswith("@"):
        order = serialize.order_from_obj(_load_json(spec[1:]))
        if not is_admissible(order, shape):
            raise InputError(f"order in {spec[1:]} is not admissible on {shape}")
        return order
    try:
        return sweeps.resolve_order(spec, shape, seed)
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(obj):
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _cmd_coeff(args) -> int:
    result = lr_coefficient(
        _parse_partition(args.y), _parse_partition(args.w), _parse_partition(args.z),
        args.m, args.n,
    )
    _emit({"c": result.c, "n_super": result.n_super, "equal": result.c == result.n_super})
    return 0 if result.c == result.n_super else 1


def _cmd_enumerate(args) -> int:
    if args.family == "ssyt":
        shape = _parse_shape(args.shape)
        for t in enumerate_ssyt(shape, args.max_entry):
            _emit(serialize.tableau_to_obj(t))
    elif args.family == "glmn":
        shape = _parse_shape(args.shape)
        for t in enumerate_glmn(shape, args.m, args.n):
            _emit(serialize.tableau_to_obj(t))
    elif args.family == "lr":
        y, w, z = map(_parse_partition, (args.y, args.w, args.z))
        order = _resolve_order(args.order, SkewShape(z, y), args.seed)
        for t in glmn_lr_tableaux(y, w, z, order=order):
            _emit(serialize.tableau_to_obj(t))
    elif args.family == "lrglr":
        w_shape = _parse_shape(args.w)
        y, z = _parse_partition(args.y), _parse_partition(args.z)
        order = _resolve_order(args.order, w_shape, args.seed)
        for t in glr_lr_tableaux(w_shape, y, z, order=order, max_entry=args.max_entry):
            _emit(serialize.tableau_to_obj(t))
    else:
        domain = _parse_shape(args.domain)
        codomain = _parse_shape(args.codomain)
        a = _resolve_order(args.order, codomain, args.seed)
        a_prime = _resolve_order(args.order2, domain, args.seed)
        for p in enumerate_pictures(domain, codomain, a, a_prime):
            _emit(serialize.picture_to_obj(p))
    return 0


def _expect_tableau(obj) -> Tableau:
    try:
        return serialize.tableau_from_obj(obj)
    except ValueError as e:
        raise InputError(str(e)) from None


def _expect_picture(obj):
    try:
        return serialize.picture_from_obj(obj)
    except ValueError as e:
        raise InputError(str(e)) from None


def _check_flag(name: str, given: str | None, actual) -> None:
    if given is not None and _parse_partition(given) != actual:
        raise InputError(f"--{name} {given} does not match the input's {name} = {actual}")


def _cmd_map(args) -> int:
    obj = _load_json(args.input)
    try:
        if args.name in ("phi", "phitilde"):
            p = _expect_picture(obj)
            _check_flag("z", args.z, p.codomain.outer)
            _check_flag("y", args.y, p.codomain.inner)
            _emit(serialize.tableau_to_obj(picture_to_tableau(p, verify=True)))
        elif args.name == "psi":
            t = _expect_tableau(obj)
            if args.y is None:
                raise InputError("psi needs --y (the inner shape of the target)")
            p = tableau_to_picture(t, _parse_partition(args.y), verify=True)
            _check_flag("z", args.z, p.codomain.outer)
            _emit(serialize.picture_to_obj(p))
        elif args.name == "psitilde":
            t = _expect_tableau(obj)
            _check_flag("y", args.y, t.shape.inner)
            _check_flag("z", args.z, t.shape.outer)
            _emit(serialize.picture_to_obj(tableau_to_picture(t, (), verify=True)))
        elif args.name == "phihat":
            q = _expect_tableau(obj)
            _check_flag("y", args.y, q.shape.inner)
            _check_flag("z", args.z, q.shape.outer)
            _check_flag("w", args.w, content(q))
            _emit(serialize.tableau_to_obj(companion_tableau(q, verify=True)))
        else:
            p = _expect_picture(obj)
            _emit(serialize.picture_to_obj(omega(p)))
    except ValueError as e:
        raise InputError(str(e)) from None
    return 0


def _cmd_render(args) -> int:
    obj = _load_json(args.input)
    if isinstance(obj, list):
        out = render_shape(SkewShape(serialize.partition_from_obj(obj)), args.render)
    elif isinstance(obj, dict) and "rows" in obj:
        out = render_tableau(_expect_tableau(obj), args.render)
    elif isinstance(obj, dict) and "map" in obj:
        out = render_picture(_expect_picture(obj), args.render)
    elif isinstance(obj, dict) and "outer" in obj:
        try:
            out = render_shape(serialize.shape_from_obj(obj), args.render)
        except ValueError as e:
            raise InputError(str(e)) from None
    else:
        raise InputError("input is not a partition, shape, tableau, or picture")
    sys.stdout.write(out + "\n")
    return 0


def _sweep_lines(records, m=None, n=None):
    for rec in records:
        outer, inner = rec["w"]
        w_obj = list(outer) if not inner else {"outer": list(outer), "inner": list(inner)}
        for entry in rec["orders"]:
            yield {
                "y": list(rec["y"]),
                "w": w_obj,
                "z": list(rec["z"]),
                "m": m,
                "n": n,
                "order": entry["order"],
                "c": rec["c"],
                "n_super": rec["n_super"],
                "pictures": entry["pictures"],
                "roundtrip_ok": entry["roundtrip_ok"],
                "order_independent": rec["order_independent"],
            }


def _cmd_verify(args) -> int:
    failures = 0
    total = 0
    if args.what in ("roundtrip", "order-independence", "coefficients"):
        if args.what == "coefficients":
            specs = ("ME",)
            hooks = set(hook_partitions_up_to(args.max_size, args.m, args.n))
            triples = [
                (y, w, z)
                for y, w, z in sweeps.straight_triples(args.max_size)
                if y in hooks and w in hooks and z in hooks
            ]
            records = sweeps.run_sweep(
                triples, specs, seed=args.seed, roundtrips=False, identity=True, jobs=args.jobs
            )
        else:
            default = (
                ("ME", "FE", "seed:0", "seed:1", "seed:2")
                if args.what == "roundtrip"
                else ("ME", "FE", "seed:0", "seed:1", "seed:2", "seed:3", "seed:4")
            )
            specs = tuple(args.orders.split(",")) if args.orders else default
            records = sweeps.run_sweep(
                sweeps.straight_triples(args.max_size),
                specs,
                seed=args.seed,
                roundtrips=args.what == "roundtrip",
                identity=False,
                pictures=args.what == "roundtrip",
                jobs=args.jobs,
            )
        for line in _sweep_lines(records, args.m, args.n):
            _emit(line)
        for rec in records:
            total += 1
            if not sweeps.record_ok(rec):
                failures += 1
    elif args.what == "decomposition-glr":
        shapes = [p for p in partitions_up_to(args.max_size, max_rows=args.r)]
        for y in shapes:
            for w in shapes:
                total += 1
                report = verify_decomposition_glr(y, w, args.r)
                line = {"y": list(y), "w": list(w), "r": args.r}
                line.update(report.to_obj())
                _emit(line)
                if not report.passed:
                    failures += 1
    else:
        shapes = hook_partitions_up_to(args.max_size, args.m, args.n)
        for y in shapes:
            for w in shapes:
                total += 1
                report = verify_decomposition_glmn(y, w, args.m, args.n)
                line = {"y": list(y), "w": list(w), "m": args.m, "n": args.n}
                line.update(report.to_obj())
                _emit(line)
                if not report.passed:
                    failures += 1
    print(f"{args.what}: {total - failures}/{total} ok", file=sys.stderr)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrpictures",
        description="Littlewood-Richardson tableaux, pictures, and the bijections between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="count both LR families for a hook triple")
    p.add_argument("--y", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("enumerate", help="list tableaux or pictures as JSON lines")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("ssyt", help="semistandard fillings of a shape")
    q.add_argument("--shape", required=True, help="outer[/inner], e.g. 3,2/1")
    q.add_argument("--max-entry", type=int, required=True)
    q = fam.add_parser("glmn", help="two-family semistandard fillings")
    q.add_argument("--shape", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = fam.add_parser("lr", help="two-family LR tableaux of a triple")
    q.add_argument("--y", required=True)
    q.add_argument("--w", required=True)
    q.add_argument("--z", required=True)
    q.add_argument("--order", help="order on z/y: ME | FE | seed:<n> | @file.json")
    q.add_argument("--seed", type=int, default=0)
    q = fam.add_parser("lrglr", help="classical LR family over a shape")
    q.add_argument("--y", required=True)
    q.add_argument("--w", required=True, help="reading shape, outer[/inner]")
    q.add_argument("--z", required=True)
    q.add_argument("--order", help="order on w: ME | FE | seed:<n> | @file.json")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--max-entry", type=int, default=None)
    q = fam.add_parser("pictures", help="admissible pictures between two shapes")
    q.add_argument("--domain", required=True)
    q.add_argument("--codomain", required=True)
    q.add_argument("--order", help="order on the codomain")
    q.add_argument("--order2", help="order on the domain")
    q.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the bijections to a JSON value")
    p.add_argument("name", choices=["phi", "psi", "phitilde", "psitilde", "phihat", "omega"])
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--y")
    p.add_argument("--w")
    p.add_argument("--z")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument(
        "what",
        choices=[
            "roundtrip",
            "order-independence",
            "coefficients",
            "decomposition-glr",
            "decomposition-glmn",
        ],
    )
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--orders", help="comma list of ME | FE | seed:<n>")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int, default=3)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw a shape, tableau, or picture")
    p.add_argument("--input", required=True)
    p.add_argument("--render", choices=["ascii", "unicode"], default="ascii")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
