"""Command-line front end.

Every command prints one JSON document (or a plain table with
``--format pretty``).  Exit status: 0 when every ``agree`` flag is true,
1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import Callable, Iterable, Sequence

from . import cellbasis, tensor
from .algebra import Element, multiply, star
from .coeffs import coeff_list
from .diagrams import enumerate_walled, render
from .triples import ShapePair, count_ranks, enumerate_shapes, enumerate_triples, lambda0, m0_triples, max_statistic

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- helpers -----------------------------------------------------------------------------

def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing {' '.join(missing)}")
    for n in ("r", "s"):
        if n in names and getattr(args, n) < 0:
            raise UsageError(f"--{n} must be nonnegative")
    if "n" in names and args.n < 1:
        raise UsageError("--n must be positive")


def _shape(args) -> ShapePair:
    if args.shape is None:
        raise UsageError("missing --shape")
    try:
        return ShapePair.parse(args.shape, args.r, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _load_element(path: str) -> Element:
    try:
        with open(path) as fh:
            return Element.from_json(json.load(fh))
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read element from {path}: {exc}") from exc


def _all_agree(obj) -> bool:
    if isinstance(obj, dict):
        return all(v is True for k, v in obj.items() if k == "agree") and all(_all_agree(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_all_agree(v) for v in obj)
    return True


def _pretty(obj, indent: int = 0) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 2))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if obj and all(isinstance(x, dict) for x in obj) and all(_flat(list(x.values())) for x in obj):
            keys = list(obj[0])
            rows = [[_scalar(x.get(k)) for k in keys] for x in obj]
            widths = [max(len(k), *(len(r[i]) for r in rows)) for i, k in enumerate(keys)]
            out = [pad + "  ".join(k.ljust(w) for k, w in zip(keys, widths))]
            out += [pad + "  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
            return "\n".join(out)
        return "\n".join(_pretty(x, indent) if isinstance(x, (dict, list)) else pad + _scalar(x) for x in obj)
    return pad + _scalar(obj)


def _flat(v) -> bool:
    items = v.values() if isinstance(v, dict) else v
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)) for x in items)


def _scalar(v) -> str:
    return json.dumps(v, ensure_ascii=False, separators=(",", ":")) if not isinstance(v, str) else v


def _emit(report, args) -> int:
    if args.format == "pretty":
        text = _pretty(report) + "\n"
    else:
        text = json.dumps(report, ensure_ascii=False, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if _all_agree(report) else EXIT_FAIL


# -- commands ---------------------------------------------------------------------------------

def cmd_dims(args) -> dict:
    _need(args, "r", "s")
    shapes = enumerate_shapes(args.r, args.s)
    profile = [len(enumerate_triples(sh, args.r, args.s)) for sh in shapes]
    out = {
        "r": args.r,
        "s": args.s,
        "walled_rank": sum(p * p for p in profile),
        "expected_rank": factorial(args.r + args.s),
        "shapes": [str(sh) for sh in shapes],
        "profile": profile,
    }
    out["agree"] = out["walled_rank"] == out["expected_rank"]
    if args.n is not None:
        _need(args, "n")
        walled, end, ann = count_ranks(args.r, args.s, args.n)
        out["n"] = args.n
        out["profile0"] = [len(m0_triples(sh, args.r, args.s, args.n)) for sh in shapes]
        out["endomorphism_rank"] = end
        out["ann_rank"] = ann
    return out


def cmd_enumerate(args) -> dict:
    _need(args, "r", "s")
    r, s = args.r, args.s
    what = args.what
    if what == "shapes":
        shapes = enumerate_shapes(r, s)
        rel = [[i, j] for i, a in enumerate(shapes) for j, b in enumerate(shapes) if i != j and a.dominates(b)]
        return {"r": r, "s": s, "shapes": [sh.to_json() for sh in shapes], "dominates": rel}
    if what == "triples":
        shapes = [_shape(args)] if args.shape else enumerate_shapes(r, s)
        out = []
        for sh in shapes:
            for tr in enumerate_triples(sh, r, s):
                item = {"shape": sh.to_json(), "triple": tr.to_json(), "max": max_statistic(tr)}
                out.append(item)
        return {"r": r, "s": s, "count": len(out), "triples": out}
    if what == "diagrams":
        ds = enumerate_walled(r, s)
        return {"r": r, "s": s, "count": len(ds), "expected": factorial(r + s), "agree": len(ds) == factorial(r + s),
                "diagrams": [d.to_json() for d in ds]}
    if what == "rational":
        _need(args, "n")
        shapes = [_shape(args)] if args.shape else lambda0(r, s, args.n)
        out = []
        for sh in shapes:
            try:
                rat = tensor.enumerate_rational(sh, args.n)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            count = tensor.tau_count(sh, args.n)
            out.append({"shape": sh.to_json(), "count": len(rat), "tau_count": count, "agree": len(rat) == count,
                        "tableaux": [rt.to_json() for rt in rat]})
        return {"r": r, "s": s, "n": args.n, "shapes": out}
    raise UsageError(f"unknown enumeration {what!r}")


def cmd_element(args) -> dict:
    action = args.action
    if action == "build":
        _need(args, "r", "s")
        sh = _shape(args)
        B = cellbasis.walled_basis(args.r, args.s)
        if args.kind == "mlambda":
            return B.m_lambda_mu(sh).to_json()
        triples = B.triples[sh]
        try:
            L, R = triples[args.left], triples[args.right]
        except IndexError as exc:
            raise UsageError(f"--left/--right must be below {len(triples)}") from exc
        idx = cellbasis.CellBasisIndex(sh, L, R)
        if args.kind == "m":
            return B.element(idx).to_json()
        return cellbasis.build_c_element(idx, args.r, args.s).to_json()
    if action == "multiply":
        if not args.a or not args.b:
            raise UsageError("multiply needs --a and --b")
        a, b = _load_element(args.a), _load_element(args.b)
        if a.bottom != b.top:
            raise UsageError("element types do not compose")
        return multiply(a, b).to_json()
    if action == "star":
        if not args.a:
            raise UsageError("star needs --a")
        return star(_load_element(args.a)).to_json()
    if action == "expand":
        if not args.a:
            raise UsageError("expand needs --a")
        a = _load_element(args.a)
        r, s = a.top.count("d"), a.top.count("u")
        if a.top != a.bottom or a.top != "d" * r + "u" * s:
            raise UsageError("expand needs an element of a walled Brauer algebra")
        B = cellbasis.walled_basis(r, s)
        coords = B.expand(a, check=True)
        return {
            "r": r,
            "s": s,
            "coordinates": [
                {"shape": B.indices[j].shape.to_json(), "left": B.indices[j].left.to_json(),
                 "right": B.indices[j].right.to_json(), "coeff": [c if isinstance(c, int) else str(c) for c in coeff_list(v)]}
                for j, v in sorted(coords.items())
            ],
        }
    raise UsageError(f"unknown element action {action!r}")


def _restriction_worker(item):
    r, s, shape_json = item
    return cellbasis.verify_restriction(r, s, [ShapePair.from_json(shape_json)])


def _annihilator_worker(item):
    return tensor.annihilator_check(*item)


def cmd_verify(args) -> dict:
    what = args.what
    if what == "cellular":
        _need(args, "r", "s")
        return cellbasis.verify_cellularity(args.r, args.s)
    if what == "restriction":
        _need(args, "r", "s")
        shapes = [_shape(args)] if args.shape else enumerate_shapes(args.r, args.s)
        parts = _pmap(_restriction_worker, [(args.r, args.s, sh.to_json()) for sh in shapes], args.jobs)
        filtrations = [f for p in parts for f in p["filtrations"]]
        violations = [v for p in parts for v in p["violations"]]
        return {"check": "restriction", "r": args.r, "s": args.s, "filtrations": filtrations,
                "agree": not violations, "violations": violations}
    if what == "annihilator":
        _need(args, "r", "s")
        ns = [args.n] if args.n is not None else list(range(1, args.r + args.s + 2))
        if min(ns) < 1:
            raise UsageError("--n must be positive")
        rows = _pmap(_annihilator_worker, [(args.r, args.s, n) for n in ns], args.jobs)
        return {"check": "annihilator", "r": args.r, "s": args.s, "results": rows, "agree": all(x["agree"] for x in rows)}
    if what == "quotient":
        _need(args, "r", "s", "n")
        return cellbasis.verify_weak_cellularity_of_quotient(args.r, args.s, args.n)
    if what == "filtration":
        _need(args, "r", "s", "n")
        out = tensor.filtration_check(args.r, args.s, args.n)
        out["mixed_basis"] = tensor.mixed_basis_check(args.r, args.s, args.n)
        return out
    if what == "ordinary":
        _need(args, "m", "n")
        return {"basis": tensor.ordinary_check(args.m, args.n), "annihilator": tensor.sym_annihilator_check(args.m, args.n)}
    if what == "schur-weyl":
        _need(args, "r", "s", "n")
        return tensor.schur_weyl_check(args.r, args.s, args.n)
    if what == "rational":
        _need(args, "r", "s", "n")
        return tensor.rational_check(args.r, args.s, args.n)
    if what == "functoriality":
        _need(args, "r", "s", "n")
        return functoriality(args.r, args.s, args.n, args.samples, args.seed)
    raise UsageError(f"unknown check {what!r}")


def functoriality(r: int, s: int, n: int, samples: int, seed: int) -> dict:
    """``M(ab) = M(a)M(b)`` on random pairs of integer combinations of diagrams."""
    rng = random.Random(seed)
    ds = enumerate_walled(r, s)
    bad = 0
    for _ in range(samples):
        pair = []
        for _ in range(2):
            picks = rng.sample(ds, min(3, len(ds)))
            pair.append(Element(ds[0].top, ds[0].bottom, {d: rng.randint(-3, 3) for d in picks}))
        a, b = pair
        lhs = tensor.action_matrix(multiply(a, b), n)
        rhs = tensor.sparse_matmul(tensor.action_matrix(a, n), tensor.action_matrix(b, n))
        bad += lhs != rhs
    return {"check": "functoriality", "r": r, "s": s, "n": n, "samples": samples, "seed": seed, "failures": bad,
            "agree": bad == 0}


def cmd_annihilator(args) -> dict:
    _need(args, "r", "s", "n")
    rank, _ = tensor.annihilator(args.r, args.s, args.n)
    formula = count_ranks(args.r, args.s, args.n)[2]
    return {"rank": rank, "formula_rank": formula, "agree": rank == formula}


def cmd_render(args) -> dict | str:
    if args.a:
        a = _load_element(args.a)
        pieces = [f"{c} *\n{render(d)}" for d, c in sorted(a.terms.items(), key=lambda kv: kv[0].match)]
        return "\n\n".join(pieces)
    _need(args, "r", "s")
    ds = enumerate_walled(args.r, args.s)
    if not 0 <= args.index < len(ds):
        raise UsageError(f"--index must be below {len(ds)}")
    return render(ds[args.index])


# -- parser -------------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--shape", help='e.g. "lam=2,1;mu=1"')
    p.add_argument("--out", help="write the report to FILE")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument("--pretty", dest="format", action="store_const", const="pretty")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="walled-brauer", description="Exact computations in walled Brauer algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="ranks and cell-module dimensions")
    _common(p)

    p = sub.add_parser("enumerate", help="list shapes, triples, diagrams or rational tableaux")
    p.add_argument("what", choices=("shapes", "triples", "diagrams", "rational"))
    _common(p)

    p = sub.add_parser("element", help="build, multiply, expand or reflect elements")
    p.add_argument("action", choices=("build", "multiply", "expand", "star"))
    p.add_argument("kind", nargs="?", choices=("m", "c", "mlambda"), default="m")
    p.add_argument("--left", type=int, default=0, help="position of the left triple")
    p.add_argument("--right", type=int, default=0, help="position of the right triple")
    p.add_argument("--a", help="element JSON file")
    p.add_argument("--b", help="element JSON file")
    _common(p)

    p = sub.add_parser("verify", help="run a verification and report agreement")
    p.add_argument("what", choices=("cellular", "restriction", "annihilator", "quotient", "filtration", "ordinary",
                                    "schur-weyl", "rational", "functoriality"))
    p.add_argument("--m", type=int, help="tensor degree for the ordinary check")
    p.add_argument("--samples", type=int, default=20)
    _common(p)

    p = sub.add_parser("annihilator", help="annihilator rank against the counting formula")
    _common(p)

    p = sub.add_parser("render", help="ASCII picture of a walled diagram or an element")
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--a", help="element JSON file")
    _common(p)
    return parser


COMMANDS = {
    "dims": cmd_dims,
    "enumerate": cmd_enumerate,
    "element": cmd_element,
    "verify": cmd_verify,
    "annihilator": cmd_annihilator,
    "render": cmd_render,
}


def run(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        report = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(report, str):
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(report + "\n")
        else:
            print(report)
        return EXIT_OK
    return _emit(report, args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
