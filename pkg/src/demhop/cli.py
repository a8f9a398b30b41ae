"""
Command-line front end.

Exit status is 0 on success, 1 when a verification suite finds a
counterexample, and 2 when the input cannot be parsed or validated.

>>> main(["product", "-f", "d", "-n", "5", "[2,-4,-1,5,3]", "[-4,3,-5,-1,-2]"])
[-1,-3,-4,-2,5]
0
>>> main(["product", "-f", "a", "6541723", "5436217", "--json"])
{"family": "A", "rank": 7, "left": [6, 5, 4, 1, 7, 2, 3], "right": [5, 4, 3, 6, 2, 1, 7], "product": [7, 6, 5, 4, 2, 1, 3], "method": "hopping"}
0
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .cayley import build_table
from .demazure import Element, hop_chain, product
from .errors import DemhopError
from .hopping import lift
from .notation import format_window, format_word, parse_family, parse_window
from .parabolic import decompose_d
from .verify import DEFAULT_SEED, SUITES, run_suite

__all__ = ["CliRequest", "build_parser", "run", "main"]

METHODS = ("hopping", "oracle", "unfolded", "plain")


@dataclass
class CliRequest:
    subcommand: str
    family: str
    rank: int | None = None
    windows: tuple[str, ...] = ()
    method: str = "hopping"
    output: str = "text"
    trace: bool = False
    suite: str | None = None
    sample: int | None = None
    seed: int = DEFAULT_SEED


def _compact(family: str, w: Sequence[int]) -> str:
    """Type-A windows of rank at most 9 are written as digit strings."""
    if family == "A" and len(w) <= 9:
        return "".join(str(x) for x in w)
    return format_window(w)


def _parse_elements(req: CliRequest, count: int) -> list[Element]:
    if len(req.windows) != count:
        raise DemhopError(f"{req.subcommand} takes {count} window(s), got {len(req.windows)}")
    n = req.rank
    if n is None:
        known = [w for w in req.windows if w.strip().lower() != "id"]
        if not known:
            raise DemhopError("pass -n/--rank when every window is 'id'")
        n = len(parse_window(known[0]))
    return [Element(req.family, parse_window(w, n)) for w in req.windows]


def _chain_lines(family: str, w, v) -> tuple[list[str], list[dict]]:
    start, steps = hop_chain(family, w, v)
    lines = [f"{_compact(family, w)} {_compact(family, v)} = {_compact(family, start)}"]
    records = []
    for i, L, trace in steps:
        tag = "" if trace.steps else "   (trivial)"
        lines.append(f"  →_{{h_{{{i},{format_window(L)}}}}} {_compact(family, trace.result)}{tag}")
        records.append({
            "i": i, "list": list(L), "result": list(trace.result),
            "steps": json.loads(trace.to_json()),
        })
    return lines, records


def _product(req: CliRequest, out) -> int:
    u, v = _parse_elements(req, 2)
    res = product(u, v, req.method)
    want_trace = req.trace or req.subcommand == "trace"
    if want_trace and req.method != "hopping":
        raise DemhopError("--trace is only available with --method hopping")
    lines, records = _chain_lines(req.family, u.window, v.window) if want_trace else ([], [])
    if req.output == "json":
        payload = {
            "family": req.family, "rank": u.rank, "left": list(u.window), "right": list(v.window),
            "product": list(res.window), "method": req.method,
        }
        if want_trace:
            payload["trace"] = records
        print(json.dumps(payload), file=out)
    else:
        for line in lines:
            print(line, file=out)
        print(format_window(res.window), file=out)
    return 0


def _decompose(req: CliRequest, out) -> int:
    if req.family != "D":
        raise DemhopError("decompose is defined for type D only")
    (w,) = _parse_elements(req, 1)
    d = decompose_d(w.window)
    if req.output == "json":
        print(d.to_json(), file=out)
    else:
        for q in d.factors:
            print(f"{q.describe(d.n)}  {format_window(q.window(d.n))}", file=out)
    return 0


def _lift(req: CliRequest, out) -> int:
    (w,) = _parse_elements(req, 1)
    n = w.rank
    top = n if req.family == "B" else n - 1
    rows = []
    for i in range(1, top + 1):
        row = {"i": i, "lift": list(lift(req.family, w.window, i))}
        if req.family == "B":
            row["product_order"] = list(lift("B", w.window, i, product_order=True))
        rows.append(row)
    if req.output == "json":
        print(json.dumps(rows), file=out)
        return 0
    for row in rows:
        text = f"w↖{row['i']} = {format_window(row['lift'])}"
        if "product_order" in row and row["product_order"] != row["lift"]:
            text += f"   (product order {format_window(row['product_order'])})"
        print(text, file=out)
    return 0


def _verify(req: CliRequest, out) -> int:
    if req.suite is None:
        raise DemhopError(f"--suite is required; choose from {', '.join(SUITES)}")
    if req.rank is None:
        raise DemhopError("verify needs -n/--rank")
    res = run_suite(req.suite, req.family, req.rank, sample=req.sample, seed=req.seed)
    if req.output == "json":
        print(json.dumps({
            "suite": res.suite, "family": res.family, "rank": res.rank, "unit": res.unit,
            "checked": res.checked, "passed": res.passed, "counterexample": res.counterexample,
            "notes": res.notes,
        }), file=out)
    else:
        print(res.summary(), file=out)
        if not res.ok or res.notes:
            print(res.report(), file=out)
    return 0 if res.ok else 1


def _enumerate(req: CliRequest, out) -> int:
    if req.rank is None:
        raise DemhopError("enumerate needs -n/--rank")
    table = build_table(req.family, req.rank)
    if req.output == "json":
        print(json.dumps([
            {"window": list(w), "length": int(table.length[i]), "word": list(table.word_of_index(i))}
            for i, w in enumerate(table.elements)
        ]), file=out)
    else:
        for line in table.dump():
            print(line, file=out)
    return 0


_HANDLERS = {
    "product": _product,
    "trace": _product,
    "decompose": _decompose,
    "lift": _lift,
    "verify": _verify,
    "enumerate": _enumerate,
}


def run(req: CliRequest, out=None) -> int:
    return _HANDLERS[req.subcommand](req, out if out is not None else sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demhop", description="Demazure products of permutations and signed permutations by hopping."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--family", default="a", help="a, b or d (default a)")
    common.add_argument("-n", "--rank", type=int, help="rank; inferred from the first window if omitted")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("product", parents=[common], help="u ⋆ v (or uv with --method plain)")
    p.add_argument("windows", nargs=2, metavar="WINDOW")
    p.add_argument("--method", choices=METHODS, default="hopping")
    p.add_argument("--trace", action="store_true", help="also print the hopping chain")

    p = sub.add_parser("trace", parents=[common], help="the hopping chain of u ⋆ v")
    p.add_argument("windows", nargs=2, metavar="WINDOW")

    p = sub.add_parser("decompose", parents=[common], help="type-D factorization Q_{n-1}...Q_1")
    p.add_argument("windows", nargs=1, metavar="WINDOW")

    p = sub.add_parser("lift", parents=[common], help="the lifted lists w↖i for every i")
    p.add_argument("windows", nargs=1, metavar="WINDOW")

    p = sub.add_parser("verify", parents=[common], help="check an identity against the oracle")
    p.add_argument("--suite", choices=list(SUITES), required=True)
    p.add_argument("--sample", type=int, help="sample size instead of the exhaustive domain")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sub.add_parser("enumerate", parents=[common], help="dump the group table")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        req = CliRequest(
            subcommand=args.subcommand,
            family=parse_family(args.family),
            rank=args.rank,
            windows=tuple(getattr(args, "windows", ())),
            method=getattr(args, "method", "hopping"),
            output="json" if args.json else "text",
            trace=getattr(args, "trace", False),
            suite=getattr(args, "suite", None),
            sample=getattr(args, "sample", None),
            seed=getattr(args, "seed", DEFAULT_SEED),
        )
        return run(req)
    except DemhopError as exc:
        print(f"demhop: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
