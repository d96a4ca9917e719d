"""Command-line interface.

Every invocation produces one document::

    {"command": ..., "inputs": {...}, "status": "ok" | "property-false" | "invalid-input",
     "result": {...}, "meta": {"version": ..., "oracle": bool, "bounds": {...}}}

``--json`` prints it as JSON. Plain output prints only ``result``, one
``key: value`` line per field: integer lists are comma-joined, booleans are
``true``/``false``, ``null`` is ``undefined``, and nested lists or objects
are flattened with dotted keys (``classes.0.strict_rep: 4``). The
``diagram`` command prints its rows verbatim, followed by any other fields. Partitions always use
the comma-separated canonical form, the empty partition being the empty
string.

Exit codes: 0 ok, 1 a predicate (``eq``, ``contains``, ``wilf``) is false,
2 invalid input.

``classes N --export FILE`` writes ``{"n": N, "classes": [record, ...]}``
with one record ``{n, strict_rep, members, m_signature_entries}`` per class;
``m_signature_entries`` lists ``i + mu_i`` for rows ``1..N`` and is the same
for every member of the class.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from rookeq import __version__
from rookeq.errors import RookeqError
from rookeq.oracles import (
    deletion_certificate,
    max_nested_weight_oracle,
    rook_numbers_exhaustive,
)
from rookeq.partition import Box, Partition, durfee_rank, parse_partition, render_diagram
from rookeq.rook import m_signature, rook_classes, rook_equivalent, rook_numbers, strict_normal_form
from rookeq.salient import (
    l_boxes,
    max_nested_weight,
    s_signature,
    salient_rows,
    staircase_rank,
    w_vector,
)
from rookeq.transforms import i1_path, ij_transform, replay
from rookeq.wilf import (
    ExtensionPair,
    containment_witness,
    count_containing,
    count_containing_top,
    distinguishing_weight,
    extend,
    first_difference,
    wilf_equivalent_up_to,
)

OK, FALSE, INVALID = "ok", "property-false", "invalid-input"
EXIT_CODES = {OK: 0, FALSE: 1, INVALID: 2}

DEFAULT_CLASS_BOUND = 40
DEFAULT_ORACLE_BOUND = 16


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    as_json: bool = False

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class UsageError(RookeqError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except RookeqError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _corner(text: str) -> Box:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"corner must be 'row,col', got {text!r}") from None
    return Box(i, j)


def _global_flags(parser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=default or False,
                        help="print the structured document")
    parser.add_argument("--oracle", action="store_true", default=default or False,
                        help="use the brute-force algorithms")
    parser.add_argument("--max", type=int, default=default, metavar="K",
                        help="size bound for class and oracle commands")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rookeq", description="Rook equivalence of Ferrers boards.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    P = _partition

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = add("eq", "are A and B rook equivalent?")
    p.add_argument("a", type=P)
    p.add_argument("b", type=P)
    p = add("normalize", "strict partition rook equivalent to A")
    p.add_argument("a", type=P)
    p = add("rook", "rook numbers of A")
    p.add_argument("a", type=P)
    p = add("classes", "rook-equivalence classes of partitions of N")
    p.add_argument("n", type=int)
    p.add_argument("--export", metavar="FILE")
    p = add("salient", "salient rows, S-multiset and staircase rank of A")
    p.add_argument("a", type=P)
    p = add("wk", "maximum weights of nested L's in A")
    p.add_argument("a", type=P)
    p.add_argument("k", type=int, nargs="?")
    p = add("transform", "(I,J)-transform of A")
    p.add_argument("a", type=P)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p = add("path", "shortest chain of (i,1)-transforms from A to B")
    p.add_argument("a", type=P)
    p.add_argument("b", type=P)
    p = add("contains", "does A contain B as a pattern?")
    p.add_argument("a", type=P)
    p.add_argument("b", type=P)
    p = add("count", "number of partitions of N containing A")
    p.add_argument("n", type=int)
    p.add_argument("a", type=P)
    p = add("count-top", "same, restricted to first part A_1 + K")
    p.add_argument("n", type=int)
    p.add_argument("a", type=P)
    p.add_argument("k", type=int)
    p = add("extend", "extension of A by columns C and rows R")
    p.add_argument("a", type=P)
    p.add_argument("--cols", type=P, default=parse_partition(""))
    p.add_argument("--rows", type=P, default=parse_partition(""))
    p = add("distinguish", "weight where two strict partitions have different counts")
    p.add_argument("a", type=P)
    p.add_argument("b", type=P)
    p.add_argument("--counts", action="store_true", help="also compute both counts")
    p = add("wilf", "equal containment counts for every weight up to N?")
    p.add_argument("a", type=P)
    p.add_argument("b", type=P)
    p.add_argument("n", type=int)
    p = add("diagram", "draw A, optionally highlighting L's")
    p.add_argument("a", type=P)
    p.add_argument("--L", dest="corners", type=_corner, action="append", default=[],
                   metavar="ROW,COL", help="corner of an L to highlight (repeatable)")
    return parser


def _bound(args, default: int) -> int:
    return args.max if args.max is not None else default


def _check_oracle_size(args, *weights: int):
    limit = _bound(args, DEFAULT_ORACLE_BOUND)
    for w in weights:
        if w > limit:
            raise UsageError(f"oracle limited to weight {limit}, got weight {w} (raise it with --max)")


def _eq(args):
    a, b = args.a, args.b
    if args.oracle:
        _check_oracle_size(args, a.weight, b.weight)
        va, vb = rook_numbers_exhaustive(a), rook_numbers_exhaustive(b)
        equal = va == vb
        res = {"rook_numbers_a": list(va), "rook_numbers_b": list(vb)}
    else:
        equal = rook_equivalent(a, b)
        res = {}
    res = {"verdict": "equivalent" if equal else "not equivalent", "equivalent": equal,
           "strict_form_a": str(strict_normal_form(a)),
           "strict_form_b": str(strict_normal_form(b)), **res}
    return (OK if equal else FALSE), res


def _normalize(args):
    return OK, {"strict_form": str(strict_normal_form(args.a))}


def _rook(args):
    if args.oracle:
        _check_oracle_size(args, args.a.weight)
        return OK, {"rook_numbers": list(rook_numbers_exhaustive(args.a))}
    return OK, {"rook_numbers": list(rook_numbers(args.a))}


def _classes(args):
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.oracle:
        limit = _bound(args, DEFAULT_ORACLE_BOUND)
        key = rook_numbers_exhaustive
    else:
        limit = _bound(args, DEFAULT_CLASS_BOUND)
        key = None
    if args.n > limit:
        raise UsageError(f"n = {args.n} exceeds the bound {limit} (raise it with --max)")
    classes = rook_classes(args.n, key=key) if key else rook_classes(args.n)
    records = [c.to_record() for c in classes]
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            json.dump({"n": args.n, "classes": records}, fh, indent=2)
            fh.write("\n")
    return OK, {"n": args.n, "count": len(records), "classes": records}


def _salient(args):
    a = args.a
    return OK, {
        "salient_rows": sorted(salient_rows(a)),
        "s_signature": list(s_signature(a).entries),
        "staircase_rank": staircase_rank(a),
        "durfee_rank": durfee_rank(a),
        "m_signature": list(m_signature(a).entries),
    }


def _wk(args):
    a = args.a
    if args.oracle:
        _check_oracle_size(args, a.weight)
        weight = max_nested_weight_oracle
    else:
        weight = max_nested_weight
    if args.k is not None:
        if args.k < 1:
            raise UsageError("k must be positive")
        return OK, {"k": args.k, "w_k": weight(a, args.k)}
    if args.oracle:
        vec = []
        while (w := weight(a, len(vec) + 1)) is not None:
            vec.append(w)
    else:
        vec = w_vector(a)
    return OK, {"w_vector": vec, "staircase_rank": staircase_rank(a)}


def _transform(args):
    return OK, {"result": str(ij_transform(args.a, args.i, args.j))}


def _path(args):
    steps = i1_path(args.a, args.b)
    return OK, {"length": len(steps), "steps": replay(args.a, steps)}


def _contains(args):
    host, pattern = args.a, args.b
    if args.oracle:
        _check_oracle_size(args, host.weight)
        cert = deletion_certificate(host, pattern)
        rows, cols = cert if cert else ((), ())
        found = cert is not None
    else:
        w = containment_witness(host, pattern) if len(pattern) <= len(host) else None
        found = w is not None
        rows, cols = (w.kept_rows, w.kept_columns) if w else ((), ())
    res = {"contains": found}
    if found:
        res.update(kept_rows=list(rows), kept_columns=list(cols))
    return (OK if found else FALSE), res


def _nonneg(n):
    if n < 0:
        raise UsageError("n must be nonnegative")


def _count(args):
    _nonneg(args.n)
    if args.oracle:
        _check_oracle_size(args, args.n)
    c = count_containing(args.n, args.a, oracle=args.oracle)
    return OK, {"n": args.n, "mu": str(args.a), "count": c}


def _count_top(args):
    _nonneg(args.n)
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    if args.oracle:
        _check_oracle_size(args, args.n)
    c = count_containing_top(args.n, args.a, args.k, oracle=args.oracle)
    return OK, {"n": args.n, "mu": str(args.a), "k": args.k, "count": c}


def _extend(args):
    pair = ExtensionPair(args.cols, args.rows)
    return OK, {"extension": str(extend(args.a, pair)), "k": pair.k,
                "added_weight": pair.weight}


def _distinguish(args):
    d = distinguishing_weight(args.a, args.b)
    res = d.to_record()
    if args.counts:
        res["count_smaller"] = count_containing(d.weight, d.smaller)
        res["count_larger"] = count_containing(d.weight, d.larger)
    return OK, res


def _wilf(args):
    if args.n < 1:
        raise UsageError("N must be positive")
    equal = wilf_equivalent_up_to(args.a, args.b, args.n, oracle=args.oracle)
    res = {"equal_counts": equal}
    if not equal:
        res["first_difference"] = first_difference(args.a, args.b, args.n)
    return (OK if equal else FALSE), res


def _diagram(args):
    highlights = [(l_boxes(args.a, c), chr(ord("a") + t)) for t, c in enumerate(args.corners)]
    text = render_diagram(args.a, highlights)
    res = {"rows": text.split("\n") if text else []}
    if args.corners:
        res["highlighted"] = sum(len(b) for b, _ in highlights)
    return OK, res


HANDLERS = {
    "eq": _eq, "normalize": _normalize, "rook": _rook, "classes": _classes,
    "salient": _salient, "wk": _wk, "transform": _transform, "path": _path,
    "contains": _contains, "count": _count, "count-top": _count_top,
    "extend": _extend, "distinguish": _distinguish, "wilf": _wilf, "diagram": _diagram,
}


def _jsonable(v):
    if isinstance(v, Partition):
        return str(v)
    return v


def _inputs(args) -> dict:
    skip = {"command", "json", "oracle", "max"}
    out = {}
    for k, v in vars(args).items():
        if k in skip:
            continue
        if k == "corners":
            v = [f"{b.row},{b.col}" for b in v]
        out[k] = _jsonable(v)
    return out


def run(argv: list[str]) -> CommandResult:
    """Parse ``argv``, execute the subcommand and return its document."""
    meta = {"version": __version__}
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return CommandResult(INVALID, {"command": None, "inputs": {"argv": list(argv)},
                                       "status": INVALID, "result": {"error": str(e)},
                                       "meta": meta})
    bounds = {"max": args.max, "classes": _bound(args, DEFAULT_CLASS_BOUND),
              "oracle": _bound(args, DEFAULT_ORACLE_BOUND)}
    meta.update(oracle=args.oracle, bounds=bounds)
    doc = {"command": args.command, "inputs": _inputs(args)}
    try:
        status, result = HANDLERS[args.command](args)
    except RookeqError as e:
        status, result = INVALID, {"error": str(e)}
    doc.update(status=status, result=result, meta=meta)
    return CommandResult(status, doc, as_json=args.json)


def _scalar(v) -> str:
    if v is None:
        return "undefined"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def plain_lines(result: dict, prefix: str = ""):
    """Flatten ``result`` into ``key: value`` lines (see module docstring)."""
    for k, v in result.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from plain_lines(v, key + ".")
        elif isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            yield f"{key}: {','.join(str(x) for x in v)}"
        elif isinstance(v, list):
            yield from plain_lines({str(i): x for i, x in enumerate(v)}, key + ".")
        else:
            yield f"{key}: {_scalar(v)}"


def render(res: CommandResult, as_json: bool) -> str:
    doc = res.payload
    if as_json:
        return json.dumps(doc, indent=2)
    if doc.get("command") == "diagram" and res.status == OK:
        extra = {k: v for k, v in doc["result"].items() if k != "rows"}
        return "\n".join([*doc["result"]["rows"], *plain_lines(extra)])
    return "\n".join(plain_lines(doc["result"]))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    res = run(argv)
    # a parse failure never sets as_json, so look for the flag directly
    as_json = res.as_json or "--json" in argv
    out = render(res, as_json)
    stream = sys.stderr if res.status == INVALID and not as_json else sys.stdout
    if out:
        print(out, file=stream)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
