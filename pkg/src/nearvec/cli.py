"""Command-line surface.

Every command prints deterministic text, or with --json a document of
the shape {"nearfield": {"q", "n"}, "input": ..., "result": ..., "trace": ...}
with stable key order.  Exit codes: 0 ok, 1 domain error (single
machine-parsable line on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from .closure import BudgetExceededError, VectorSet, gen_closure, lc_index, unpack_vector
from .counting import count_subgroups
from .ege import ege, replay, trace_from_text, trace_to_text
from .linmaps import MapRep, classify, is_bijective, linear_violation, count_maps
from .nearfield import build_nearfield
from .seeds import build_seed, verify_seed
from .vectors import NfMatrix, matrix_format, matrix_parse


def _emit(args, nf, input_doc, result, text_lines, trace=None):
    if args.json:
        doc = {"nearfield": {"q": nf.q, "n": nf.n}, "input": input_doc, "result": result}
        if trace is not None:
            doc["trace"] = trace
        print(json.dumps(doc, separators=(", ", ": ")))
    else:
        for ln in text_lines:
            print(ln)
    return 0


def _read_matrix(path: str) -> NfMatrix:
    return matrix_parse(Path(path).read_text())


def _matrix_tokens(M: NfMatrix, style: str = "poly"):
    return [[M.nf.format_element(a, style) for a in row] for row in M.rows]


def _cmd_table(args):
    nf = build_nearfield(args.q, args.n)
    table = nf.mul_table() if args.op == "mul" else nf.add_table()
    fmt = lambda a: nf.format_element(a, args.style)
    labels = [fmt(a) for a in nf.elements]
    width = max(len(s) for s in labels)
    head = args.op.rjust(width)
    lines = [" ".join([head] + [s.rjust(width) for s in labels])]
    for a in nf.elements:
        lines.append(" ".join([labels[a].rjust(width)] + [fmt(x).rjust(width) for x in table[a]]))
    result = {"op": args.op, "table": [[fmt(x) for x in row] for row in table]}
    return _emit(args, nf, {"q": args.q, "n": args.n}, result, lines)


def _cmd_witness(args):
    nf = build_nearfield(args.q, args.n)
    w = nf.find_witness()
    if w is None:
        return _emit(args, nf, {"q": args.q, "n": args.n}, {"witness": None}, ["none"])
    trip = [nf.format_element(x) for x in (w.alpha, w.beta, w.lam)]
    result = {"witness": {"alpha": trip[0], "beta": trip[1], "lambda": trip[2]}}
    return _emit(args, nf, {"q": args.q, "n": args.n}, result, [" ".join(trip)])


def _cmd_ege(args):
    M = _read_matrix(args.file)
    D = ege(M)
    lines = [f"dimension {D.dimension}", f"canonical {'true' if D.canonical else 'false'}"]
    lines += [" ".join(tok) for tok in _matrix_tokens(D.basis)]
    trace_text = trace_to_text(M.nf, D.trace)
    trace_lines = trace_text.splitlines()
    if args.trace:
        lines += ["trace:"] + trace_lines
    result = {
        "dimension": D.dimension,
        "canonical": D.canonical,
        "basis": _matrix_tokens(D.basis),
    }
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)}, result, lines,
                 trace=trace_lines if args.trace else None)


def _cmd_replay(args):
    M = _read_matrix(args.file)
    steps = trace_from_text(M.nf, Path(args.tracefile).read_text())
    R = replay(M, steps)
    lines = [" ".join(tok) for tok in _matrix_tokens(R)]
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)}, {"rows": _matrix_tokens(R)}, lines)


def _cmd_gen(args):
    M = _read_matrix(args.file)
    closure = gen_closure(VectorSet.from_vectors(M.nf, M.width, M.rows))
    size = len(closure)
    spans = size == M.nf.order ** M.width
    lines = [f"size {size}", f"spans_space {'true' if spans else 'false'}"]
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)},
                 {"size": size, "spans_space": spans}, lines)


def _cmd_lc_index(args):
    M = _read_matrix(args.file)
    idx = lc_index(M.nf, M.rows)
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)}, {"index": idx}, [f"index {idx}"])


def _cmd_classify_map(args):
    M = _read_matrix(args.file)
    if M.n_rows != M.width:
        raise ValueError("map matrix must be square")
    T = MapRep(M.nf, M.width, M.rows)
    cls = classify(T)
    bij = is_bijective(T)
    lines = [f"class {cls.value}", f"bijective {'true' if bij else 'false'}"]
    result = {"class": cls.value, "bijective": bij}
    if cls.value == "hom_only":
        v, r = linear_violation(T)
        pair = {"v": [M.nf.format_element(a) for a in v], "r": M.nf.format_element(r)}
        result["violating_pair"] = pair
        lines.append(f"violating_pair ({','.join(pair['v'])}) {pair['r']}")
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)}, result, lines)


def _cmd_count_maps(args):
    nf = build_nearfield(args.q, args.n)
    method = "closed_form" if args.method == "closed" else "enumeration"
    c = count_maps(nf, args.dim, args.kind, method)
    return _emit(args, nf, {"dim": args.dim, "kind": args.kind},
                 {"count": c, "method": method}, [str(c)])


def _cmd_count_subgroups(args):
    nf = build_nearfield(args.q, args.n)
    c = count_subgroups(args.m, args.k, nf.order)
    return _emit(args, nf, {"m": args.m, "k": args.k}, {"count": c}, [str(c)])


def _cmd_seed(args):
    nf = build_nearfield(args.q, args.n)
    sm = build_seed(args.m, nf)
    header = (
        f"q={nf.q} n={nf.n} m={args.m} k={sm.k} "
        f"s_order={','.join(str(s) for s in sm.s_order)}"
    )
    text = matrix_format(sm.matrix, comments=(header,))
    result = {"m": args.m, "k": sm.k, "rows": _matrix_tokens(sm.matrix)}
    return _emit(args, nf, {"m": args.m}, result, text.splitlines())


def _cmd_verify_seed(args):
    M = _read_matrix(args.file)
    ok = verify_seed(M)
    return _emit(args, M.nf, {"rows": _matrix_tokens(M)}, {"seed": ok},
                 ["true" if ok else "false"])


def _cmd_search_index(args):
    nf = build_nearfield(args.q, args.n)
    space = nf.order ** args.m
    nonzero = range(1, space)
    searched = spanning = 0
    max_index = 0
    first_max = None
    exceeding = []
    combos = itertools.combinations(nonzero, args.k)
    if args.limit is not None:
        combos = itertools.islice(combos, args.limit)
    for combo in combos:
        searched += 1
        vectors = [unpack_vector(nf, args.m, c) for c in combo]
        try:
            idx = lc_index(nf, vectors)
        except ValueError:
            continue
        spanning += 1
        if idx > max_index:
            max_index = idx
            first_max = vectors
        if idx > args.bound and len(exceeding) < 10:
            exceeding.append([[nf.format_element(a) for a in v] for v in vectors])
    fmt_first = (
        [[nf.format_element(a) for a in v] for v in first_max] if first_max else None
    )
    result = {
        "searched": searched,
        "spanning": spanning,
        "max_index": max_index,
        "first_max": fmt_first,
        "exceeding": exceeding,
    }
    lines = [
        f"searched {searched}",
        f"spanning {spanning}",
        f"max_index {max_index}",
        f"exceeding_bound {len(exceeding)}",
    ]
    return _emit(args, nf, {"m": args.m, "k": args.k, "bound": args.bound}, result, lines)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nearvec",
        description="Exact computation in finite Dickson nearfields and the near-vector spaces R^m.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(fn=fn)
        return p

    p = add("table", _cmd_table, "print the full operation table of DN(q,n)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--op", choices=("mul", "add"), default="mul")
    p.add_argument("--style", choices=("poly", "code"), default="poly")

    p = add("witness", _cmd_witness, "first right-distributivity violation of DN(q,n)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)

    p = add("ege", _cmd_ege, "decompose gen(rows) via expanded Gaussian elimination")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="include the step trace")

    p = add("replay", _cmd_replay, "apply a recorded trace to a matrix file")
    p.add_argument("file")
    p.add_argument("tracefile")

    p = add("gen", _cmd_gen, "brute-force closure of the rows of a matrix file")
    p.add_argument("file")

    p = add("lc-index", _cmd_lc_index, "index of R-linearity of the rows of a matrix file")
    p.add_argument("file")

    p = add("classify-map", _cmd_classify_map, "classify the map given by a square matrix file")
    p.add_argument("file")

    p = add("count-maps", _cmd_count_maps, "count maps of R^dim by kind")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("dim", type=int)
    p.add_argument("kind", choices=("all", "linear", "normal"))
    p.add_argument("--method", choices=("closed", "enum"), default="closed")

    p = add("count-subgroups", _cmd_count_subgroups, "count R-subgroups of R^m of dimension k")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)

    p = add("seed", _cmd_seed, "construct the seed matrix V_m (emits the matrix file format)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)

    p = add("verify-seed", _cmd_verify_seed, "check gen(rows) = R^m for a matrix file")
    p.add_argument("file")

    p = add("search-index", _cmd_search_index,
            "scan k-subsets of nonzero vectors of R^m for linearity index above a bound")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("bound", type=int)
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many combinations (deterministic prefix)")

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, BudgetExceededError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
