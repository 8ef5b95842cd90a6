"""Command-line front end.

Exit status: 0 on success or a true verdict, 1 on a false or refuted
verdict, 2 on errors.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import derivation as em
from . import intervals as iv
from . import ordinal as od
from . import partition as pf
from .expr import ExprSyntaxError, parse_ordinal, render
from .serialize import (
    SCHEMA_VERSION,
    coloring_from_json,
    coloring_to_json,
    derivation_from_json,
    derivation_to_json,
    interval_set_to_json,
    ordinal_to_json,
    statement_to_json,
)

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

# (exit code, text for humans, JSON result payload)
Outcome = Tuple[int, str, Any]


class CliError(Exception):
    pass


def _ord(text: str) -> od.Ordinal:
    return parse_ordinal(text)


def _ord_list(text: str) -> List[od.Ordinal]:
    # split on top-level commas so "w^(w+1),3" works
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        items.append("".join(cur))
    return [_ord(s) for s in items]


def _nat_list(text: str) -> List[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise CliError(f"expected comma-separated naturals, got {text!r}") from exc


def _load_json(path: str, *keys: str) -> Dict[str, Any]:
    """Read a document; a ``cli_output`` envelope is unwrapped via the first matching result key."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise CliError(f"{path}: expected a JSON object")
    if doc.get("kind") != "cli_output":
        return doc
    result = doc.get("result") or {}
    for key in keys:
        if isinstance(result.get(key), dict):
            return result[key]
    raise CliError(f"{path}: command output from {doc.get('command')!r} has no {' or '.join(keys)}")


# ord -----------------------------------------------------------------------

def cmd_ord_eval(a, u) -> Outcome:
    x = _ord(a.expr)
    return EXIT_TRUE, render(x, u), ordinal_to_json(x, u)


def cmd_ord_cmp(a, u) -> Outcome:
    x, y = _ord(a.left), _ord(a.right)
    rel = "<=>"[od.cmp(x, y) + 1]
    return EXIT_TRUE, rel, {"relation": rel, "left": render(x, u), "right": render(y, u)}


def cmd_ord_cnf(a, u) -> Outcome:
    x = _ord(a.expr)
    text = "\n".join(f"{render(e, u)}\t{c}" for e, c in x.terms)
    return EXIT_TRUE, text, ordinal_to_json(x, u)


def cmd_ord_indecomp(a, u) -> Outcome:
    x = _ord(a.expr)
    yes = od.is_indecomposable(x)
    return (EXIT_TRUE if yes else EXIT_FALSE), ("yes" if yes else "no"), {
        "value": render(x, u), "indecomposable": yes}


def cmd_ord_split(a, u) -> Outcome:
    x = _ord(a.expr)
    parts = od.split_decomposable(x)
    if parts is None:
        return EXIT_FALSE, "indecomposable", {"value": render(x, u), "split": None}
    b, c = parts
    return EXIT_TRUE, f"({render(b, u)}, {render(c, u)})", {
        "value": render(x, u), "split": [render(b, u), render(c, u)]}


def cmd_ord_code(a, u) -> Outcome:
    x = _ord(a.expr)
    code = od.godel_code(x)
    return EXIT_TRUE, str(code), {"code": code, "value": render(x, u)}


def cmd_ord_decode(a, u) -> Outcome:
    x = od.godel_decode(a.code)
    if x is None:
        return EXIT_FALSE, "none", {"code": a.code, "value": None}
    return EXIT_TRUE, render(x, u), {"code": a.code, "value": render(x, u)}


# iset ----------------------------------------------------------------------

def cmd_iset_otype(a, u) -> Outcome:
    s = iv.parse_interval_set(a.set)
    return EXIT_TRUE, render(iv.order_type(s), u), interval_set_to_json(s, u)


def cmd_iset_trim(a, u) -> Outcome:
    A, A1 = iv.parse_interval_set(a.A), iv.parse_interval_set(a.A1)
    A2 = iv.trim_above(A, A1, _ord(a.x), _ord(a.alpha))
    return EXIT_TRUE, iv.format_interval_set(A2, u), interval_set_to_json(A2, u)


def cmd_iset_segment(a, u) -> Outcome:
    F = _ord_list(a.F) if a.F else []
    pieces = iv.segment_partition(_ord(a.beta), F)
    text = "\n".join(iv.format_interval_set(p, u) for p in pieces)
    return EXIT_TRUE, text, {"pieces": [interval_set_to_json(p, u) for p in pieces]}


def cmd_iset_strong(a, u) -> Outcome:
    pieces = iv.strong_decompose_set(iv.parse_interval_set(a.D), _ord(a.beta))
    text = "\n".join(f"{iv.format_interval_set(p, u)}\t{render(iv.order_type(p), u)}" for p in pieces)
    return EXIT_TRUE, text, {"pieces": [interval_set_to_json(p, u) for p in pieces]}


# ramsey --------------------------------------------------------------------

def cmd_ramsey_check(a, u) -> Outcome:
    goals = _nat_list(a.goals)
    witness = None
    if a.witness:
        witness = coloring_from_json(_load_json(a.witness, "witness", "sample", "coloring"))
        if not isinstance(witness, pf.TableColoring):
            raise CliError("a refuting witness must be a table coloring")
    res = pf.check_arrow_finite(a.n, goals, cap=a.cap, witness=witness)
    payload = {
        "n": res.n,
        "goals": list(res.goals),
        "holds": res.holds,
        "reason": res.reason,
        "witness": coloring_to_json(res.witness) if res.witness is not None else None,
    }
    arrow = f"{a.n} -> ({', '.join(map(str, goals))})"
    if res.holds is None:
        return EXIT_FALSE, f"inconclusive: {res.reason}", payload
    if res.holds:
        return EXIT_TRUE, f"true: {arrow} ({res.reason})", payload
    pairs = " ".join(f"{x}{y}:{c}" for (x, y), c in sorted(res.witness.table.items()))
    return EXIT_FALSE, f"false: counterexample coloring {pairs}", payload


def cmd_ramsey_homog(a, u) -> Outcome:
    C = coloring_from_json(_load_json(a.coloring, "witness", "sample", "coloring"))
    if not isinstance(C, pf.TableColoring):
        raise CliError("homogeneous-set search needs a table coloring")
    found = pf.find_homogeneous(C, a.color, a.size)
    payload = {"color": a.color, "size": a.size,
               "set": None if found is None else [render(x, u) for x in found]}
    if found is None:
        return EXIT_FALSE, "none", payload
    return EXIT_TRUE, "{" + ", ".join(payload["set"]) + "}", payload


def cmd_ramsey_witness(a, u) -> Outcome:
    alpha = _ord(a.alpha)
    C = pf.sierpinski_coloring(alpha) if a.kind == "sierpinski" else pf.decomposable_coloring(alpha)
    payload = {"coloring": coloring_to_json(C)}
    if isinstance(C, pf.SierpinskiColoring):
        text = f"sierpinski coloring below {render(alpha, u)}: x<y gets 0 iff code(x) < code(y)"
    else:
        text = (f"decomposable coloring of {render(alpha, u)} = {render(C.cut, u)} + {render(C.tail, u)}: "
                f"1 iff the pair straddles {render(C.cut, u)}")
    if a.sample:
        sample = pf.TableColoring.from_function(_ord_list(a.sample), C)
        payload["sample"] = coloring_to_json(sample)
        text += "\n" + "\n".join(f"{render(x, u)} {render(y, u)}\t{c}" for (x, y), c in sorted(sample.table.items()))
    return EXIT_TRUE, text, payload


# em ------------------------------------------------------------------------

def _derivation_outcome(d: em.Derivation, u: bool) -> Outcome:
    report = em.verify_derivation(d)
    text = f"{_statement_text(d.conclusion, u)}\n{d.summary()}\nverified: {report.ok}"
    payload = {"statement": statement_to_json(d.conclusion, u), "derivation": derivation_to_json(d, u),
               "verified": report.ok}
    return (EXIT_TRUE if report.ok else EXIT_FALSE), text, payload


def _statement_text(s: em.Statement, u: bool) -> str:
    return f"{render(s.source, u)} -> ({render(s.goals[0], u)}, {render(s.goals[1], u)})"


def cmd_em_headline(a, u) -> Outcome:
    return _derivation_outcome(em.em_headline(_ord(a.nu), a.n), u)


def cmd_em_larson(a, u) -> Outcome:
    return _derivation_outcome(em.larson_instance(a.n, a.k), u)


def cmd_em_verify(a, u) -> Outcome:
    d = derivation_from_json(_load_json(a.file, "derivation"))
    report = em.verify_derivation(d)
    payload = {"ok": report.ok, "checked": report.checked,
               "failures": [{"path": p, "message": m} for p, m in report.failures]}
    if report.ok:
        return EXIT_TRUE, f"ok: {_statement_text(d.conclusion, u)} ({report.checked} nodes)", payload
    text = "\n".join(f"FAIL {p}: {m}" for p, m in report.failures)
    return EXIT_FALSE, text, payload


# parser --------------------------------------------------------------------

def _nat(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS,
                        help="render omega as ω")

    p = argparse.ArgumentParser(prog="ordpart", description="Ordinal arithmetic and partition calculus.",
                                parents=[common])
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name: str, fn: Callable, help: str):
        q = sub.add_parser(name, help=help, parents=[common])
        q.set_defaults(func=fn, command=f"{sub.metavar} {name}")
        return q

    g = groups.add_parser("ord", help="ordinal arithmetic")
    s = g.add_subparsers(dest="cmd", required=True, metavar="ord")
    leaf(s, "eval", cmd_ord_eval, "canonical form").add_argument("expr")
    q = leaf(s, "cmp", cmd_ord_cmp, "compare two ordinals")
    q.add_argument("left")
    q.add_argument("right")
    leaf(s, "cnf", cmd_ord_cnf, "Cantor normal form terms").add_argument("expr")
    leaf(s, "indecomp", cmd_ord_indecomp, "additively indecomposable?").add_argument("expr")
    leaf(s, "split", cmd_ord_split, "split into two smaller summands").add_argument("expr")
    leaf(s, "code", cmd_ord_code, "Godel code").add_argument("expr")
    leaf(s, "decode", cmd_ord_decode, "decode a Godel code").add_argument("code", type=_nat)

    g = groups.add_parser("iset", help="interval sets of ordinals")
    s = g.add_subparsers(dest="cmd", required=True, metavar="iset")
    leaf(s, "otype", cmd_iset_otype, "order type").add_argument("set")
    q = leaf(s, "trim", cmd_iset_trim, "part of A1 above x, keeping order type alpha")
    q.add_argument("--A", required=True)
    q.add_argument("--A1", required=True)
    q.add_argument("--x", required=True)
    q.add_argument("--alpha", required=True)
    q = leaf(s, "segment", cmd_iset_segment, "cut [0,beta) at the points F")
    q.add_argument("--beta", required=True)
    q.add_argument("--F", default="")
    q = leaf(s, "strong", cmd_iset_strong, "split D into indecomposable-type pieces")
    q.add_argument("--D", required=True)
    q.add_argument("--beta", required=True)

    g = groups.add_parser("ramsey", help="finite partition relations and witnesses")
    s = g.add_subparsers(dest="cmd", required=True, metavar="ramsey")
    q = leaf(s, "check", cmd_ramsey_check, "decide n -> (goals)^2")
    q.add_argument("--n", type=_nat, required=True)
    q.add_argument("--goals", required=True)
    q.add_argument("--cap", type=_nat, default=pf.DEFAULT_CAP)
    q.add_argument("--witness", help="JSON table coloring refuting the relation")
    q = leaf(s, "homog", cmd_ramsey_homog, "least monochromatic subset")
    q.add_argument("--coloring", required=True)
    q.add_argument("--color", type=_nat, required=True)
    q.add_argument("--size", type=_nat, required=True)
    q = leaf(s, "witness", cmd_ramsey_witness, "rule colorings behind negative relations")
    q.add_argument("--kind", choices=["sierpinski", "decomposable"], required=True)
    q.add_argument("--alpha", required=True)
    q.add_argument("--sample", help="comma-separated ordinals to tabulate")

    g = groups.add_parser("em", help="derivations of partition statements")
    s = g.add_subparsers(dest="cmd", required=True, metavar="em")
    q = leaf(s, "headline", cmd_em_headline, "w^(1+nu*n) -> (2^n, w^(1+nu))")
    q.add_argument("--nu", required=True)
    q.add_argument("--n", type=_nat, required=True)
    q = leaf(s, "larson", cmd_em_larson, "w^(n*k) -> (w^n, k)")
    q.add_argument("--n", type=_nat, required=True)
    q.add_argument("--k", type=_nat, required=True)
    leaf(s, "verify", cmd_em_verify, "re-check a derivation JSON file").add_argument("file")
    return p


def _error(exc: BaseException, as_json: bool) -> None:
    err: Dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ExprSyntaxError):
        err.update(offset=exc.offset, expected=exc.expected)
    if as_json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "kind": "error", "error": err}), file=sys.stderr)
    else:
        print(f"error: {err['type']}: {err['message']}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    unicode = getattr(args, "unicode", False)
    try:
        code, text, payload = args.func(args, unicode)
    except (ValueError, TypeError, OSError, CliError) as exc:
        _error(exc, as_json)
        return EXIT_ERROR
    if as_json:
        doc = {"schema_version": SCHEMA_VERSION, "kind": "cli_output", "command": args.command,
               "ok": code == EXIT_TRUE, "result": payload}
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
