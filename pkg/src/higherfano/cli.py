"""Command-line interface: ``higherfano check|classify|bounds|expand|roots``.

Exit codes: 0 on success, 1 when a result disagrees with the encoded
theorem data, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import sympy

from . import classify, lie
from .chern import CompleteIntersectionSpec, Projective, Weighted
from .schubert import GrClass, format_terms, lr_multiply, parse_partition
from .verdict import Verdict

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_condition(text: str) -> int:
    m = re.fullmatch(r"[Ff]?(\d+)", text.strip())
    if not m or int(m.group(1)) < 1:
        raise UsageError(f"bad condition {text!r}; expected F1, F2, F3, ...")
    return int(m.group(1))


_N = sympy.Symbol("n")


def _eval_int(expr: str, n: int | None) -> int:
    """Evaluate an integer expression that may mention n."""
    try:
        value = sympy.sympify(expr.replace("^", "**"), locals={"n": _N})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise UsageError(f"bad expression {expr!r}") from exc
    if value.free_symbols - {_N}:
        raise UsageError(f"unknown symbol in {expr!r}")
    if value.free_symbols:
        if n is None:
            raise UsageError(f"{expr!r} mentions n; pass --n or --solve-n")
        value = value.subs(_N, n)
    if not value.is_integer:
        raise UsageError(f"{expr!r} is not an integer")
    return int(value)


def _weights(text: str, n: int | None) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d+)\^\((.+)\)|(\d+)\^(\w+)", part)
        if m:
            base = int(m.group(1) or m.group(3))
            count = _eval_int(m.group(2) or m.group(4), n)
            if count < 0:
                raise UsageError(f"negative multiplicity in {part!r}")
            out += [base] * count
        else:
            out.append(_eval_int(part, n))
    return tuple(out)


def parse_ci(text: str, n: int | None = None) -> CompleteIntersectionSpec:
    """``P^N; d=2,3`` or ``P(w0,w1,...); d=...`` or ``E6/P6; d=1``.

    N, the weights and multiplicities such as ``1^(n+1)`` may mention n.
    """
    parts = [p.strip() for p in text.split(";")]
    if len(parts) > 2 or not parts[0]:
        raise UsageError(f"bad complete-intersection spec {text!r}")
    amb, degrees = parts[0].replace(" ", ""), ()
    if len(parts) == 2 and parts[1]:
        m = re.fullmatch(r"d\s*=\s*(.+)", parts[1])
        if not m:
            raise UsageError(f"bad degree list {parts[1]!r}; expected d=2,3")
        degrees = tuple(_eval_int(x, n) for x in m.group(1).split(","))
    try:
        m = re.fullmatch(r"P\^\(?(.+?)\)?", amb)
        if m and not amb.startswith("P("):
            ambient = Projective(_eval_int(m.group(1), n))
        elif amb.startswith("P(") and amb.endswith(")"):
            ambient = Weighted(_weights(amb[2:-1], n))
        elif amb in classify.NAMED_AMBIENTS:
            ambient = classify.NAMED_AMBIENTS[amb]()
        else:
            raise UsageError(f"unknown ambient {amb!r}")
        return CompleteIntersectionSpec(ambient, degrees)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def solve_n(text: str, condition: int, cap: int = 5000) -> int | None:
    """Least n for which the n-family in ``text`` satisfies the condition."""
    first = None
    for n in range(1, cap):
        try:
            spec = parse_ci(text, n)
            v = classify.check_complete_intersection(spec, condition)
        except (UsageError, ValueError):
            continue
        if v.holds and first is None:
            first = n
        elif first is not None and not v.holds:
            raise UsageError(f"F{condition} is not monotone in n for {text!r}")
        if first is not None and n > first + 50:
            break
    return first


def _emit_verdict(v: Verdict, as_json: bool) -> None:
    print(v.to_json() if as_json else str(v))


def _expected(space: str, condition: int) -> bool | None:
    """Classification data for G/P^k at F2 and F3, if applicable."""
    try:
        mark = lie.parse_space(space)
    except ValueError:
        return None
    if lie.dimension(mark) < condition:
        return None
    if condition == 2:
        return classify.f2_expected(mark.diagram.label, mark.diagram.rank, mark.node)
    if condition == 3:
        return classify.f3_expected(mark)
    return None


def cmd_check(args) -> int:
    m = parse_condition(args.condition)
    if (args.space is None) == (args.ci is None):
        raise UsageError("check needs exactly one of --space or --ci")
    if args.space is not None:
        try:
            v = classify.check_space(args.space, m)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit_verdict(v, args.json)
        want = _expected(args.space, m)
        if want is not None and (v.status.value == "Undetermined" or v.holds != want):
            print(f"disagreement with theorem data: expected {'Holds' if want else 'Fails'}",
                  file=sys.stderr)
            return EXIT_DISAGREE
        return EXIT_OK
    if args.solve_n:
        n = solve_n(args.ci, m)
        if args.json:
            print(json.dumps({"ci": args.ci, "condition": f"F{m}", "minimal_n": n}))
        else:
            print(f"{args.ci}: minimal n with F{m} = {n}")
        return EXIT_OK
    spec = parse_ci(args.ci, args.n)
    label = classify.ci_label(spec)
    _emit_verdict(classify.check_complete_intersection(spec, m, label), args.json)
    return EXIT_OK


def cmd_classify(args) -> int:
    m = parse_condition(args.condition)
    if m not in (2, 3):
        raise UsageError("classify sweeps F2 or F3")
    if args.family not in ("classical", "exceptional", "all"):
        raise UsageError(f"unknown family {args.family!r}")
    report = classify.theorem_sweep("1.1" if m == 2 else "1.2", args.max_rank, args.family)
    print(report.to_json() if args.json else report.to_table())
    return EXIT_OK if report.ok else EXIT_DISAGREE


def cmd_bounds(args) -> int:
    if args.theorem.strip() != "1.3":
        raise UsageError("bounds supports --theorem 1.3")
    report = classify.bounds_report()
    print(report.to_json() if args.json else report.to_table())
    return EXIT_OK if report.ok else EXIT_DISAGREE


def cmd_expand(args) -> int:
    try:
        k, n = (int(x) for x in args.gr.split(","))
        factors = [f.strip() for f in args.product.split("*")]
        classes = []
        for f in factors:
            mm = re.fullmatch(r"s(\[.*\])", f)
            if not mm:
                raise UsageError(f"bad factor {f!r}; expected s[3,2,1]")
            classes.append(GrClass.schubert(k, n, parse_partition(mm.group(1))))
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    total = classes[0]
    for c in classes[1:]:
        total = lr_multiply(total, c)
    if args.json:
        print(json.dumps({"gr": [k, n], "product": args.product,
                          "terms": [[list(lam), str(c)] for lam, c in sorted(total.terms.items())]}))
    else:
        print(f"Gr({k},{n}): {args.product} = {format_terms(total.terms)}")
    return EXIT_OK


def cmd_roots(args) -> int:
    mm = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", args.diagram)
    if not mm:
        raise UsageError(f"bad diagram {args.diagram!r}; expected e.g. F4")
    try:
        d = lie.DynkinDiagram(mm.group(1).upper(), int(mm.group(2)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    roots = sorted(lie.positive_roots(d), key=lambda r: (r.height, r.coeffs))
    rows = []
    for mark in lie.all_maximal_marks(d.label, d.rank):
        rows.append({"space": str(mark), "dim": lie.dimension(mark), "index": lie.fano_index(mark),
                     "b2": lie.betti(mark, 1), "b4": lie.betti(mark, 2),
                     "short": lie.is_short_root(d, mark.node)})
    if args.json:
        print(json.dumps({"diagram": d.name, "positive_roots": [list(r.coeffs) for r in roots],
                          "spaces": rows}))
        return EXIT_OK
    print(f"{d.name}: {len(roots)} positive roots")
    for r in roots:
        print("  " + " ".join(map(str, r.coeffs)))
    print(f"{'space':<8} {'dim':>4} {'index':>5} {'b2':>3} {'b4':>3}  short")
    for row in rows:
        print(f"{row['space']:<8} {row['dim']:>4} {row['index']:>5} {row['b2']:>3} {row['b4']:>3}  "
              f"{'yes' if row['short'] else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="higherfano", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", help="decide F_m for a space or a complete intersection")
    c.add_argument("--space", help="e.g. E8/P6, Gr(2,5), OG+(5,10), SG(3,6), Q^7")
    c.add_argument("--ci", help='e.g. "P^(n+1); d=3" or "P(2,1^(n+1)); d=4"')
    c.add_argument("--condition", default="F2")
    c.add_argument("--n", type=int, help="value of n in --ci")
    c.add_argument("--solve-n", action="store_true", help="print the minimal n with F_m")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_check)

    s = sub.add_parser("classify", help="sweep G/P^k against the classification")
    s.add_argument("--family", default="all", help="classical, exceptional or all")
    s.add_argument("--max-rank", type=int, default=12)
    s.add_argument("--condition", default="F2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_classify)

    b = sub.add_parser("bounds", help="threshold table for complete intersections")
    b.add_argument("--theorem", default="1.3")
    b.add_argument("--json", action="store_true")
    b.set_defaults(fn=cmd_bounds)

    e = sub.add_parser("expand", help="Schubert product on a Grassmannian")
    e.add_argument("--gr", required=True, help="k,n")
    e.add_argument("--product", required=True, help='e.g. "s[3]*s[2,1]"')
    e.add_argument("--json", action="store_true")
    e.set_defaults(fn=cmd_expand)

    r = sub.add_parser("roots", help="positive roots and per-node data")
    r.add_argument("--diagram", required=True, help="e.g. F4")
    r.add_argument("--json", action="store_true")
    r.set_defaults(fn=cmd_roots)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
