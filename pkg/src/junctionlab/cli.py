"""Command-line surface: queries, sequence streams, K-table reports, b-files,
flow-chart DOT export, and the verification suites.

Numbers on the command line may be plain decimals or tower-grammar literals
(e.g. "10^{24}+102"); the latter must materialize within the digit budget.
All output goes to stdout unless --out is given.  The only environment knob
is JUNCTIONLAB_CACHE_CAP (memo cap for the generator-count cache).
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from . import verify
from .digits import check_base
from .inverse import count_generators, generators, stream_by_count
from .kaprekar import KTable, neg_index, quasi_rep
from .towerint import OVERFLOW, parse as parse_tower, render, to_natural

# Exact decimal output can run to hundreds of thousands of digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def parse_number(text: str, base: int) -> int:
    """Plain decimal or tower-grammar literal -> exact int."""
    try:
        return int(text)
    except ValueError:
        pass
    v = to_natural(parse_tower(text, base))
    if v is OVERFLOW:
        raise ValueError(f"{text!r} exceeds the digit budget; cannot materialize")
    return v


def bfile_lines(values: list[int], offset: int = 1) -> str:
    """OEIS b-file text: one "index value" pair per line, newline-terminated."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


# ---------------------------------------------------------------------------
# flow-chart construction (one K-node per (n, i), one exponent node per n >= 2)


@dataclass
class FlowChart:
    base: int
    n_max: int
    knodes: list = field(default_factory=list)      # (n, i)
    enodes: list = field(default_factory=list)      # n
    solid: list = field(default_factory=list)       # ((hn, hi), (n, i))
    dashed: list = field(default_factory=list)      # ((hn, j), n, bold)
    shaded: set = field(default_factory=set)        # (n, i)
    ties: dict = field(default_factory=dict)        # n -> sorted J(n) when |J| > 1
    labels: dict = field(default_factory=dict)      # node key -> label text


def build_flowchart(base: int, n_max: int) -> FlowChart:
    """Nodes and arcs of the computation graph for rows 1..n_max.

    Solid arcs record each K_i(n) = c*(b**B(n)+1) + K_{i-2c}(h) instance; the
    two dashed arcs into the exponent node record the cross-sum behind B(n).
    The dashed source index j prefers the row-ceil(n/2) overall minimum when
    its index lies in J(n), otherwise the smallest member of J(n); coinciding
    arcs (even n, self-paired j) merge into one bold arc.
    """
    check_base(base)
    if n_max < 2:
        raise ValueError("flow-charts start at n_max >= 2")
    t = verify.get_table(base, n_max)
    ch = FlowChart(base, n_max)
    for n in range(1, n_max + 1):
        row = t.row(n)
        ch.shaded.add((n, row.tau_index))
        for i in t.indices:
            ch.knodes.append((n, i))
            ch.labels[(n, i)] = f"K_{i}({n}) = {render(row.K[i])}"
        if n == 1:
            continue
        ch.enodes.append(n)
        ch.labels[("E", n)] = f"B({n}) = {render(row.B)}"
        for i in t.indices:
            c, h = row.c[i], row.h[i]
            ch.solid.append(((h, (i - 2 * c) % (base - 1)), (n, i)))
        hi, lo = (n + 1) // 2, n // 2
        jstar = t.tau_index(hi)
        j = jstar if jstar in row.J else min(row.J)
        if len(row.J) > 1:
            ch.ties[n] = sorted(row.J)
        src1, src2 = (hi, j), (lo, neg_index(j, base))
        if src1 == src2:
            ch.dashed.append((src1, n, True))
        else:
            ch.dashed.append((src1, n, False))
            ch.dashed.append((src2, n, False))
    return ch


def lint_flowchart(ch: FlowChart) -> list[str]:
    """Structural invariant violations (empty list when clean)."""
    problems = []
    solid_in: dict = {}
    for src, dst in ch.solid:
        solid_in[dst] = solid_in.get(dst, 0) + 1
        if src not in set(ch.knodes):
            problems.append(f"solid arc from unknown node {src}")
    for n, i in ch.knodes:
        want = 0 if n == 1 else 1
        if solid_in.get((n, i), 0) != want:
            problems.append(f"K-node ({n},{i}) has {solid_in.get((n, i), 0)} incoming solid arcs")
    dash_in: dict = {}
    for src, n, bold in ch.dashed:
        dash_in.setdefault(n, []).append(bold)
        if src not in set(ch.knodes):
            problems.append(f"dashed arc from unknown node {src}")
    for n in ch.enodes:
        kinds = dash_in.get(n, [])
        if not (kinds == [True] or (len(kinds) == 2 and not any(kinds))):
            problems.append(f"E-node {n} has arcs {kinds}")
    per_row: dict = {}
    for n, i in ch.shaded:
        per_row[n] = per_row.get(n, 0) + 1
    for n in range(1, ch.n_max + 1):
        if per_row.get(n, 0) != 1:
            problems.append(f"row {n} has {per_row.get(n, 0)} shaded nodes")
    return problems


def shaded_arc_rows(ch: FlowChart) -> set[int]:
    """Rows n whose exponent node receives an arc from a shaded K-node."""
    return {n for src, n, _ in ch.dashed if src in ch.shaded}


def ceil_shaded_arc_rows(ch: FlowChart) -> set[int]:
    """Rows n whose exponent node receives an arc from the shaded node of row
    ceil(n/2), i.e. from the node holding K(ceil(n/2)).  This is the arc the
    argmin shortcut would predict; rows missing it are exactly the shortcut's
    counterexamples."""
    out = set()
    for src, n, _ in ch.dashed:
        if src[0] == (n + 1) // 2 and src in ch.shaded:
            out.add(n)
    return out


def _kid(base: int, n: int, i: int) -> str:
    return f"K_b{base}_n{n}_i{i}"


def _eid(base: int, n: int) -> str:
    return f"E_b{base}_n{n}"


def flowchart_dot(ch: FlowChart) -> str:
    """Serialize to DOT text (validated by check_dot_text before writing)."""
    b = ch.base
    out = [f"digraph junction_b{b} {{", "  rankdir=BT;", '  node [shape=box];']
    for n, js in sorted(ch.ties.items()):
        out.append(f"  // tie at n={n}: J = {js}".replace("'", ""))
    for n in range(1, ch.n_max + 1):
        out.append("  { rank=same;")
        for nn, i in [k for k in ch.knodes if k[0] == n]:
            attrs = [f'label="{ch.labels[(nn, i)]}"']
            if (nn, i) in ch.shaded:
                attrs.append("style=filled")
                attrs.append("fillcolor=lightgray")
            out.append(f'    {_kid(b, nn, i)} [{", ".join(attrs)}];')
        if n >= 2:
            out.append(f'    {_eid(b, n)} [label="{ch.labels[("E", n)]}", shape=ellipse];')
        out.append("  }")
    for (hn, hi), (n, i) in ch.solid:
        out.append(f"  {_kid(b, hn, hi)} -> {_kid(b, n, i)};")
    for (hn, j), n, bold in ch.dashed:
        style = "bold" if bold else "dashed"
        out.append(f"  {_kid(b, hn, j)} -> {_eid(b, n)} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"


_DOT_LINE = re.compile(
    r"""^( \s* //.*                                   # comment
       | \s* digraph\ \w+\ \{                          # header
       | \s* \{\ rank=same;                            # rank group open
       | \s* \}                                        # close
       | \s* rankdir=\w+;                              # graph attr
       | \s* node\ \[[^\]]*\];                         # node defaults
       | \s* \w+\ \[[^\]]*\];                          # node with attrs
       | \s* \w+\ ->\ \w+(\ \[[^\]]*\])?;              # edge
       )$""",
    re.VERBOSE,
)


def check_dot_text(text: str) -> list[str]:
    """Line-level validation of the emitted DOT subset plus brace balance."""
    problems = []
    depth = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if not _DOT_LINE.match(line):
            problems.append(f"line {lineno} does not match the DOT subset: {line!r}")
        depth += line.count("{") - line.count("}")
    if depth != 0:
        problems.append("unbalanced braces")
    return problems


# ---------------------------------------------------------------------------
# commands


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    u = parse_number(args.value, args.base)
    vs = generators(u, args.base)
    _emit("".join(f"{v}\n" for v in vs), args.out)
    return 0


def cmd_count(args) -> int:
    u = parse_number(args.value, args.base)
    _emit(f"{count_generators(u, args.base)}\n", args.out)
    return 0


def cmd_stream(args, predicate) -> int:
    if args.limit < 1:
        raise ValueError("--limit must be >= 1")
    values = stream_by_count(args.base, predicate, args.limit)
    if args.bfile:
        _emit(bfile_lines(values, offset=1), args.out)
    else:
        _emit("".join(f"{v}\n" for v in values), args.out)
    return 0


def _format_value(x, fmt: str, table: KTable, n: int, i: int | None) -> str:
    if fmt == "tower":
        return render(x)
    if fmt == "decimal":
        v = to_natural(x)
        return "<overflow>" if v is OVERFLOW else str(v)
    # quasi: alpha_1*C(n_1) + ... + K_beta(1), with C(m) = b**B(m) + 1
    rep = quasi_rep(table, n, i if i is not None else table.tau_index(n))
    parts = [
        (f"C({m})" if a == 1 else f"{a}*C({m})") for a, m in zip(rep.alphas, rep.ns)
    ]
    parts.append(f"K_{rep.beta}(1)")
    return "+".join(parts)


def cmd_ktable(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    t = verify.get_table(args.base, args.n)
    lines = []
    if args.format == "quasi":
        lines.append(f"# C(m) = {args.base}^B(m)+1")
    for n in range(1, args.n + 1):
        row = t.row(n)
        if n == 1:
            lines.append(f"n=1 K={_format_value(row.Kmin, args.format, t, 1, row.tau_index)} tau={row.tau_index}")
        else:
            lines.append(
                f"n={n} B={render(row.B)} K={_format_value(row.Kmin, args.format, t, n, row.tau_index)}"
                f" tau={row.tau_index} J={{{','.join(str(j) for j in sorted(row.J))}}}"
            )
        for i in t.indices:
            extra = "" if n == 1 else f"  [c={row.c[i]}, h={row.h[i]}]"
            lines.append(f"  K_{i}({n}) = {_format_value(row.K[i], args.format, t, n, i)}{extra}")
    _emit("".join(s + "\n" for s in lines), args.out)
    return 0


def cmd_flowchart(args) -> int:
    ch = build_flowchart(args.base, args.n)
    problems = lint_flowchart(ch)
    if problems:
        raise RuntimeError("flow-chart invariants violated: " + "; ".join(problems))
    text = flowchart_dot(ch)
    problems = check_dot_text(text)
    if problems:
        raise RuntimeError("DOT serialization failed lint: " + "; ".join(problems))
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "oracle":
        if args.base:
            kwargs["bases"] = [args.base]
        if args.limit:
            kwargs["limit"] = args.limit
    results = verify.run_suite(args.suite, **kwargs)
    text = "".join(r.line() + "\n" for r in results)
    n_bad = sum(1 for r in results if not r.ok)
    text += f"{len(results) - n_bad}/{len(results)} checks passed\n"
    _emit(text, args.out)
    return 1 if n_bad else 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="junctionlab",
        description="Exact digit-sum generator queries and the smallest-with-n-generators hierarchy.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def base_arg(sp):
        sp.add_argument("--base", type=int, default=10, help="working base (>= 2)")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("gen", help="list the generators of a number")
    base_arg(sp)
    sp.add_argument("value", help="decimal or tower literal, e.g. 10^{13}+1")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("count", help="count the generators of a number")
    base_arg(sp)
    sp.add_argument("value")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("self", help="stream numbers with no generator")
    base_arg(sp)
    sp.add_argument("--limit", type=int, required=True)
    sp.add_argument("--bfile", action="store_true", help="emit b-file lines (offset 1)")
    sp.set_defaults(func=lambda a: cmd_stream(a, lambda f: f == 0))

    sp = sub.add_parser("junction", help="stream numbers with at least two generators")
    base_arg(sp)
    sp.add_argument("--limit", type=int, required=True)
    sp.add_argument("--bfile", action="store_true")
    sp.set_defaults(func=lambda a: cmd_stream(a, lambda f: f >= 2))

    sp = sub.add_parser("ktable", help="rows of the smallest-with-n-generators table")
    base_arg(sp)
    sp.add_argument("--n", type=int, required=True, help="build rows 1..n")
    sp.add_argument("--format", choices=["tower", "quasi", "decimal"], default="tower")
    sp.set_defaults(func=cmd_ktable)

    sp = sub.add_parser("flowchart", help="DOT export of the K-table computation graph")
    base_arg(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_flowchart)

    sp = sub.add_parser("verify", help="run a verification suite")
    base_arg(sp)
    sp.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    sp.add_argument("--limit", type=int, help="oracle suite scan ceiling")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        check_base(args.base)
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
