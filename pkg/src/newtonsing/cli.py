"""Command line entry point: expression parsing, subcommands, JSON/CSV
emission and diagram rendering.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (zero
polynomial, resolution over the rationals, non-reduced input), 3 an
internal relation check failed, which is a bug rather than user error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import FieldTower, prime_field
from .bivar import BivarPoly
from .errors import (DomainError, InternalError, NewtonSingError, ParseError,
                     PaperViolationError)
from .newton import NewtonDiagram, newton_diagram, r1_clip
from .nondeg import classify
from .report import invariant_bundle, summary_to_json, verify_random
from .resolve import resolution_summary, resolution_tree

# ---------------------------------------------------------------------------
# expression grammar
#
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := base ('^' uint)?
#   base   := int | 'x' | 'y' | '(' expr ')'
#
# A leading sign inside parentheses covers inputs like "x*(-1)".


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(("int", int(text[start:pos]), start))
            continue
        if ch in "xy+-*^()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind: str):
        tok = self.tokens[self.k]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.k += 1
        return tok

    def expr(self):
        node = None
        if self.peek()[0] in "+-":
            sign = self.take(self.peek()[0])[0]
            node = ("neg", self.term()) if sign == "-" else self.term()
        else:
            node = self.term()
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            node = ("*", node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            self.take("int")
            node = ("^", node, tok[1])
        return node

    def base(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take("int")
            return ("int", tok[1])
        if tok[0] in ("x", "y"):
            self.take(tok[0])
            return (tok[0],)
        if tok[0] == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"expected a value, found {tok[0]!r}", tok[2])


def parse_expr(text: str):
    """Parse to an abstract syntax tree of nested tuples."""
    parser = _Parser(text)
    node = parser.expr()
    parser.take("end")
    return node


def eval_expr(node, tower: FieldTower) -> BivarPoly:
    kind = node[0]
    if kind == "int":
        return BivarPoly(tower, {(0, 0): node[1]})
    if kind == "x":
        return BivarPoly.monomial(tower, 1, 0)
    if kind == "y":
        return BivarPoly.monomial(tower, 0, 1)
    if kind == "neg":
        return -eval_expr(node[1], tower)
    if kind == "+":
        return eval_expr(node[1], tower) + eval_expr(node[2], tower)
    if kind == "-":
        return eval_expr(node[1], tower) - eval_expr(node[2], tower)
    if kind == "*":
        return eval_expr(node[1], tower) * eval_expr(node[2], tower)
    if kind == "^":
        return eval_expr(node[1], tower) ** node[2]
    raise InternalError(f"unknown node {kind!r}")


def parse_poly(text: str, p: int) -> BivarPoly:
    """Parse an expression into a polynomial with coefficients reduced into
    characteristic p (0 for the rationals)."""
    tower = prime_field(p)
    return eval_expr(parse_expr(text), tower)


def poly_to_expr(f: BivarPoly) -> str:
    """Render a polynomial as a parseable expression."""
    if f.is_zero():
        return "0"
    chunks = []
    for (i, j), c in sorted(f.terms(), key=lambda t: (t[0][0] + t[0][1], t[0])):
        raw = c.raw
        if isinstance(raw, Fraction) and raw.denominator != 1:
            raise DomainError("only integer coefficients can be rendered")
        value = int(raw) if not isinstance(raw, tuple) else None
        if value is None:
            raise DomainError("tower coefficients cannot be rendered")
        sign = "-" if value < 0 else "+"
        mag = abs(value)
        factors = []
        if mag != 1 or (i == 0 and j == 0):
            factors.append(str(mag))
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        chunks.append((sign, "*".join(factors)))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# rendering


def diagram_ascii(f: BivarPoly, d: NewtonDiagram) -> str:
    """Dot grid with the support, the diagram vertices and the lattice
    points of its edges marked."""
    supp = set(f.support())
    verts = set(d.vertices)
    on_edges = set()
    for e in d.edges:
        for k in range(e.length + 1):
            on_edges.add((e.start[0] + k * e.m0, e.start[1] - k * e.n0))
    max_i = max(max(i for i, _ in supp), 1)
    max_j = max(max(j for _, j in supp), 1)
    lines = []
    for j in range(max_j, -1, -1):
        row = []
        for i in range(max_i + 1):
            pt = (i, j)
            if pt in verts:
                row.append("@")
            elif pt in supp:
                row.append("*")
            elif pt in on_edges:
                row.append("+")
            else:
                row.append(".")
        lines.append(f"{j:3d} | " + " ".join(row))
    lines.append("    +-" + "--" * (max_i + 1))
    lines.append("      " + " ".join(f"{i}"[-1] for i in range(max_i + 1)))
    lines.append("")
    lines.append("@ vertex   * support   + edge lattice point")
    return "\n".join(lines)


def diagram_svg(f: BivarPoly, d: NewtonDiagram) -> str:
    """SVG 1.1 picture: support dots, thick diagram segments, the region
    under the diagram shaded and the cone over the inner part hatched."""
    supp = f.support()
    max_i = max(max(i for i, _ in supp), 1) + 1
    max_j = max(max(j for _, j in supp), 1) + 1
    scale = 40
    pad = 30
    width = max_i * scale + 2 * pad
    height = max_j * scale + 2 * pad

    def sx(x) -> float:
        return pad + float(x) * scale

    def sy(y) -> float:
        return height - pad - float(y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        '<defs><pattern id="hatch" width="6" height="6" '
        'patternTransform="rotate(45)" patternUnits="userSpaceOnUse">'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#555" stroke-width="1"/>'
        "</pattern></defs>",
    ]
    if d.convenient and len(d.vertices) >= 2:
        pts = [(0, 0)] + list(d.vertices)
        path = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        parts.append(f'<polygon points="{path}" fill="#dce9f5" stroke="none"/>')
    clip = r1_clip(d)
    if clip:
        pts = [(0, 0)] + [(float(x), float(y)) for x, y in clip]
        path = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        parts.append(f'<polygon points="{path}" fill="url(#hatch)" stroke="none"/>')
    for g in range(max_i + 1):
        parts.append(f'<line x1="{sx(g)}" y1="{sy(0)}" x2="{sx(g)}" y2="{sy(max_j)}" '
                     'stroke="#eee" stroke-width="1"/>')
    for g in range(max_j + 1):
        parts.append(f'<line x1="{sx(0)}" y1="{sy(g)}" x2="{sx(max_i)}" y2="{sy(g)}" '
                     'stroke="#eee" stroke-width="1"/>')
    parts.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(max_i)}" y2="{sy(0)}" '
                 'stroke="#000" stroke-width="1.5"/>')
    parts.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(max_j)}" '
                 'stroke="#000" stroke-width="1.5"/>')
    for a, b in zip(d.vertices, d.vertices[1:]):
        parts.append(f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" '
                     f'y2="{sy(b[1])}" stroke="#1a3e6e" stroke-width="4"/>')
    for i, j in supp:
        parts.append(f'<circle cx="{sx(i)}" cy="{sy(j)}" r="4" fill="#333"/>')
    for i, j in d.vertices:
        parts.append(f'<circle cx="{sx(i)}" cy="{sy(j)}" r="6" fill="#c0392b"/>')
    parts.append("</svg>")
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# subcommands


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    top = _ArgumentParser(prog="newtonsing",
                          description="Newton diagram invariants of plane curve germs")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, poly=True):
        p.add_argument("--char", type=int, required=True,
                       help="coefficient characteristic, 0 or a prime")
        if poly:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--poly", help="polynomial expression in x, y")
            group.add_argument("--input", help="file with one expression per line")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("invariants", help="all invariants of one germ")
    add_common(p)
    p = sub.add_parser("classify", help="non-degeneracy flags of one germ")
    add_common(p)
    p = sub.add_parser("diagram", help="Newton diagram data and pictures")
    add_common(p)
    p.add_argument("--svg", help="write an SVG rendering to this path")
    p = sub.add_parser("resolve", help="blow-up tree of a reduced germ")
    add_common(p)
    p = sub.add_parser("batch", help="map a file of expressions to JSON lines or CSV")
    add_common(p)
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON lines")
    p = sub.add_parser("verify", help="randomized check of the invariant relations")
    p.add_argument("--chars", default="0,2,3,5",
                   help="comma separated characteristics")
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--max-exp", type=int, default=7)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    return top


def _read_poly(args) -> BivarPoly:
    if args.poly is not None:
        text = args.poly
    else:
        with open(args.input, encoding="utf-8") as handle:
            text = handle.read().strip()
    f = parse_poly(text, args.char)
    if f.is_zero():
        raise DomainError("the polynomial is zero in this characteristic")
    if f.is_unit_at_origin():
        raise DomainError("the germ must vanish at the origin")
    return f


CSV_HEADER = ("poly,char,mu,mu_N,delta,delta_N,nu,r,r_N,s_N,wvc,"
              "nnd,innd,wnnd,whnnd,nnd1,superisolated")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _bundle_csv_row(poly_text: str, bundle) -> str:
    j = bundle.to_json()
    cells = [poly_text, str(j["char"])]
    for key in ("mu", "mu_N", "delta", "delta_N", "nu", "r", "r_N", "s_N", "wvc"):
        cells.append(_csv_cell(j[key]))
    for key in ("nnd", "innd", "wnnd", "whnnd", "nnd1", "superisolated"):
        cells.append(_csv_cell(j["flags"][key]))
    return ",".join(cells)


def _cmd_invariants(args) -> int:
    f = _read_poly(args)
    bundle = invariant_bundle(f)
    if args.json:
        print(json.dumps(bundle.to_json()))
        return 0
    j = bundle.to_json()
    print(f"polynomial       {f}")
    print(f"characteristic   {j['char']}")
    for key in ("mu", "mu_N", "delta", "delta_N", "nu", "r", "r_N", "s_N", "wvc"):
        val = j[key]
        print(f"{key:<16} {'-' if val is None else val}")
    for key, val in j["flags"].items():
        print(f"{key:<16} {'-' if val is None else val}")
    bad = [v for v in j["verdicts"] if v["status"] == "fail"]
    print(f"relation checks  {len(j['verdicts'])} evaluated, {len(bad)} failed")
    return 0


def _cmd_classify(args) -> int:
    f = _read_poly(args)
    report = classify(f)
    if args.json:
        payload = {
            "nnd": report.nnd, "innd": report.innd, "innd_m": report.innd_m,
            "wnnd": report.wnnd, "wnnd_vacuous": report.wnnd_vacuous,
            "whnnd": report.whnnd, "nnd1": report.nnd1,
            "nd1_x_vertex": report.nd1_x_vertex,
            "nd1_y_vertex": report.nd1_y_vertex,
            "faces": [
                {"kind": v.face.kind, "index": v.face.index,
                 "inner": v.face.inner, "points": list(map(list, v.points)),
                 "nd": v.nd, "wnd": v.wnd, "whnd": v.whnd}
                for v in report.gamma_faces
            ],
        }
        print(json.dumps(payload))
        return 0
    print(f"polynomial  {f}")
    for v in report.gamma_faces:
        marks = []
        for name in ("nd", "wnd", "whnd"):
            val = getattr(v, name)
            if val is not None:
                marks.append(f"{name}={'yes' if val else 'no'}")
        print(f"  {v.face.kind:<6} {v.points}  " + "  ".join(marks))
    print(f"NND    {report.nnd}")
    print(f"INND   {report.innd}   (C-polytope exponent m={report.innd_m})")
    print(f"WNND   {report.wnnd}" + ("   (no edges: vacuous)" if report.wnnd_vacuous else ""))
    print(f"WHNND  {report.whnnd}")
    print(f"NND1   {report.nnd1}")
    return 0


def _cmd_diagram(args) -> int:
    f = _read_poly(args)
    d = newton_diagram(f)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(diagram_svg(f, d))
    if args.json:
        payload = {
            "vertices": [list(v) for v in d.vertices],
            "edges": [{"start": list(e.start), "end": list(e.end),
                       "m0": e.m0, "n0": e.n0, "length": e.length,
                       "degree": e.degree} for e in d.edges],
            "convenient": d.convenient,
            "monomial_divisors": list(d.monomial_divisors),
        }
        print(json.dumps(payload))
        return 0
    print(f"polynomial  {f}")
    print(f"vertices    {' '.join(str(v) for v in d.vertices)}")
    for e in d.edges:
        print(f"edge        {e.start} -> {e.end}   weights ({e.m0},{e.n0})"
              f"  lattice length {e.length}  degree {e.degree}")
    print(f"convenient  {d.convenient}")
    print()
    print(diagram_ascii(f, d))
    return 0


def _cmd_resolve(args) -> int:
    f = _read_poly(args)
    root = resolution_tree(f)
    summary = resolution_summary(root)
    if args.json:
        print(json.dumps({"tree": root.to_json(),
                          "delta": summary.delta, "nu": summary.nu,
                          "r": summary.branches,
                          "max_depth": summary.max_depth,
                          "max_tower_degree": summary.max_tower_degree}))
        return 0
    print(f"polynomial  {f}")
    for node in root.walk():
        tag = "special" if node.special else "ordinary"
        print("  " * node.depth
              + f"mult {node.mult}  {tag}  tower degree {node.tower.degree}"
              + f"  at {node.direction}")
    print(f"delta={summary.delta}  nu={summary.nu}  r={summary.branches}")
    return 0


def _cmd_batch(args) -> int:
    with open(args.input, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    rows = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        try:
            if not text:
                raise ParseError("empty line")
            f = parse_poly(text, args.char)
            if f.is_zero():
                raise DomainError("zero polynomial")
            if f.is_unit_at_origin():
                raise DomainError("unit at the origin")
            bundle = invariant_bundle(f)
            rows.append((text, bundle, None))
        except NewtonSingError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            rows.append((text, None, str(exc)))
    if args.csv:
        print(CSV_HEADER)
        for text, bundle, err in rows:
            if bundle is None:
                print(f"{text},{args.char}" + "," * 15)
            else:
                print(_bundle_csv_row(text, bundle))
    else:
        for text, bundle, err in rows:
            if bundle is None:
                print(json.dumps({"poly": text, "error": err}))
            else:
                payload = {"poly": text}
                payload.update(bundle.to_json())
                print(json.dumps(payload))
    return 0


def _cmd_verify(args) -> int:
    chars = [int(c) for c in args.chars.split(",") if c.strip() != ""]
    summary = verify_random(chars, samples=args.samples, max_exp=args.max_exp,
                            seed=args.seed, workers=args.workers)
    if args.json:
        print(summary_to_json(summary))
    else:
        print(f"seed {summary['seed']}  samples {summary['samples']}"
              f"  chars {summary['chars']}")
        pair = summary["example_pair"]
        print(f"fixed pair: wvc {pair['wvc_pair']}, equal diagrams"
              f" {pair['diagrams_equal']}, first INND {pair['innd_first']}")
        for char, stats in summary["per_char"].items():
            print(f"char {char}: {stats['evaluated']} evaluated,"
                  f" {stats['zero_samples']} zero draws,"
                  f" {stats['nonreduced']} non-reduced,"
                  f" {stats['mu_infinite']} with infinite Milnor number")
            for vid, counts in stats["checks"].items():
                print(f"  {vid:<28} pass {counts['pass']:>4}  skip {counts['skip']:>4}")
        for failure in summary["failures"]:
            print(f"FAILURE char {failure['char']} poly {failure['poly']}:"
                  f" {failure['error']}")
    return 0 if not summary["failures"] else 3


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "invariants": _cmd_invariants,
            "classify": _cmd_classify,
            "diagram": _cmd_diagram,
            "resolve": _cmd_resolve,
            "batch": _cmd_batch,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PaperViolationError as exc:
        print(f"internal relation violation: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
