"""Command-line entry point: ``pentapencil <command> ...`` with deterministic JSON output."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import delpezzo, poncelet, svg
from .diophantus import (
    DoubleEquation,
    OmegaPoint,
    fermat_ascend,
    omega_j,
    pencil_coincidence,
    pencil_relation,
    project_to_cubic,
    quadric_pencil_poly,
    search_solutions,
)
from .errors import CoincidenceFailure, PentapencilError
from .exact_core import (
    Polynomial,
    QuadraticSurd,
    TruncatedSeries,
    borel_is_rational,
    hankel_det,
    parse_scalar,
    quartic_j,
    series_sqrt,
)
from .pentagram import (
    Pentagram,
    complete_frieze,
    complete_frieze_gamma_epsilon,
    fib_rational_root,
    fibonacci_pentagram,
    gauss_roots,
    legendre_k2,
    lyness_orbit,
    omega,
    orthocentric_projection,
    regular_pentagram,
    spherical_realization,
)

SCHEMA = 1


class UsageError(Exception):
    pass


class RawText(str):
    """Payload printed verbatim (e.g. DOT) instead of as JSON."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class CommandResult:
    status: str
    payload: object
    diagnostics: list = field(default_factory=list)
    exit_code: int = 0
    json_mode: bool = False

    def envelope(self) -> dict:
        return {"schema": SCHEMA, "status": self.status, "payload": self.payload,
                "diagnostics": self.diagnostics}


def to_json(value):
    """Recursively convert results to JSON values.

    Fractions become "p/q" strings; plain ints (counts, indices, primitive
    integer coordinates) stay JSON integers.
    """
    if isinstance(value, bool) or value is None or isinstance(value, RawText):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, QuadraticSurd):
        if value.is_rational():
            return str(value.p)
        return {"p": str(value.p), "q": str(value.q), "d": value.d}
    if isinstance(value, (complex, np.complexfloating)):
        if abs(value.imag) <= 1e-12 * max(1.0, abs(value.real)):
            return float(value.real)
        return [float(value.real), float(value.imag)]
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [to_json(v) for v in value.tolist()]
    if isinstance(value, Polynomial):
        return [to_json(c) for c in value.coeffs]
    if isinstance(value, OmegaPoint):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


# input helpers


def _scalars(text: str, mode: str) -> list:
    return [parse_scalar(t, mode) for t in text.split(",") if t.strip()]


def _load_file(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise UsageError("--file must contain a JSON object")
    return data


def _conic(text, mode: str) -> poncelet.Conic:
    values = text if isinstance(text, list) else text.split(",")
    values = [parse_scalar(str(v), mode) for v in values]
    if len(values) != 6:
        raise UsageError("a conic needs six coefficients c11,c12,c13,c22,c23,c33")
    return poncelet.Conic.from_coeffs(*values)


def _conic_pair(args) -> tuple[poncelet.Conic, poncelet.Conic]:
    data = _load_file(args.file)
    c = args.C if args.C is not None else data.get("C")
    d = args.D if args.D is not None else data.get("D")
    if c is None or d is None:
        raise UsageError("conics C and D are required (--C/--D or --file)")
    return _conic(c, args.mode), _conic(d, args.mode)


def _pentagram(args) -> Pentagram:
    if getattr(args, "regular", False):
        return regular_pentagram()
    if getattr(args, "n", None) is not None:
        p = fibonacci_pentagram(args.n)
        return p.to_float() if args.mode == "float" else p
    data = _load_file(getattr(args, "file", None))
    x = getattr(args, "x", None) or data.get("x")
    if x is None:
        raise UsageError("give a pentagram with --n, --regular, --x or --file")
    values = _scalars(x, args.mode) if isinstance(x, str) else [parse_scalar(str(v), args.mode) for v in x]
    if len(values) != 5:
        raise UsageError("a pentagram has five coordinates")
    return Pentagram(tuple(values), args.tol)


def _double_equation(args) -> DoubleEquation:
    data = _load_file(getattr(args, "file", None))
    coeffs = args.coeffs or data.get("coeffs")
    if coeffs is None:
        raise UsageError("double equation coefficients are required (--coeffs or --file)")
    if isinstance(coeffs, list):
        coeffs = ",".join(str(c) for c in coeffs)
    return DoubleEquation.parse(coeffs)


# command handlers


def cmd_pentagram(args, diag):
    sub = args.action
    if sub == "fibonacci":
        p = fibonacci_pentagram(args.index)
        return (p.to_float() if args.mode == "float" else p).to_json()
    if sub == "complete":
        if args.gamma is not None or args.epsilon is not None:
            if args.gamma is None or args.epsilon is None:
                raise UsageError("--gamma and --epsilon go together")
            p = complete_frieze_gamma_epsilon(parse_scalar(args.gamma, args.mode),
                                              parse_scalar(args.epsilon, args.mode), args.tol)
        else:
            if args.x1 is None or args.x2 is None:
                raise UsageError("--x1 and --x2 are required")
            p = complete_frieze(parse_scalar(args.x1, args.mode), parse_scalar(args.x2, args.mode), args.tol)
        return p.to_json()
    if sub == "lyness":
        return lyness_orbit(parse_scalar(args.y1, args.mode), parse_scalar(args.y2, args.mode), args.k)
    if sub == "roots":
        if args.omega is not None:
            w = parse_scalar(args.omega, args.mode)
        else:
            w = omega(_pentagram(args))
        r = gauss_roots(w, args.tol)
        out = {"omega": w, "G": r.G, "Gp": r.Gp, "Gpp": r.Gpp, "exact": r.exact}
        if r.exact:
            out["d"] = r.d
            out["rational"] = list(r.rational)
        return out
    if sub == "rational-root":
        r = fib_rational_root(args.index)
        return {"n": r.n, "value": r.value, "which": r.which}
    if sub == "k2":
        p = _pentagram(args)
        k2 = legendre_k2(p, args.tol)
        out = {"k2": k2, "k2_float": float(k2)}
        return out
    if sub == "sphere":
        p = _pentagram(args)
        s = spherical_realization(p.to_float() if p.exact else p)
        rep = orthocentric_projection(s)
        if args.svg:
            pts = [tuple(q) for q in rep.points]
            star = [pts[(2 * i) % 5] for i in range(5)]
            svg.write(args.svg, [{"points": pts, "closed": True, "stroke": "black"},
                                 {"points": star, "closed": True, "stroke": "steelblue"}])
            diag.append(f"wrote {args.svg}")
        return {
            "vectors": s.v,
            "parts": s.parts(),
            "polarity_residual": s.polarity_residual(),
            "part_residual": s.part_residual(p),
            "projection": rep.to_json(),
        }
    raise UsageError(f"unknown pentagram action {sub}")


def cmd_poncelet(args, diag):
    c, d = _conic_pair(args)
    sub = args.action
    if sub == "cubic":
        return {"g": poncelet.pencil_cubic(c, d, args.tol)}
    if sub == "series":
        return {"series": list(poncelet.pencil_series(c, d, args.order).coeffs)}
    if sub == "cayley":
        if args.k is not None:
            value = poncelet.cayley_determinant(c, d, args.k)
            return {"k": args.k, "closes": poncelet.cayley_closes(c, d, args.k, args.tol), "hankel": value}
        return {"kmax": args.kmax, "min_closure": poncelet.min_closure(c, d, args.kmax, args.tol)}
    if sub == "intersect":
        pts = poncelet.conic_intersection(c, d, args.tol, generic_only=not args.allow_tangent)
        return {"points": pts}
    if sub == "j":
        out = {"j_branch": poncelet.jacobi_j(c, d, tol=args.tol)}
        out["j_cubic"] = quartic_j(poncelet.pencil_cubic(c, d, args.tol))
        return out
    if sub == "dual-j":
        return {"j": poncelet.dual_family_j(c, d, tol=args.tol)}
    if sub == "iterate":
        point = [float(parse_scalar(v, "float")) for v in args.point.split(",")]
        if len(point) == 2:
            point.append(1.0)
        flag = poncelet.make_flag(c, d, point, args.branch, max(args.tol, 1e-9))
        rep = poncelet.poncelet_iterate(c, d, flag, args.steps, max(args.tol, 1e-12))
        if args.svg:
            verts = poncelet.polygon_vertices(c, d, flag, rep.steps if rep.closed else args.steps)
            verts = [tuple(v) for v in verts]
            center = tuple(np.mean(np.array(verts), axis=0)) if verts else (0.0, 0.0)
            lines = [{"points": verts, "closed": rep.closed, "stroke": "crimson"},
                     {"points": svg.sample_conic(c.to_numpy(), center), "closed": True, "stroke": "black"},
                     {"points": svg.sample_conic(d.to_numpy(), center), "closed": True, "stroke": "gray"}]
            svg.write(args.svg, lines)
            diag.append(f"wrote {args.svg}")
        return rep.to_json()
    raise UsageError(f"unknown poncelet action {sub}")


def cmd_dioph(args, diag):
    de = _double_equation(args)
    sub = args.action
    if sub == "pencil":
        out = {"F": quadric_pencil_poly(de), "relation": "(xi-1)F(xi) = xi^4 g(-1/xi)"}
        rel = pencil_relation(de)
        out["g"] = rel.g
        try:
            out["kappa"] = pencil_coincidence(de).kappa
        except CoincidenceFailure as exc:
            out["kappa"] = None
            diag.append(str(exc))
        return out
    if sub == "search":
        return {"solutions": search_solutions(de, args.bound)}
    if sub == "project":
        base = OmegaPoint.parse(args.base)
        model = project_to_cubic(de, base)
        return {"cubic": model.cubic.to_json(), "chart": model.chart,
                "j_cubic": model.j_invariant(), "j_F": omega_j(de)}
    if sub == "ascend":
        seeds = [OmegaPoint.parse(s) for s in args.seed.split(",")]
        if len(seeds) != 3:
            raise UsageError("--seed takes R0,P0,P1 with each point written w:x:u:v")
        res = fermat_ascend(de, seeds[0], seeds[1], seeds[2], args.n)
        for k in res.indeterminate:
            diag.append(f"inverse map undefined at step {k}")
        return res.to_json()
    raise UsageError(f"unknown dioph action {sub}")


def cmd_delpezzo(args, diag):
    sub = args.action
    if sub in ("petersen", "vinberg"):
        g = delpezzo.petersen_graph() if sub == "petersen" else delpezzo.vinberg_configuration()
        if args.format == "dot":
            return RawText(g.to_dot(sub))
        return g.to_json()
    if sub == "partitions":
        return [[list(a), list(b)] for a, b in delpezzo.singular_fiber_partitions()]
    if sub == "automorphisms":
        return {"order": delpezzo.automorphism_count(delpezzo.petersen_graph())}
    if sub == "flags":
        fp = delpezzo.flag_poncelet(args.index)
        return {"n": fp.n, "flags": [list(f) for f in fp.flags], "order": fp.order}
    raise UsageError(f"unknown delpezzo action {sub}")


def cmd_series(args, diag):
    coeffs = _scalars(args.coeffs, args.mode)
    sub = args.action
    if sub == "sqrt":
        s = TruncatedSeries(coeffs, args.order)
        return list(series_sqrt(s, args.order).coeffs)
    if sub == "hankel":
        return hankel_det(coeffs, args.n, args.m)
    if sub == "borel":
        rep = borel_is_rational(coeffs, args.m, args.n0, args.window, args.tol)
        return {"rational": rep.rational, "checked": list(rep.checked),
                "witness": None if rep.witness is None else list(rep.witness)}
    raise UsageError(f"unknown series action {sub}")


# parser


def _common(hidden: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if hidden else {}
    p.add_argument("--mode", choices=["exact", "float"], **({"default": "exact"} if not hidden else kw))
    p.add_argument("--tol", type=float, **({"default": 1e-9} if not hidden else kw))
    p.add_argument("--json", action="store_true", **({"default": False} if not hidden else kw))
    p.add_argument("--svg", metavar="PATH", **({"default": None} if not hidden else kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(hidden=True)
    parser = _Parser(prog="pentapencil", parents=[_common(hidden=False)],
                     description="Pentagrams, Poncelet closure, double equations and del Pezzo combinatorics.")
    cmds = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(group, name, help_text):
        return group.add_parser(name, parents=[common], help=help_text)

    # pentagram
    pg = cmds.add_parser("pentagram", help="frieze solutions and Gauss's cubic").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    p = leaf(pg, "fibonacci", "the n-th Fibonacci pentagram")
    p.add_argument("index", type=int)
    p = leaf(pg, "complete", "complete a frieze from two coordinates")
    for flag in ("--x1", "--x2", "--gamma", "--epsilon"):
        p.add_argument(flag)
    p = leaf(pg, "lyness", "iterate y_{n+1} = (1 + y_n)/y_{n-1}")
    p.add_argument("--y1", required=True)
    p.add_argument("--y2", required=True)
    p.add_argument("--k", type=int, default=10)
    p = leaf(pg, "rational-root", "the rational root of the cubic for P_n")
    p.add_argument("index", type=int)
    for name, text in (("roots", "roots of Gauss's cubic"), ("k2", "Legendre modulus k^2"),
                       ("sphere", "spherical realization and orthocentric projection")):
        p = leaf(pg, name, text)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--n", type=int)
        src.add_argument("--regular", action="store_true")
        src.add_argument("--x", help="five comma-separated coordinates")
        if name == "roots":
            src.add_argument("--omega")
        p.add_argument("--file")

    # poncelet
    pc = cmds.add_parser("poncelet", help="conic pencils and closure").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, text in (("cubic", "g(t) = det(tC + D)"), ("series", "normalized sqrt series"),
                       ("cayley", "Cayley's Hankel test"), ("intersect", "common points"),
                       ("j", "j-invariant two ways"), ("dual-j", "j of the dual family"),
                       ("iterate", "numeric Poncelet iteration")):
        p = leaf(pc, name, text)
        p.add_argument("--C", help="c11,c12,c13,c22,c23,c33")
        p.add_argument("--D", help="c11,c12,c13,c22,c23,c33")
        p.add_argument("--file")
        if name == "series":
            p.add_argument("--order", type=int, default=8)
        if name == "cayley":
            p.add_argument("--k", type=int)
            p.add_argument("--kmax", type=int, default=12)
        if name == "intersect":
            p.add_argument("--allow-tangent", action="store_true")
        if name == "iterate":
            p.add_argument("--point", required=True, help="x,y or x,y,z on C")
            p.add_argument("--steps", type=int, default=12)
            p.add_argument("--branch", type=int, default=0)

    # dioph
    dp = cmds.add_parser("dioph", help="double equations and Fermat's ascent").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, text in (("pencil", "quadric pencil determinant"), ("search", "small solutions"),
                       ("project", "plane cubic model"), ("ascend", "Fermat's ascent")):
        p = leaf(dp, name, text)
        p.add_argument("--coeffs", help="a,b,c,a',b',c'")
        p.add_argument("--file")
        if name == "search":
            p.add_argument("--bound", type=int, default=10)
        if name == "project":
            p.add_argument("--base", required=True, help="w:x:u:v")
        if name == "ascend":
            p.add_argument("--seed", required=True, help="R0,P0,P1 each as w:x:u:v")
            p.add_argument("--n", type=int, default=5)

    # delpezzo
    dz = cmds.add_parser("delpezzo", help="lines on the quintic del Pezzo surface").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name in ("petersen", "vinberg"):
        p = leaf(dz, name, f"the {name} graph")
        p.add_argument("--format", choices=["json", "dot"], default="json")
    leaf(dz, "partitions", "the three pair partitions of {1,2,3,4}")
    leaf(dz, "automorphisms", "order of Aut of the Petersen graph")
    p = leaf(dz, "flags", "combinatorial flag Poncelet map")
    p.add_argument("index", type=int)

    # series
    sr = cmds.add_parser("series", help="power series and Hankel determinants").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    p = leaf(sr, "sqrt", "square root of a series with constant term 1")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--order", type=int, default=8)
    p = leaf(sr, "hankel", "N_{n,m}")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = leaf(sr, "borel", "Borel's rationality window")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n0", type=int, default=0)
    p.add_argument("--window", type=int, default=4)
    return parser


HANDLERS = {
    "pentagram": cmd_pentagram,
    "poncelet": cmd_poncelet,
    "dioph": cmd_dioph,
    "delpezzo": cmd_delpezzo,
    "series": cmd_series,
}


def run(argv) -> CommandResult:
    """Parse and dispatch; never raises for usage or domain errors."""
    diag: list = []
    try:
        args = build_parser().parse_args(argv)
        payload = HANDLERS[args.command](args, diag)
    except UsageError as exc:
        return CommandResult("usage_error", None, [str(exc)], 1)
    except PentapencilError as exc:
        return CommandResult("error", None, [f"{type(exc).__name__}: {exc}"], 2)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        return CommandResult("usage_error", None, [str(exc)], 1)
    return CommandResult("ok", to_json(payload), diag, 0, args.json)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    result = run(argv)
    if result.json_mode or (result.exit_code and "--json" in argv):
        print(json.dumps(result.envelope(), sort_keys=True))
    elif result.exit_code == 0:
        if isinstance(result.payload, RawText):
            sys.stdout.write(result.payload)
        else:
            print(json.dumps(result.payload, sort_keys=True))
        for line in result.diagnostics:
            print(line, file=sys.stderr)
    if result.exit_code != 0:
        for line in result.diagnostics:
            print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
