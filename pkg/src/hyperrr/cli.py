"""Command-line front end driven by line-oriented job files.

Job file grammar, one directive per line, ``#`` starts a comment::

    field p=<int> t=<int> [mod=<c0,c1,...>]
    curve f=<c0,c1,...> h=<c0,...> [singular_ok]
    divisor (<a>,<b>)*<m> ... inf*<m>
    kappa <c0,c1,...>
    g (<a>,<b>) (<a>,<b>) ...
    fit shift=<c> exps=<lo>..<hi> (<x>,<y>) ...
    cmd <basis|encode|distance|dim|points|fitcurve> [--oracle]

Extension-field constants are written ``[d0,d1,...]``.
"""
from __future__ import annotations

import argparse
import re
import sys
import warnings
from dataclasses import dataclass

from . import agcode
from .curve import Curve, Point, fit_curve
from .errors import BudgetExceeded, HyperRRError, ParseError, SemanticError
from .funcfield import Divisor
from .gfield import FieldCtx, FieldElement
from .gpoly import Poly
from .rrbasis import dim_oracle, rr_basis, rr_dim

COMMANDS = ("basis", "encode", "distance", "dim", "points", "fitcurve")
EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


@dataclass(frozen=True)
class FitSpec:
    shift: FieldElement
    exponents: tuple[int, int]
    samples: tuple[tuple[FieldElement, FieldElement], ...]


@dataclass(frozen=True)
class JobSpec:
    ctx: FieldCtx
    command: str
    f: Poly | None = None
    h: Poly | None = None
    singular_ok: bool = False
    divisor: tuple[tuple[Point, int], ...] | None = None
    omega: int = 0
    kappa: Poly | None = None
    g_points: tuple[Point, ...] = ()
    fit: FitSpec | None = None
    oracle: bool = False

    def curve(self) -> Curve:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return Curve(self.ctx, self.f, self.h, self.singular_ok)

    def make_divisor(self, curve: Curve) -> Divisor:
        return Divisor.reduced(curve, self.divisor, self.omega)

    @property
    def n(self) -> int:
        return self.omega + self.j

    @property
    def j(self) -> int:
        return sum(m for _, m in self.divisor or ())


# -- tokenizing -------------------------------------------------------------

def _split_depth0(text: str, sep) -> list[str]:
    """Split on separator characters that sit outside () and []."""
    out, cur, depth = [], [], 0
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and sep(ch):
            if cur:
                out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def _tokens(line: str) -> list[str]:
    return _split_depth0(line, str.isspace)


def _elem(ctx: FieldCtx, text: str, lineno: int) -> FieldElement:
    try:
        return ctx.parse(text)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def _coeffs(ctx: FieldCtx, text: str, lineno: int) -> Poly:
    parts = _split_depth0(text, lambda c: c == ",")
    if not parts:
        raise ParseError(lineno, "empty coefficient list")
    return Poly(ctx, [_elem(ctx, s, lineno) for s in parts])


_PAIR = re.compile(r"^\((.*)\)(?:\*(\d+))?$")


def _pair(ctx: FieldCtx, token: str, lineno: int) -> tuple[FieldElement, FieldElement, int | None]:
    m = _PAIR.match(token)
    if not m:
        raise ParseError(lineno, f"expected a point '(a,b)', got {token!r}")
    parts = _split_depth0(m.group(1), lambda c: c == ",")
    if len(parts) != 2:
        raise ParseError(lineno, f"a point needs two coordinates: {token!r}")
    mult = int(m.group(2)) if m.group(2) is not None else None
    return _elem(ctx, parts[0], lineno), _elem(ctx, parts[1], lineno), mult


def _keyvals(tokens: list[str], lineno: int, allowed: set[str], flags: set[str] = frozenset()):
    kv, seen_flags = {}, set()
    for tok in tokens:
        if "=" in tok:
            key, _, val = tok.partition("=")
            if key not in allowed:
                raise ParseError(lineno, f"unknown key {key!r}")
            kv[key] = val
        elif tok in flags:
            seen_flags.add(tok)
        else:
            raise ParseError(lineno, f"unexpected token {tok!r}")
    return kv, seen_flags


def _int(text: str, lineno: int, what: str) -> int:
    if not re.fullmatch(r"\d+", text or ""):
        raise ParseError(lineno, f"{what} must be a non-negative integer, got {text!r}")
    return int(text)


# -- parsing ------------------------------------------------------------------

def parse_jobspec(text: str) -> JobSpec:
    directives: dict[str, tuple[int, list[str]]] = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = _tokens(line)
        key = toks[0]
        if key not in ("field", "curve", "divisor", "kappa", "g", "fit", "cmd"):
            raise ParseError(lineno, f"unknown directive {key!r}")
        if key in directives:
            raise ParseError(lineno, f"duplicate directive {key!r}")
        directives[key] = (lineno, toks[1:])
    end = max(1, len(lines))

    if "field" not in directives:
        raise ParseError(end, "missing field")
    lineno, toks = directives["field"]
    kv, _ = _keyvals(toks, lineno, {"p", "t", "mod"})
    if "p" not in kv:
        raise ParseError(lineno, "field needs p=<prime>")
    p = _int(kv["p"], lineno, "p")
    t = _int(kv.get("t", "1"), lineno, "t")
    mod = None
    if "mod" in kv:
        mod = [_int(c, lineno, "modulus coefficient") for c in kv["mod"].split(",")]
    try:
        ctx = FieldCtx(p, t, mod)
    except HyperRRError as exc:
        raise SemanticError(lineno, f"{exc.code}: {exc}") from None

    if "cmd" not in directives:
        raise ParseError(end, "missing cmd")
    lineno, toks = directives["cmd"]
    if not toks or toks[0] not in COMMANDS:
        raise ParseError(lineno, f"cmd must be one of {', '.join(COMMANDS)}")
    command = toks[0]
    _, flags = _keyvals(toks[1:], lineno, set(), {"--oracle"})
    oracle = "--oracle" in flags

    fields: dict = {"ctx": ctx, "command": command, "oracle": oracle}
    curve = None
    if "curve" in directives:
        lineno, toks = directives["curve"]
        kv, flags = _keyvals(toks, lineno, {"f", "h"}, {"singular_ok"})
        if "f" not in kv:
            raise ParseError(lineno, "curve needs f=<coefficients>")
        fields["f"] = _coeffs(ctx, kv["f"], lineno)
        fields["h"] = _coeffs(ctx, kv["h"], lineno) if "h" in kv else Poly(ctx)
        fields["singular_ok"] = "singular_ok" in flags
        try:
            curve = JobSpec(**fields).curve()
        except HyperRRError as exc:
            raise SemanticError(lineno, f"{exc.code}: {exc}") from None
    elif command != "fitcurve":
        raise ParseError(end, "missing curve")

    def on_curve(a, b, lineno) -> Point:
        P = Point(a, b)
        if curve is not None and not curve.on_curve(P):
            raise SemanticError(lineno, f"point {P} is not on the curve")
        return P

    if "divisor" in directives:
        lineno, toks = directives["divisor"]
        pts, omega, seen_inf = [], 0, False
        for tok in toks:
            m = re.fullmatch(r"inf(?:\*(\d+))?", tok)
            if m:
                if seen_inf:
                    raise ParseError(lineno, "inf given twice")
                seen_inf = True
                omega = int(m.group(1)) if m.group(1) is not None else 1
                continue
            a, b, mult = _pair(ctx, tok, lineno)
            mult = 1 if mult is None else mult
            if mult < 1:
                raise ParseError(lineno, "point multiplicities must be >= 1")
            pts.append((on_curve(a, b, lineno), mult))
        fields["divisor"] = tuple(pts)
        fields["omega"] = omega
    elif command in ("basis", "encode", "distance", "dim"):
        raise ParseError(end, "missing divisor")

    if "kappa" in directives:
        lineno, toks = directives["kappa"]
        if len(toks) != 1:
            raise ParseError(lineno, "kappa takes one coefficient list")
        fields["kappa"] = _coeffs(ctx, toks[0], lineno)

    if "g" in directives:
        lineno, toks = directives["g"]
        gp = []
        for tok in toks:
            a, b, mult = _pair(ctx, tok, lineno)
            if mult is not None:
                raise ParseError(lineno, "evaluation points take no multiplicity")
            gp.append(on_curve(a, b, lineno))
        fields["g_points"] = tuple(gp)
    elif command in ("encode", "distance"):
        raise ParseError(end, "missing g")

    if "fit" in directives:
        lineno, toks = directives["fit"]
        kv_toks = [t for t in toks if "=" in t]
        kv, _ = _keyvals(kv_toks, lineno, {"shift", "exps"})
        if "shift" not in kv or "exps" not in kv:
            raise ParseError(lineno, "fit needs shift=<c> and exps=<lo>..<hi>")
        m = re.fullmatch(r"(\d+)\.\.(\d+)", kv["exps"])
        if not m:
            raise ParseError(lineno, f"bad exponent range {kv['exps']!r}")
        samples = []
        for tok in toks:
            if "=" in tok:
                continue
            a, b, mult = _pair(ctx, tok, lineno)
            if mult is not None:
                raise ParseError(lineno, "samples take no multiplicity")
            samples.append((a, b))
        fields["fit"] = FitSpec(_elem(ctx, kv["shift"], lineno), (int(m.group(1)), int(m.group(2))), tuple(samples))
    elif command == "fitcurve":
        raise ParseError(end, "missing fit")

    return JobSpec(**fields)


def render_jobspec(job: JobSpec) -> str:
    ctx = job.ctx
    r = ctx.render

    def coeffs(p: Poly) -> str:
        return ",".join(r(c) for c in p.coeffs) if p else r(ctx.zero)

    lines = [f"field p={ctx.p} t={ctx.t}" + (f" mod={','.join(map(str, ctx.modulus))}" if ctx.modulus else "")]
    if job.f is not None:
        lines.append(f"curve f={coeffs(job.f)} h={coeffs(job.h)}" + (" singular_ok" if job.singular_ok else ""))
    if job.divisor is not None:
        parts = [f"({r(P.a)},{r(P.b)})*{m}" for P, m in job.divisor] + [f"inf*{job.omega}"]
        lines.append("divisor " + " ".join(parts))
    if job.kappa is not None:
        lines.append(f"kappa {coeffs(job.kappa)}")
    if job.g_points:
        lines.append("g " + " ".join(f"({r(P.a)},{r(P.b)})" for P in job.g_points))
    if job.fit is not None:
        fs = job.fit
        lo, hi = fs.exponents
        lines.append(
            f"fit shift={r(fs.shift)} exps={lo}..{hi} " + " ".join(f"({r(x)},{r(y)})" for x, y in fs.samples)
        )
    lines.append(f"cmd {job.command}" + (" --oracle" if job.oracle else ""))
    return "\n".join(lines) + "\n"


# -- running ------------------------------------------------------------------

def _block(title: str, tsv: str) -> list[str]:
    return [title, tsv, "---"] if tsv else [title, "---"]


def _code_lines(job: JobSpec, with_matrices: bool, budget: int) -> list[str]:
    curve = job.curve()
    D = job.make_divisor(curve)
    code = agcode.generator_matrix(curve, D, list(job.g_points), job.kappa)
    out = []
    if with_matrices:
        out += _block(f"generator rows={code.gen.rows} cols={code.gen.cols}", code.gen.to_tsv())
        H, perm = agcode.parity_check(code)
        out += _block(f"parity_check rows={H.rows} cols={H.cols}", H.to_tsv())
        if perm is not None:
            out.append("permutation " + " ".join(map(str, perm)))
    try:
        agcode.min_distance(code, budget)
        out.append(code.report())
    except BudgetExceeded:
        out.append(code.report() + f" bounds=[{max(code.goppa_bound, 1)},{code.singleton_bound}]")
    return out


def run(job: JobSpec, budget: int = agcode.DEFAULT_BUDGET) -> tuple[str, int]:
    """Execute a job; returns (stdout text, exit code)."""
    cmd = job.command
    lines: list[str] = []
    if cmd == "fitcurve":
        fs = job.fit
        fit = fit_curve(job.ctx, fs.shift, fs.exponents, list(fs.samples))
        r = job.ctx.render
        lo, hi = fs.exponents
        lines.append(f"shifted shift={r(fs.shift)} exps={lo}..{hi} coeffs={','.join(r(c) for c in fit.shifted)}")
        lines.append(f"plain f={','.join(r(c) for c in fit.poly.coeffs) or '0'}")
        V = fit.vandermonde
        lines += _block(f"vandermonde rows={V.rows} cols={V.cols}", V.to_tsv())
        Vi = V.inverse()
        lines += _block(f"vandermonde_inverse rows={Vi.rows} cols={Vi.cols}", Vi.to_tsv())
    elif cmd == "points":
        pts = job.curve().points()
        lines.append(f"points count={len(pts)}")
        lines += [str(P) for P in pts]
    elif cmd == "basis":
        curve = job.curve()
        lines.append(rr_basis(curve, job.make_divisor(curve), job.kappa).render())
    elif cmd == "dim":
        curve = job.curve()
        D = job.make_divisor(curve)
        line = f"dim g={curve.genus} j={job.j} n={job.n} rr_dim={rr_dim(curve.genus, job.j, job.n)}"
        if job.oracle:
            line += f" oracle={dim_oracle(curve, D)}"
        lines.append(line)
    elif cmd == "encode":
        lines += _code_lines(job, True, budget)
    elif cmd == "distance":
        lines += _code_lines(job, False, budget)
    return "\n".join(lines) + "\n", EXIT_OK


def dim_table(g: int, j: int, n_lo: int, n_hi: int) -> str:
    return "\n".join(f"n={n} dim={rr_dim(g, j, n)}" for n in range(n_lo, n_hi + 1)) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="hyperrr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="action", required=True)
    p_run = sub.add_parser("run", help="run a job file ('-' reads stdin)")
    p_run.add_argument("jobfile")
    p_run.add_argument("--budget", type=int, default=agcode.DEFAULT_BUDGET)
    p_dim = sub.add_parser("dim-table", help="print dim L(D) over a range of degrees")
    p_dim.add_argument("-g", "--genus", type=int, required=True)
    p_dim.add_argument("-j", type=int, required=True)
    p_dim.add_argument("--n-min", type=int)
    p_dim.add_argument("--n-max", type=int)
    args = parser.parse_args(argv)

    try:
        if args.action == "dim-table":
            lo = args.j if args.n_min is None else args.n_min
            hi = 2 * args.genus + 1 if args.n_max is None else args.n_max
            sys.stdout.write(dim_table(args.genus, args.j, lo, hi))
            return EXIT_OK
        if args.jobfile == "-":
            text = sys.stdin.read()
        else:
            with open(args.jobfile, encoding="utf-8") as fh:
                text = fh.read()
        job = parse_jobspec(text)
        out, code = run(job, args.budget)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HyperRRError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error[ValueError]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error[IO]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if job.f is not None and job.singular_ok:
        for note in job.curve().notes:
            print(f"warning: {note}", file=sys.stderr)
    sys.stdout.write(out)
    return code
