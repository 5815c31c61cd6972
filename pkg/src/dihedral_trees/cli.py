"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 property violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .arith import decompose, xi_delta
from .asym import asymptotic_ratio, mahler_roots
from .errors import DomainError, InvalidParameters, PropertyViolation
from .genfun import generating_function
from .genset import GenSet, build_graph, is_connected, validate
from .polyalg import associated_poly, chebyshev_transform, q_constant
from .treecount import spectrum, tree_count_report
from .verify import run_checks

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3
ENGINES = ("all", "exact", "oracle", "spectral", "chebyshev")
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


def fmt_float(x):
    if x is None:
        return None
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return float(f"{x:.12g}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _clean(obj):
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def emit_json(obj, out):
    json.dump(_clean(obj), out, indent=2)
    out.write("\n")


def emit_csv(header, rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])


def emit_text(pairs, out):
    for k, v in pairs:
        out.write(f"{k}: {_cell(v)}\n")


def _int_list(text) -> tuple[int, ...]:
    if text is None:
        return ()
    if isinstance(text, (list, tuple)):
        return tuple(int(v) for v in text)
    text = str(text).strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def thread_cap() -> int:
    raw = os.environ.get("DIHEDRAL_TREES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(fn, items):
    """Map in parallel (bounded by DIHEDRAL_TREES_THREADS), results in input order."""
    items = list(items)
    workers = min(thread_cap(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


@dataclass
class JobConfig:
    gs: GenSet
    n: int | None
    n_max: int | None
    engine: str
    fmt: str
    grid: int
    terms: int | None
    graph_format: str


_DEFAULTS = {"engine": "all", "format": "json", "grid": 2**16, "graph_format": "edges"}


def build_config(args) -> JobConfig:
    conf = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                conf = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None

    def pick(name, key=None):
        v = getattr(args, name, None)
        if v is None:
            v = conf.get(key or name)
        if v is None:
            v = _DEFAULTS.get(key or name)
        return v

    betas, gammas = pick("betas"), pick("gammas")
    if gammas is None:
        raise UsageError("--gammas is required (directly or through --config)")
    try:
        gs = GenSet(_int_list(betas), _int_list(gammas))
    except InvalidParameters as exc:
        raise UsageError(str(exc)) from None
    n, n_max = pick("n"), pick("n_max")
    for label, v in (("--n", n), ("--n-max", n_max)):
        if v is not None and int(v) < 1:
            raise UsageError(f"{label} must be >= 1, got {v}")
    engine, fmt = pick("engine"), pick("format")
    if engine not in ENGINES:
        raise UsageError(f"unknown engine {engine!r}")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    grid = int(pick("grid"))
    if grid < 1:
        raise UsageError("--grid must be >= 1")
    terms = pick("terms")
    return JobConfig(gs=gs, n=None if n is None else int(n), n_max=None if n_max is None else int(n_max),
                     engine=engine, fmt=fmt, grid=grid,
                     terms=None if terms is None else int(terms),
                     graph_format=pick("graph_format"))


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


def _n_range(cfg: JobConfig):
    if cfg.n is not None:
        return [cfg.n]
    return list(range(1, _need(cfg.n_max, "--n or --n-max") + 1))


def cmd_tau(cfg: JobConfig, out) -> int:
    n = _need(cfg.n, "--n")
    rep = tree_count_report(cfg.gs, n)
    d = rep.to_dict()
    if cfg.engine != "all":
        keep = {"exact": "tau_exact", "oracle": "tau_oracle",
                "spectral": "tau_spectral", "chebyshev": "tau_chebyshev"}[cfg.engine]
        d = {k: v for k, v in d.items()
             if k in ("n", "tau", keep, "engines_agree", "connected", "graph_valid")}
    if cfg.fmt == "json":
        emit_json(d, out)
    elif cfg.fmt == "csv":
        emit_csv(list(d), [list(d.values())], out)
    else:
        emit_text(d.items(), out)
    return EXIT_OK


def cmd_series(cfg: JobConfig, out) -> int:
    n_max = _need(cfg.n_max, "--n-max")
    gs = cfg.gs
    reports = pmap(lambda n: tree_count_report(gs, n), range(1, n_max + 1))
    rows = [(r.n, str(r.tau_exact), r.connected, r.engines_agree) for r in reports]
    if cfg.fmt == "json":
        emit_json([{"n": n, "tau": t, "connected": c, "engines_agree": a} for n, t, c, a in rows], out)
    elif cfg.fmt == "csv":
        emit_csv(["n", "tau", "connected", "engines_agree"], rows, out)
    else:
        for n, t, c, a in rows:
            out.write(f"{n}\t{t}\t{_cell(c)}\t{_cell(a)}\n")
    return EXIT_OK


def cmd_spectrum(cfg: JobConfig, out) -> int:
    n = _need(cfg.n, "--n")
    pairs = spectrum(cfg.gs, n)
    rows = [(p.j, p.lambda1, p.lambda2) for p in pairs]
    if cfg.fmt == "json":
        emit_json([{"j": j, "lambda1": a, "lambda2": b} for j, a, b in rows], out)
    elif cfg.fmt == "csv":
        emit_csv(["j", "lambda1", "lambda2"], rows, out)
    else:
        for j, a, b in rows:
            out.write(f"{j}\t{_cell(a)}\t{_cell(b)}\n")
    return EXIT_OK


def cmd_arith(cfg: JobConfig, out) -> int:
    gs = cfg.gs
    xi, delta = xi_delta(gs)
    ns = [n for n in _n_range(cfg) if is_connected(gs, n)]

    def one(n):
        from .treecount import tau_exact
        return decompose(gs, n, tau_exact(gs, n))

    decs = pmap(one, ns)
    if cfg.fmt == "json":
        emit_json({"xi": xi, "delta": delta, "decompositions": [d.to_dict() for d in decs]}, out)
    elif cfg.fmt == "csv":
        emit_csv(["n", "xi", "delta", "a", "parity_case"],
                 [(d.n, d.xi, d.delta, d.a, d.parity_case) for d in decs], out)
    else:
        out.write(f"xi: {xi}\ndelta: {delta}\n")
        for d in decs:
            out.write(f"{d.n}\t{d.parity_case}\ta={d.a}\n")
    return EXIT_OK


def cmd_asym(cfg: JobConfig, out) -> int:
    P = associated_poly(cfg.gs)
    est = mahler_roots(P, grid=cfg.grid)
    ratios = asymptotic_ratio(cfg.gs, cfg.n_max or 40)
    if cfg.fmt == "json":
        d = est.to_dict()
        d["q"] = q_constant(cfg.gs)
        d["ratios"] = [{"n": n, "ratio": r} for n, r in ratios]
        emit_json(d, out)
    elif cfg.fmt == "csv":
        emit_csv(["n", "ratio"], ratios, out)
    else:
        emit_text([("A_roots", est.A_roots), ("A_quadrature", est.A_quadrature),
                   ("agreement", est.agreement)], out)
        for n, r in ratios:
            out.write(f"{n}\t{_cell(r)}\n")
    return EXIT_OK


def cmd_gf(cfg: JobConfig, out) -> int:
    gf = generating_function(cfg.gs, terms=cfg.terms)
    d = gf.to_dict()
    P = associated_poly(cfg.gs)
    from .genfun import verify_symmetry
    d["eta"] = P.eta
    d["symmetric"] = verify_symmetry(gf, P.eta)
    if cfg.fmt == "json":
        emit_json(d, out)
    elif cfg.fmt == "csv":
        emit_csv(["degree", "numerator", "denominator"],
                 [(k, gf.numerator.coeffs[k] if k < len(gf.numerator.coeffs) else 0,
                   gf.denominator.coeffs[k] if k < len(gf.denominator.coeffs) else 0)
                  for k in range(max(len(gf.numerator.coeffs), len(gf.denominator.coeffs)))], out)
    else:
        emit_text([("numerator", gf.numerator), ("denominator", gf.denominator),
                   ("order", gf.order), ("terms_used", gf.terms_used),
                   ("symmetric", d["symmetric"])], out)
    return EXIT_OK


def cmd_graph(cfg: JobConfig, out) -> int:
    n = _need(cfg.n, "--n")
    report = validate(cfg.gs, n)
    if not report.graph_valid:
        raise InvalidParameters("; ".join(report.violations))
    g = build_graph(cfg.gs, n)
    if cfg.graph_format == "dot":
        out.write(g.to_dot())
    else:
        out.write(g.to_edgelist())
    return EXIT_OK


def cmd_verify(cfg: JobConfig, out) -> int:
    n_max = cfg.n_max or 12
    results = run_checks(cfg.gs, n_max)
    failed = [r for r in results if not r.ok]
    if cfg.fmt == "json":
        emit_json({"passed": not failed,
                   "checks": [{"name": r.name, "ok": r.ok, "skipped": r.skipped, "detail": r.detail}
                              for r in results]}, out)
    elif cfg.fmt == "csv":
        emit_csv(["check", "status", "detail"],
                 [(r.name, "SKIP" if r.skipped else ("PASS" if r.ok else "FAIL"), r.detail)
                  for r in results], out)
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_poly(cfg: JobConfig, out) -> int:
    P = associated_poly(cfg.gs)
    d = {"P": P.to_json(), "r": P.r, "eta": P.eta, "q": q_constant(cfg.gs),
         "Q": chebyshev_transform(P).to_json()}
    if cfg.fmt == "json":
        emit_json(d, out)
    else:
        emit_text(d.items(), out)
    return EXIT_OK


COMMANDS = {
    "tau": (cmd_tau, "tau(n) from every engine"),
    "series": (cmd_series, "tau(n) for n = 1..n_max"),
    "spectrum": (cmd_spectrum, "Laplacian eigenvalue pairs"),
    "arith": (cmd_arith, "square decomposition of tau(n)"),
    "asym": (cmd_asym, "Mahler measure and asymptotic ratios"),
    "gf": (cmd_gf, "rational generating function"),
    "graph": (cmd_graph, "export the graph as DOT or edge list"),
    "verify": (cmd_verify, "cross-engine and property sweep"),
    "poly": (cmd_poly, "associated polynomial and Chebyshev transform"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-trees",
        description="Spanning trees of Cayley graphs on dihedral groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--betas", help="comma-separated betas (may be empty)")
        p.add_argument("--gammas", help="comma-separated gammas")
        p.add_argument("--n", type=int)
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--engine", choices=ENGINES)
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--grid", type=int, help="quadrature grid size")
        p.add_argument("--terms", type=int, help="number of tau terms for gf fitting")
        p.add_argument("--graph-format", dest="graph_format", choices=("dot", "edges"))
        p.add_argument("--config", help="JSON file with any of the options above")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = build_config(args)
        buf = io.StringIO()
        code = COMMANDS[args.command][0](cfg, buf)
        out.write(buf.getvalue())
        return code
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except PropertyViolation as exc:
        err.write(f"property violation: {type(exc).__name__}: {exc}\n")
        return EXIT_VIOLATION
    except DomainError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
