"""Command-line front end.

Exit codes: 0 pass, 1 reject (or a failed experiment), 2 usage / parse error.

    selfinverse sample --dist cauchy --n 5 --seed 7
    selfinverse check self-inverse --dist cauchy --n 20000 --seed 3
    selfinverse check exchangeable --joint discrete-table:paper --exact
    selfinverse density ratio --joint "bivariate-normal(0.5)" --grid -2:2:9 --tol 1e-8
    selfinverse experiment all --out reports/
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

import numpy as np

from . import __version__
from . import catalog as C
from .errors import SelfInverseError, SpecDomainError, SpecSyntaxError
from .experiments import EXPERIMENTS, run_experiment
from .grammar import parse_spec
from .inference import (
    analytic_log_cf, empirical_cf, exchangeability_exact, exchangeability_test,
    iid_decomposability_obstruction, log_abs, log_symmetry_test, self_inverse_test,
)
from .ratio import ratio_density_with_error, ratio_sample
from .rng import new_stream

EXIT_PASS, EXIT_REJECT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if v is None:
        return ""
    return str(v)


def write_csv(fh, header, rows):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])


def _atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    with os.fdopen(fd, "w", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _csv_text(header, rows):
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()


def _spec_from_args(args, want=None):
    text = args.dist if args.dist is not None else args.joint
    if text is None:
        raise UsageError("one of --dist or --joint is required")
    spec = parse_spec(text)
    if want == "dist" and not isinstance(spec, C.DistSpec):
        raise UsageError(f"{text!r} is a joint; use --joint")
    if want == "joint" and not isinstance(spec, C.JointSpec):
        raise UsageError(f"{text!r} is a scalar distribution; use --dist")
    return text, spec


def _read_file(path):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    if not rows:
        raise UsageError(f"{path} is empty")
    header = [h.strip() for h in rows[0]]
    try:
        data = np.array([[float(v) for v in r] for r in rows[1:] if r], dtype=float)
    except ValueError as e:
        raise UsageError(f"{path}: non-numeric value ({e})") from e
    if data.ndim != 2 or data.shape[1] not in (1, 2) or len(header) != data.shape[1]:
        raise UsageError(f"{path} must have one column (value) or two (x,y)")
    return data


def cmd_sample(args):
    text, spec = _spec_from_args(args)
    s = new_stream(seed=args.seed, stream_id=args.streams)
    if isinstance(spec, C.DistSpec):
        smp = C.sample(spec, s, args.n)
        header, rows = ("value",), [(v,) for v in smp.values]
    else:
        smp = C.sample_joint(spec, s, args.n)
        header, rows = ("x", "y"), list(zip(smp.x, smp.y))
    body = _csv_text(header, rows)
    if args.out:
        _atomic_write(args.out, body)
        prov = {"spec": text, "canonical": str(spec), "n": args.n, "seed": args.seed,
                "streams": [args.streams], "version": __version__}
        _atomic_write(args.out + ".json", json.dumps(prov, indent=2) + "\n")
    else:
        sys.stdout.write(body)
    return EXIT_PASS


def _check_source(args):
    """Return (source, stream, spec text) for a check: a spec or a file sample."""
    if args.file:
        data = _read_file(args.file)
        return data, None, args.file
    text, spec = _spec_from_args(args)
    return spec, new_stream(seed=args.seed, stream_id=args.streams), text


def cmd_check(args):
    source, stream, text = _check_source(args)
    test = args.test
    if test in ("self-inverse", "log-symmetry"):
        if isinstance(source, np.ndarray):
            if source.shape[1] == 2:
                source = source[:, 0] / source[:, 1]
            else:
                source = source[:, 0]
        if test == "self-inverse":
            rep = self_inverse_test(source, args.n, args.alpha, args.theta, stream=stream)
        else:
            rep = log_symmetry_test(source, args.n, args.alpha, stream=stream)
    elif test == "exchangeable":
        if isinstance(source, C.DiscreteTable) and args.exact:
            rep = exchangeability_exact(source, args.alpha)
        else:
            if args.exact:
                raise UsageError("--exact needs a discrete table joint")
            if isinstance(source, np.ndarray):
                if source.shape[1] != 2:
                    raise UsageError("exchangeability needs a two-column (x,y) file")
                pairs = C.PairSample(source[:, 0], source[:, 1], spec_text=text)
            elif isinstance(source, C.JointSpec):
                pairs = C.sample_joint(source, stream, args.n)
            else:
                raise UsageError("exchangeability needs --joint or a two-column file")
            rep = exchangeability_test(pairs, _grid_arg(args.grid), args.alpha)
    else:  # iid-obstruction
        t = np.linspace(0.0, 10.0, 201)
        if isinstance(source, C.DistSpec) and source.kind in ("log_uniform", "log_rademacher"):
            curve = analytic_log_cf(source, t)
        else:
            if isinstance(source, C.DistSpec):
                z = C.sample(source, stream, args.n).values
            elif isinstance(source, C.JointSpec):
                z = ratio_sample(source, stream, args.n).values
            else:
                z = source[:, 0] / source[:, 1] if source.shape[1] == 2 else source[:, 0]
            curve = empirical_cf(log_abs(z), t)
        rep = iid_decomposability_obstruction(curve, args.alpha)
    out = rep.to_dict()
    out["seed"] = None if stream is None else args.seed
    out["diagnostics"].setdefault("spec", text)
    out["diagnostics"]["streams"] = None if stream is None else [args.streams]
    out["diagnostics"]["version"] = __version__
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_PASS if rep.passed else EXIT_REJECT


def _grid_arg(g):
    if g is None:
        return 6
    try:
        if "," in g:
            return [float(v) for v in g.split(",")]
        return int(g)
    except ValueError as e:
        raise UsageError(f"bad --grid {g!r}: use k or comma-separated cut points") from e


def _zgrid(g):
    try:
        lo, hi, steps = g.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError as e:
        raise UsageError(f"bad --grid {g!r}: expected zmin:zmax:steps") from e
    if steps < 1:
        raise UsageError("steps must be >= 1")
    return np.linspace(lo, hi, steps)


def cmd_density(args):
    text, spec = _spec_from_args(args, want="joint")
    rows = []
    for z in _zgrid(args.grid or "-5:5:101"):
        v, e = ratio_density_with_error(spec, float(z), args.tol)
        rows.append((float(z), v, e))
    body = _csv_text(("z", "f_Z", "err_bound"), rows)
    if args.out:
        _atomic_write(args.out, body)
    else:
        sys.stdout.write(body)
    return EXIT_PASS


def cmd_experiment(args):
    names = list(EXPERIMENTS) if args.name == "all" else [args.name]
    results = [run_experiment(nm, args.seed, args.n if nm not in ("discrete-table", "cf-witness")
                              else None, args.alpha, args.streams) for nm in names]
    summary = {
        "seed": args.seed,
        "stream_base": args.streams,
        "version": __version__,
        "passed": all(r.passed for r in results),
        "failed": [r.name for r in results if not r.passed],
        "experiments": [r.summary() for r in results],
    }
    if args.out:
        for r in results:
            _atomic_write(os.path.join(args.out, f"{r.name}.json"),
                          json.dumps(r.summary(), indent=2, default=str) + "\n")
            _atomic_write(os.path.join(args.out, f"{r.name}.csv"),
                          _csv_text(r.table_header, r.table_rows))
        _atomic_write(os.path.join(args.out, "summary.json"),
                      json.dumps(summary, indent=2, default=str) + "\n")
    sys.stdout.write(json.dumps(summary, indent=2, default=str) + "\n")
    return EXIT_PASS if summary["passed"] else EXIT_REJECT


def _add_common(p, n_default=20_000):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dist", help="scalar distribution spec")
    g.add_argument("--joint", help="joint distribution spec")
    p.add_argument("--n", type=int, default=n_default)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--streams", type=int, default=0, help="stream id (base) under --seed")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="selfinverse", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw from a spec and write CSV")
    _add_common(p, n_default=1000)
    p.add_argument("--out", help="CSV path (a .json provenance file is written next to it)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check", help="run a test; exit 0 pass, 1 reject")
    p.add_argument("test", choices=["self-inverse", "log-symmetry", "exchangeable", "iid-obstruction"])
    _add_common(p)
    p.add_argument("--file", help="CSV with column value, or columns x,y")
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--grid", help="bins per axis k, or comma-separated cut points")
    p.add_argument("--exact", action="store_true", help="exact check for discrete tables")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("density", help="evaluate densities on a grid")
    p.add_argument("what", choices=["ratio"])
    _add_common(p)
    p.add_argument("--grid", help="zmin:zmax:steps")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", help="CSV path")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("experiment", help="reproduce a named claim; 'all' runs every one")
    p.add_argument("name", choices=["all", *EXPERIMENTS])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--streams", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--out", help="report directory")
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SpecSyntaxError as e:
        print(e.diagnostic(), file=sys.stderr)
    except (SpecDomainError, UsageError, SelfInverseError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
