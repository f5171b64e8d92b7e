"""Command-line front end.

    spreadlab spread    MATRIX
    spreadlab certify   MATRIX [--which all]
    spreadlab search    --n N [--space ...] [--mode ...] [--seed S]
                        [--restarts R] [--threads T]
    spreadlab scan      [--eta E] [--resolution R] [--emit csv|svg|csv,svg]
                        --out PATH
    spreadlab construct FAMILY [--n N] --out PATH
    spreadlab perturb   BASE PERTURBATION

Each command prints one JSON run report to stdout and the wall-clock
timing to stderr.  Exit codes: 0 success / all certificates passed,
1 certificate failure, 2 parse error, 3 non-convergence, 4 precondition
violation, 5 I/O error.
"""

import argparse
import math
import os
import sys
import time
from pathlib import Path

from . import certificates as certs
from . import extremal, matrixio, scanlab
from .errors import InvalidParameter, NonConvergence, ParseError, \
    PerronAnomaly, PreconditionError
from .report import certificate_dict, interval_list, make_report, \
    render_report, scan_summary_dict, search_report_dict, spread_result_dict
from .spread import spread

EXIT_OK = 0
EXIT_CERT_FAILURE = 1
EXIT_PARSE = 2
EXIT_NONCONVERGENCE = 3
EXIT_PRECONDITION = 4
EXIT_IO = 5

#: selectable certificate families, in report order.
CERTIFICATE_PRODUCERS = {
    "gamma": lambda a: [certs.gamma_certificate(a)],
    "frobenius": lambda a: [certs.frobenius_identity(a)],
    "nonreal-quadratic": certs.nonreal_eigenvalue_certificates,
    "nonreal-linear": certs.nonreal_linear_certificates,
    "bendixson": lambda a: [certs.bendixson_certificate(a)],
    "realpart-floor": lambda a: [certs.realpart_floor_certificate(a)],
    "trace-square": lambda a: [certs.trace_square_certificate(a)],
    "rounding-defect": lambda a: [certs.rounding_defect_certificate(a)],
    "main-bound": lambda a: [certs.main_bound_certificate(a)],
}

CONSTRUCT_FAMILIES = ("kron-extremal", "join", "catalog")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadlab",
        description="Eigenvalue spread of non-negative matrices: "
                    "certificates, extremal search, and scan reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spread", help="spread of a matrix file")
    p.add_argument("matrix", help="matrix file path")

    p = sub.add_parser("certify", help="emit bound certificates")
    p.add_argument("matrix", help="matrix file path")
    p.add_argument("--which", default="all",
                   help="comma-separated certificate names, or 'all' "
                        f"(names: {', '.join(CERTIFICATE_PRODUCERS)})")

    p = sub.add_parser("search", help="search for spread maximizers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--space", default=extremal.SPACE_ALL,
                   choices=[extremal.SPACE_ALL, extremal.SPACE_ZERO_DIAG])
    p.add_argument("--mode", default="exhaustive",
                   choices=["exhaustive", "local"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("scan", help="scan the bound profile f(., eta)")
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--resolution", type=int, default=4001)
    p.add_argument("--emit", default="csv",
                   help="csv, svg, or csv,svg for both")
    p.add_argument("--out", required=True,
                   help="output path (suffix swapped per format when "
                        "emitting both)")

    p = sub.add_parser("construct", help="write an extremal family matrix")
    p.add_argument("family", choices=CONSTRUCT_FAMILIES)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", required=True,
                   help="output file (directory for the catalog)")

    p = sub.add_parser("perturb", help="Schur perturbation certificate")
    p.add_argument("base", help="base matrix file")
    p.add_argument("perturbation", help="perturbation matrix file")
    return parser


def _cmd_spread(args):
    a = matrixio.read_matrix(args.matrix)
    result = spread(a)
    return {"matrix": args.matrix}, spread_result_dict(result), EXIT_OK


def _resolve_which(which: str) -> list:
    if which.strip() == "all":
        return list(CERTIFICATE_PRODUCERS)
    names = [w.strip() for w in which.split(",") if w.strip()]
    for name in names:
        if name not in CERTIFICATE_PRODUCERS:
            raise InvalidParameter(
                f"unknown certificate {name!r}; expected one of "
                f"{', '.join(CERTIFICATE_PRODUCERS)} or 'all'"
            )
    if not names:
        raise InvalidParameter("no certificates selected")
    return names


def _cmd_certify(args):
    a = matrixio.read_matrix(args.matrix)
    names = _resolve_which(args.which)
    out = []
    for name in names:
        out.extend(CERTIFICATE_PRODUCERS[name](a))
    all_passed = all(c.passed for c in out)
    results = {
        "certificates": [certificate_dict(c) for c in out],
        "all_passed": all_passed,
    }
    inputs = {"matrix": args.matrix, "which": names}
    return inputs, results, EXIT_OK if all_passed else EXIT_CERT_FAILURE


def _cmd_search(args):
    if args.mode == "exhaustive":
        report = extremal.exhaustive_search(args.n, args.space,
                                            threads=args.threads)
    else:
        report = extremal.local_search(
            args.n, seed=args.seed, restarts=args.restarts,
            zero_diag=(args.space == extremal.SPACE_ZERO_DIAG),
            threads=args.threads,
        )
    inputs = {
        "n": args.n,
        "space": args.space,
        "mode": args.mode,
        "seed": args.seed,
        "restarts": args.restarts,
    }
    return inputs, search_report_dict(report), EXIT_OK


def _scan_out_paths(out: str, formats: list) -> dict:
    if len(formats) == 1:
        return {formats[0]: Path(out)}
    return {fmt: Path(out).with_suffix(f".{fmt}") for fmt in formats}


def _write_scan_csv(path: Path, table) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,f\n")
        for x, f in table.rows:
            fh.write(f"{float(x)!r},{float(f)!r}\n")


def _cmd_scan(args):
    formats = [f.strip() for f in args.emit.split(",") if f.strip()]
    for fmt in formats:
        if fmt not in ("csv", "svg"):
            raise InvalidParameter(f"unknown emit format {fmt!r}")
    if not formats:
        raise InvalidParameter("no emit format selected")
    table = scanlab.f_max(args.eta, args.resolution)
    highlight = None
    if args.eta == 0.0:
        highlight = scanlab.f_sublevel(scanlab.FIGURE_THRESHOLD, 0.0,
                                       args.resolution)
    paths = _scan_out_paths(args.out, formats)
    written = []
    for fmt in formats:
        path = paths[fmt]
        if fmt == "csv":
            _write_scan_csv(path, table)
        else:
            from .figures import render_scan_figure
            render_scan_figure(table, path, threshold=scanlab.FIGURE_THRESHOLD,
                               highlight=highlight)
        written.append(str(path))
    results = scan_summary_dict(table)
    results["threshold"] = scanlab.FIGURE_THRESHOLD
    if highlight is not None:
        results["highlight"] = interval_list(highlight)
    results["outputs"] = written
    inputs = {
        "eta": args.eta,
        "resolution": args.resolution,
        "emit": formats,
        "out": args.out,
    }
    return inputs, results, EXIT_OK


def _cmd_construct(args):
    inputs = {"family": args.family, "n": args.n, "out": args.out}
    if args.family == "catalog":
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        files = []
        expected = []
        for m, value in extremal.small_spread_catalog():
            path = out_dir / f"catalog_n{m.shape[0]}.txt"
            matrixio.write_matrix(path, m,
                                  comment=f"expected spread {value!r}")
            files.append(str(path))
            expected.append(value)
        results = {"files": files, "expected_spreads": expected}
        return inputs, results, EXIT_OK
    if args.n is None:
        raise InvalidParameter(f"--n is required for {args.family}")
    if args.family == "kron-extremal":
        a = extremal.construct_kron_extremal(args.n)
        expected = {"expected_spread": 2.0 * args.n / math.sqrt(3.0)}
    else:
        a = extremal.construct_join(args.n)
        expected = {
            "expected_spread_lower_bound":
                (2.0 * args.n - 1.0) / math.sqrt(3.0),
        }
    matrixio.write_matrix(Path(args.out), a)
    results = {"file": args.out, "n": args.n}
    results.update(expected)
    return inputs, results, EXIT_OK


def _cmd_perturb(args):
    base = matrixio.read_matrix(args.base)
    pert = matrixio.read_matrix(args.perturbation)
    cert = certs.perturbation_bound(base, pert)
    inputs = {"base": args.base, "perturbation": args.perturbation}
    results = {
        "certificates": [certificate_dict(cert)],
        "all_passed": cert.passed,
    }
    return inputs, results, EXIT_OK if cert.passed else EXIT_CERT_FAILURE


_HANDLERS = {
    "spread": _cmd_spread,
    "certify": _cmd_certify,
    "search": _cmd_search,
    "scan": _cmd_scan,
    "construct": _cmd_construct,
    "perturb": _cmd_perturb,
}


def main(argv=None) -> int:
    if "SPREADLAB_THREADS" in os.environ:
        # validated here so a bad env var fails fast on every command
        try:
            int(os.environ["SPREADLAB_THREADS"])
        except ValueError:
            print("error: SPREADLAB_THREADS is not an integer",
                  file=sys.stderr)
            return EXIT_PRECONDITION
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, results, code = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NonConvergence, PerronAnomaly) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    timing_ms = (time.perf_counter() - start) * 1000.0
    report = make_report(args.command, inputs, results, timing_ms)
    sys.stdout.write(render_report(report))
    print(f"# timing_ms: {timing_ms:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
