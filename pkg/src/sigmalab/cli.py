"""Command-line drivers: sieve caching, error-term scans, truncated-series
residual experiments, kernel cross-validation, record hunting, and
resonance-lemma verification. All outputs are deterministic for a fixed
config (grids carry no randomness; thread count never changes results).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .arith import Alpha, SigmaTable, build_sigma_table
from .cache import cache_read, cache_write
from .errorterm import corollary_exponent, scan_error
from .errors import (
    AccuracyError,
    CacheError,
    DomainError,
    SigmaLabError,
    TableRangeError,
)
from .extremes import (
    VerificationFailure,
    divisor_instance,
    record_scan,
    resonance_bound,
    resonance_verify,
)
from .voronoi import SeriesParams, kernel_bessel, kernel_contour, series_approx

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_IO = 4
EXIT_ACCURACY = 5

CACHE_DIR_ENV = "SIGMA_LAB_CACHE_DIR"


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _write_atomic(path: str, lines: list[str]) -> None:
    tmp = path + ".tmp"
    try:
        with open(tmp, "w") as fh:
            fh.write("\n".join(lines))
            fh.write("\n")
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, lines: list[str]) -> None:
    if path is None:
        for line in lines:
            print(line)
    else:
        _write_atomic(path, lines)


def _cache_path(arg: str | None) -> str | None:
    if arg is None:
        return None
    if os.path.isabs(arg):
        return arg
    base = os.environ.get(CACHE_DIR_ENV)
    return os.path.join(base, arg) if base else arg


def _check_writable(path: str | None) -> None:
    if path is None:
        return
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise CacheError(f"output directory not writable: {parent}")


def _load_table(args, n_max: int) -> SigmaTable:
    alpha = Alpha(args.alpha)
    cache = _cache_path(args.cache)
    if cache is not None and os.path.exists(cache):
        table = cache_read(cache, expected_alpha=alpha.value)
        if table.n_max < n_max:
            raise TableRangeError(float(n_max), table.n_max)
        return table
    return build_sigma_table(n_max, alpha)


def _cmd_sieve(args) -> int:
    alpha = Alpha(args.alpha)
    cache = _cache_path(args.cache)
    if cache is None:
        raise DomainError("sieve requires --cache")
    _check_writable(cache)
    table = build_sigma_table(args.n_max, alpha)
    cache_write(table, cache)
    print(f"sieve ok n_max={table.n_max} alpha={_fmt(alpha.value)} cache={cache}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    _check_writable(args.out)
    table = _load_table(args, int(math.floor(args.x_max)))
    samples = scan_error(args.x_min, args.x_max, args.points, Alpha(args.alpha), table)
    lines = ["x,s_value,main,e_value,normalized"]
    lines += [
        ",".join(_fmt(v) for v in (s.x, s.s_value, s.main, s.e_value, s.normalized))
        for s in samples
    ]
    _emit(args.out, lines)
    return EXIT_OK


def _cmd_series(args) -> int:
    _check_writable(args.out)
    alpha = Alpha(args.alpha).require_half()
    from .errorterm import error_term, scan_grid
    from .voronoi import admissible_range

    xs = scan_grid(args.x_min, args.x_max, args.points)
    n_for = [args.n_terms if args.n_terms else math.ceil(x) for x in xs]
    if args.eps is not None:
        for x, n in zip(xs, n_for):
            lo, hi = admissible_range(x, alpha, args.eps)
            if not lo <= n <= hi:
                raise DomainError(
                    f"N={n} outside admissible window "
                    f"[{lo:.6g}, {hi:.6g}] at x={x:.6g} for eps={args.eps}"
                )
    table = _load_table(args, max(int(math.floor(max(xs))), max(n_for)))
    exponent = 0.25 + 0.5 * alpha.value

    def one(pair):
        x, n = pair
        e = error_term(x, alpha, table).e_value
        approx = series_approx(SeriesParams(x=x, n_terms=n, alpha=alpha), table)
        residual = e - approx
        return x, n, e, approx, residual, abs(residual) / x**exponent

    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        rows = list(pool.map(one, zip(xs, n_for)))
    lines = ["x,N,e_value,approx,residual,residual_normalized"]
    lines += [
        ",".join([_fmt(r[0]), str(r[1])] + [_fmt(v) for v in r[2:]]) for r in rows
    ]
    _emit(args.out, lines)
    return EXIT_OK


def _cmd_kernel(args) -> int:
    _check_writable(args.out)
    alpha = Alpha(args.alpha)
    ys = [float(v) for v in args.y.split(",")]
    lines = ["y,alpha,bessel_value,contour_value,rel_diff"]
    for y in ys:
        kb = kernel_bessel(y, alpha)
        kc = kernel_contour(y, alpha, verify=args.verify, tol=args.tol)
        rel = abs(kb - kc) / abs(kc) if kc != 0 else math.inf
        lines.append(
            ",".join(_fmt(v) for v in (y, alpha.value, kb, kc, rel))
        )
    _emit(args.out, lines)
    return EXIT_OK


def _cmd_records(args) -> int:
    _check_writable(args.out)
    table = _load_table(args, int(math.floor(args.x_max)))
    records = record_scan(Alpha(args.alpha), args.x_max, table)
    lines = ["x,e_value,normalized"]
    lines += [
        ",".join(_fmt(v) for v in (r.x, r.e_value, r.normalized))
        for r in records.entries
    ]
    _emit(args.out, lines)
    return EXIT_OK


def _cmd_verify_sound(args) -> int:
    _check_writable(args.out)
    table = _load_table(args, args.n_terms)
    inst = divisor_instance(
        table,
        n_terms=args.n_terms,
        t_window=args.t_window,
        big_l=args.big_l,
        big_x=args.big_x,
    )
    bound = resonance_bound(inst)
    x_found, s_at_x = resonance_verify(
        inst, grid_density=args.grid_density, budget=args.budget
    )
    report = {
        "instance": {
            "n_terms": args.n_terms,
            "alpha": table.alpha.value,
            "t_window": args.t_window,
            "big_l": args.big_l,
            "big_x": args.big_x,
            "y_index": inst.y_index,
            "resonant_set_size": len(inst.resonant_set),
        },
        "bound": bound,
        "x_found": x_found,
        "s_at_x": s_at_x,
        "grid_density": args.grid_density,
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        _write_atomic(args.out, [text])
    else:
        print(text)
    return EXIT_OK


def _cmd_exponent(args) -> int:
    print(_fmt(corollary_exponent(Alpha(args.alpha))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sigmalab",
        description="numerical experiments on fractional divisor-sum error terms",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cache=True, out=True):
        sp.add_argument("--alpha", type=float, required=True)
        if cache:
            sp.add_argument("--cache", default=None)
        if out:
            sp.add_argument("--out", default=None)
        sp.add_argument("--threads", type=int, default=os.cpu_count())
        sp.add_argument("--tol", type=float, default=1e-7)

    sp = sub.add_parser("sieve", help="build a sigma table and cache it")
    common(sp, out=False)
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(func=_cmd_sieve)

    sp = sub.add_parser("scan", help="error-term samples on a geometric grid")
    common(sp)
    sp.add_argument("--x-min", type=float, required=True)
    sp.add_argument("--x-max", type=float, required=True)
    sp.add_argument("--points", type=int, required=True)
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("series", help="truncated-series residual experiment")
    common(sp)
    sp.add_argument("--x-min", type=float, required=True)
    sp.add_argument("--x-max", type=float, required=True)
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--n-terms", type=int, default=None,
                    help="fixed N; default ceil(x) per sample")
    sp.add_argument("--eps", type=float, default=None,
                    help="reject N outside the admissible window for this eps")
    sp.set_defaults(func=_cmd_series)

    sp = sub.add_parser("kernel", help="Bessel vs contour kernel values")
    common(sp, cache=False)
    sp.add_argument("--y", default="1,10,100", help="comma-separated y values")
    sp.add_argument("--verify", action="store_true",
                    help="double T / halve step self-check")
    sp.set_defaults(func=_cmd_kernel)

    sp = sub.add_parser("records", help="running maxima of |normalized E|")
    common(sp)
    sp.add_argument("--x-max", type=float, required=True)
    sp.set_defaults(func=_cmd_records)

    sp = sub.add_parser("verify-sound", help="resonance-lemma grid verification")
    common(sp)
    sp.add_argument("--n-terms", type=int, default=50)
    sp.add_argument("--t-window", type=float, default=4.0)
    sp.add_argument("--big-l", type=int, default=40)
    sp.add_argument("--big-x", type=float, default=64.0)
    sp.add_argument("--grid-density", type=int, default=20)
    sp.add_argument("--budget", type=int, default=10**7)
    sp.set_defaults(func=_cmd_verify_sound)

    sp = sub.add_parser("exponent", help="Corollary exponent (2a^2+3a+1)/(2a+3)")
    sp.add_argument("--alpha", type=float, required=True)
    sp.set_defaults(func=_cmd_exponent)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TableRangeError, DomainError) as exc:
        print(f"error code={EXIT_RANGE} kind={type(exc).__name__} msg={exc}",
              file=sys.stderr)
        return EXIT_RANGE
    except (AccuracyError, VerificationFailure) as exc:
        print(f"error code={EXIT_ACCURACY} kind={type(exc).__name__} msg={exc}",
              file=sys.stderr)
        return EXIT_ACCURACY
    except (CacheError, OSError) as exc:
        print(f"error code={EXIT_IO} kind={type(exc).__name__} msg={exc}",
              file=sys.stderr)
        return EXIT_IO
    except SigmaLabError as exc:
        print(f"error code={EXIT_RANGE} kind={type(exc).__name__} msg={exc}",
              file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())
