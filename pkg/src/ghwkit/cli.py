"""Command-line front end.

Code file format (text, line-oriented):

    # optional comments anywhere
    field: p=<p> s=<s> [modulus=<c0,c1,...,cs>]
    <row of space-separated element indices in [0, q)>
    ...

Subcommands: ghw, hierarchy, rghw, rhierarchy, spectrum, rspectrum, duality,
mindist (alias for ghw -r 1) and benchmark.  Exit codes: 0 success, 1
computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

import numpy as np

from .code import LinearCode, new_code
from .errors import (
    CodeFileFieldError,
    CodeFileSyntaxError,
    GHWError,
    MismatchedResults,
)
from .gf import build_field
from .ghw import (
    ComputeOptions,
    ghw,
    hierarchy,
    higher_spectrum,
    naive_ghw,
    naive_rghw,
    rghw,
    rhierarchy,
    rhigher_spectrum,
    wei_duality,
)
from .matrix import MatrixGF

_FIELD_RE = re.compile(
    r"^field:\s*p=(\d+)\s+s=(\d+)(?:\s+modulus=([0-9]+(?:,[0-9]+)*))?\s*$"
)


def parse_code_file(text: str) -> LinearCode:
    """Parse the code file format; errors carry 1-based line numbers."""
    field = None
    rows: list[list[int]] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if field is None:
            m = _FIELD_RE.match(line)
            if m is None:
                raise CodeFileSyntaxError(lineno, f"expected 'field: p=<p> s=<s>', got {line!r}")
            p, s = int(m.group(1)), int(m.group(2))
            modulus = [int(c) for c in m.group(3).split(",")] if m.group(3) else None
            try:
                field = build_field(p, s, modulus)
            except (GHWError, ValueError) as exc:
                raise CodeFileFieldError(f"line {lineno}: {exc}") from exc
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise CodeFileSyntaxError(lineno, f"matrix row must be integers, got {line!r}")
        if any(not 0 <= e < field.q for e in row):
            raise CodeFileSyntaxError(lineno, f"entries must lie in [0, {field.q})")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise CodeFileSyntaxError(lineno, f"expected {width} entries, got {len(row)}")
        rows.append(row)
    if field is None:
        raise CodeFileSyntaxError(1, "missing 'field:' header line")
    if not rows:
        raise CodeFileSyntaxError(1, "no matrix rows found")
    return new_code(field, MatrixGF(field, np.array(rows, dtype=np.int64)))


def serialize_code(code: LinearCode) -> str:
    """Inverse of :func:`parse_code_file`."""
    f = code.field
    head = f"field: p={f.p} s={f.s}"
    if f.s > 1:
        head += " modulus=" + ",".join(str(c) for c in f.modulus)
    lines = [head]
    for row in code.G.array:
        lines.append(" ".join(str(int(e)) for e in row))
    return "\n".join(lines) + "\n"


def _load(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def _print_round(ev) -> None:
    print(
        f"w={ev.w} lower={ev.lower} upper={ev.upper} mats={ev.active_mats}"
        f" subspaces={ev.subspaces} t={ev.elapsed_s * 1000:.1f}ms",
        file=sys.stderr,
    )


def _options(args) -> ComputeOptions:
    return ComputeOptions(
        low_mem=getattr(args, "low_mem", False),
        verbose=getattr(args, "verbose", False),
        work_limit=getattr(args, "work_limit", 10**9),
        threads=args.threads,
        progress=_print_round if getattr(args, "verbose", False) else None,
    )


def _render(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def _result(op, code, r, value, elapsed_s) -> dict:
    return {
        "op": op,
        "n": code.n if code else None,
        "k": code.k if code else None,
        "q": code.field.q if code else None,
        "r": r,
        "value": value,
        "elapsed_ms": round(elapsed_s * 1000, 3),
    }


def _cmd_ghw(args) -> int:
    code = _load(args.code)
    opts = _options(args)
    t0 = time.perf_counter()
    if args.algorithm == "naive":
        value = naive_ghw(code, args.r, low_mem=args.low_mem)
    else:
        value = ghw(code, args.r, opts)
    payload = _result("ghw", code, args.r, value, time.perf_counter() - t0)
    _render(args, payload, str(value))
    return 0


def _cmd_mindist(args) -> int:
    code = _load(args.code)
    opts = _options(args)
    t0 = time.perf_counter()
    if args.algorithm == "naive":
        value = naive_ghw(code, 1, low_mem=args.low_mem)
    else:
        value = ghw(code, 1, opts)
    payload = _result("mindist", code, 1, value, time.perf_counter() - t0)
    _render(args, payload, str(value))
    return 0


def _cmd_hierarchy(args) -> int:
    code = _load(args.code)
    opts = _options(args)
    t0 = time.perf_counter()
    if args.algorithm == "naive":
        values = [naive_ghw(code, r, low_mem=args.low_mem) for r in range(1, code.k + 1)]
    else:
        values = list(hierarchy(code, opts))
    payload = _result("hierarchy", code, None, values, time.perf_counter() - t0)
    _render(args, payload, " ".join(str(v) for v in values))
    return 0


def _cmd_rghw(args) -> int:
    c1, c2 = _load(args.code1), _load(args.code2)
    opts = _options(args)
    t0 = time.perf_counter()
    if args.algorithm == "naive":
        value = naive_rghw(c1, c2, args.r, low_mem=args.low_mem)
    else:
        value = rghw(c1, c2, args.r, opts)
    payload = _result("rghw", c1, args.r, value, time.perf_counter() - t0)
    _render(args, payload, str(value))
    return 0


def _cmd_rhierarchy(args) -> int:
    c1, c2 = _load(args.code1), _load(args.code2)
    opts = _options(args)
    t0 = time.perf_counter()
    if args.algorithm == "naive":
        values = [
            naive_rghw(c1, c2, r, low_mem=args.low_mem) for r in range(1, c1.k - c2.k + 1)
        ]
    else:
        values = list(rhierarchy(c1, c2, opts))
    payload = _result("rhierarchy", c1, None, values, time.perf_counter() - t0)
    _render(args, payload, " ".join(str(v) for v in values))
    return 0


def _spectrum_text(counts: dict) -> str:
    lines = []
    for r in sorted(counts):
        body = " ".join(f"{w}:{c}" for w, c in sorted(counts[r].items()))
        lines.append(f"r={r}: {body}")
    return "\n".join(lines)


def _cmd_spectrum(args) -> int:
    code = _load(args.code)
    opts = _options(args)
    t0 = time.perf_counter()
    spectrum = higher_spectrum(code, opts)
    value = {str(r): {str(w): c for w, c in ws.items()} for r, ws in spectrum.counts.items()}
    payload = _result("spectrum", code, None, value, time.perf_counter() - t0)
    _render(args, payload, _spectrum_text(spectrum.counts))
    return 0


def _cmd_rspectrum(args) -> int:
    c1, c2 = _load(args.code1), _load(args.code2)
    opts = _options(args)
    t0 = time.perf_counter()
    spectrum = rhigher_spectrum(c1, c2, opts)
    value = {str(r): {str(w): c for w, c in ws.items()} for r, ws in spectrum.counts.items()}
    payload = _result("rspectrum", c1, None, value, time.perf_counter() - t0)
    _render(args, payload, _spectrum_text(spectrum.counts))
    return 0


def _cmd_duality(args) -> int:
    t0 = time.perf_counter()
    values = list(wei_duality(args.weights, args.n))
    payload = {
        "op": "duality",
        "n": args.n,
        "k": None,
        "q": None,
        "r": None,
        "value": values,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    _render(args, payload, " ".join(str(v) for v in values))
    return 0


def benchmark(code_files, r: int, low_mem: bool = False, threads: int = 1):
    """Time the bounded search against the naive oracle on each code file.

    Returns a list of row dicts; raises :class:`MismatchedResults` if the two
    algorithms ever disagree (a correctness bug, not a benchmark artifact).
    """
    rows = []
    for path in code_files:
        code = _load(path)
        opts = ComputeOptions(low_mem=low_mem, threads=threads)
        t0 = time.perf_counter()
        value_bz = ghw(code, r, opts)
        bz_s = time.perf_counter() - t0
        t0 = time.perf_counter()
        value_naive = naive_ghw(code, r, low_mem=low_mem)
        naive_s = time.perf_counter() - t0
        if value_bz != value_naive:
            raise MismatchedResults(
                f"{path}: search found {value_bz} but the naive oracle found {value_naive}"
            )
        rows.append(
            {
                "code": os.path.splitext(os.path.basename(path))[0],
                "n": code.n,
                "k": code.k,
                "q": code.field.q,
                "r": r,
                "value": value_bz,
                "bz_ms": round(bz_s * 1000, 3),
                "naive_ms": round(naive_s * 1000, 3),
                "speedup": round(naive_s / bz_s, 3) if bz_s > 0 else float("inf"),
            }
        )
    return rows


_BENCH_COLUMNS = ["code", "n", "k", "q", "r", "value", "bz_ms", "naive_ms", "speedup"]


def _cmd_benchmark(args) -> int:
    rows = benchmark(args.codes, args.r, low_mem=args.low_mem, threads=args.threads)
    if args.json:
        print(json.dumps(rows))
    else:
        header = "  ".join(f"{c:>10}" for c in _BENCH_COLUMNS)
        print(header)
        for row in rows:
            print("  ".join(f"{row[c]:>10}" for c in _BENCH_COLUMNS))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(",".join(_BENCH_COLUMNS) + "\n")
            for row in rows:
                fh.write(",".join(str(row[c]) for c in _BENCH_COLUMNS) + "\n")
    return 0


def _add_common(sub, rank_flag=True):
    if rank_flag:
        sub.add_argument("-r", type=int, required=True, help="subcode dimension")
    sub.add_argument("--low-mem", action="store_true", help="regenerate subspace streams instead of caching them")
    sub.add_argument("--verbose", action="store_true", help="print one progress line per round to stderr")
    sub.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    sub.add_argument("--algorithm", choices=["bz", "naive"], default="bz", help="bounded search (default) or the naive oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghwkit",
        description="Generalized Hamming weights of linear codes over GF(p^s)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="max worker threads per round (default: machine parallelism)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ghw", help="r-th generalized Hamming weight")
    p.add_argument("code")
    _add_common(p)
    p.set_defaults(func=_cmd_ghw)

    p = subs.add_parser("mindist", help="minimum distance (ghw -r 1)")
    p.add_argument("code")
    _add_common(p, rank_flag=False)
    p.set_defaults(func=_cmd_mindist)

    p = subs.add_parser("hierarchy", help="full weight hierarchy d_1..d_k")
    p.add_argument("code")
    _add_common(p, rank_flag=False)
    p.set_defaults(func=_cmd_hierarchy)

    p = subs.add_parser("rghw", help="r-th relative generalized Hamming weight")
    p.add_argument("code1")
    p.add_argument("code2")
    _add_common(p)
    p.set_defaults(func=_cmd_rghw)

    p = subs.add_parser("rhierarchy", help="relative weight hierarchy")
    p.add_argument("code1")
    p.add_argument("code2")
    _add_common(p, rank_flag=False)
    p.set_defaults(func=_cmd_rhierarchy)

    p = subs.add_parser("spectrum", help="higher weight spectra A_w^(r)")
    p.add_argument("code")
    _add_common(p, rank_flag=False)
    p.add_argument("--work-limit", type=int, default=10**9, help="max subspaces per dimension")
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("rspectrum", help="relative higher weight spectra")
    p.add_argument("code1")
    p.add_argument("code2")
    _add_common(p, rank_flag=False)
    p.add_argument("--work-limit", type=int, default=10**9, help="max subspaces per dimension")
    p.set_defaults(func=_cmd_rspectrum)

    p = subs.add_parser("duality", help="hierarchy of the dual from a hierarchy and n")
    p.add_argument("-n", type=int, required=True, help="code length")
    p.add_argument("weights", type=int, nargs="+", help="hierarchy values d_1..d_k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_duality)

    p = subs.add_parser("benchmark", help="time the search against the naive oracle")
    p.add_argument("codes", nargs="+")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--low-mem", action="store_true", help="compare the low-memory variants instead")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", help="also write the table to this CSV file")
    p.set_defaults(func=_cmd_benchmark)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GHWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
