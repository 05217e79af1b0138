"""Generalized Hamming weights by bounded support-stratified search.

The search enumerates r-dimensional subspaces of the message space with
increasing support size w, encodes each through every systematic generator
matrix of an information-set decomposition, and keeps the smallest encoded
support as an upper bound.  After a round, any subspace not yet enumerated
through matrix G_j must meet at least w + 1 - R_j coordinates of its
information set, so the per-matrix contributions sum to a lower bound on
everything still unseen.  The search stops as soon as the bounds meet.

The naive oracles enumerate the full Grassmannian through a single generator
matrix with no bounds and serve as an independent cross-check.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .code import LinearCode, bch_bound, dual, is_cyclic
from .enumeration import DEFAULT_BLOCK, gaussian_binomial, subspace_blocks
from .errors import BadHierarchy, BadRank, GHWError, NotNested, WorkLimitExceeded
from .gf import FiniteField
from .infoset import InfoSetDecomposition, information
from .matrix import MatrixGF, rank_array


@dataclass(frozen=True)
class Hierarchy:
    """A strictly increasing sequence of weights d_1..d_k (or M_1..M_{k1-k2})."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if any(not isinstance(x, int) or x < 1 for x in v):
            raise BadHierarchy(f"weights must be positive integers: {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise BadHierarchy(f"weights must be strictly increasing: {v}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Spectrum:
    """Support-weight distributions: counts[r][w] = number of r-dimensional
    subcodes with support size exactly w."""

    counts: dict[int, dict[int, int]]

    def total(self, r: int) -> int:
        return sum(self.counts[r].values())

    def min_support(self, r: int) -> int:
        return min(self.counts[r])


@dataclass
class RoundEvent:
    """One search round, as handed to progress callbacks."""

    r: int
    w: int
    lower: int
    upper: int
    active_mats: int
    subspaces: int
    elapsed_s: float


@dataclass
class Witness:
    """A subspace representative attaining the returned weight."""

    subspace: MatrixGF  # r x k, in RREF
    mat_index: int  # index into the decomposition's matrices
    weight: int
    synthesized: bool  # produced after a bound-certified exit


@dataclass
class RunReport:
    """Instrumentation for a single weight computation."""

    r: int
    value: int | None = None
    rounds: list[RoundEvent] = dc_field(default_factory=list)
    witness: Witness | None = None
    subspaces_enumerated: int = 0


@dataclass
class Report:
    """Accumulates one RunReport per inner weight computation."""

    runs: list[RunReport] = dc_field(default_factory=list)


@dataclass
class ComputeOptions:
    """Knobs shared by all weight computations.

    ``low_mem`` regenerates subspace streams per support set instead of
    materializing them once per (r, w).  ``initial_lower`` must be a valid
    lower bound for the requested weight (for hierarchies, for d_1).
    ``info_sets`` supplies a precomputed decomposition.  Progress events go
    to ``progress`` if set, else to stderr when ``verbose``.
    """

    low_mem: bool = False
    verbose: bool = False
    info_sets: InfoSetDecomposition | None = None
    initial_lower: int | None = None
    work_limit: int = 10**9
    threads: int = 1
    progress: Callable[[RoundEvent], None] | None = None
    report: Report | None = None


@dataclass
class BoundsState:
    w: int
    lower: int
    upper: int
    last_round: dict[int, int | None]


def _emit(opts: ComputeOptions, ev: RoundEvent) -> None:
    if opts.progress is not None:
        opts.progress(ev)
    elif opts.verbose:
        print(
            f"w={ev.w} lower={ev.lower} upper={ev.upper} mats={ev.active_mats}"
            f" subspaces={ev.subspaces} t={ev.elapsed_s * 1000:.1f}ms",
            file=sys.stderr,
        )


class _BlockSource:
    """Subspace-block supplier: caching mode materializes each (r, w) stream
    once and replays it; low-memory mode regenerates it on every request."""

    def __init__(self, field: FiniteField, low_mem: bool, block_size: int = DEFAULT_BLOCK):
        self.field = field
        self.low_mem = low_mem
        self.block_size = block_size
        self._cache: dict[tuple[int, int], list[np.ndarray]] = {}

    def ensure(self, r: int, w: int) -> None:
        if not self.low_mem and (r, w) not in self._cache:
            self._cache[(r, w)] = list(subspace_blocks(r, w, self.field, self.block_size))

    def blocks(self, r: int, w: int) -> Iterable[np.ndarray]:
        if self.low_mem:
            return subspace_blocks(r, w, self.field, self.block_size)
        self.ensure(r, w)
        return self._cache[(r, w)]


def _make_witness(field, base: np.ndarray, s_cols: np.ndarray, j: int, weight: int, k: int):
    expanded = np.zeros((base.shape[0], k), dtype=np.int64)
    expanded[:, s_cols] = base
    return Witness(MatrixGF(field, expanded), j, weight, synthesized=False)


def _passes_intersection(field, enc: np.ndarray, h2t: np.ndarray, r: int) -> bool:
    return rank_array(field, field.matmul(enc, h2t)) == r


def _scan_supports(field, mats, sel, supports, r, w, k, upper, source, h2t, stop_lower):
    """Scan the given support sets; returns (upper, witness, subspaces)."""
    witness = None
    count = 0
    for s_cols in supports:
        for block in source.blocks(r, w):
            nsub = block.shape[0]
            count += nsub
            flat = block.reshape(-1, w)
            for j in sel:
                gsub = mats[j][s_cols, :]
                prod = field.matmul(flat, gsub)
                weights = (prod != 0).reshape(nsub, r, -1).any(axis=1).sum(axis=1)
                if h2t is None:
                    i = int(weights.argmin())
                    wt = int(weights[i])
                    if wt < upper:
                        upper = wt
                        witness = _make_witness(field, block[i], s_cols, j, wt, k)
                else:
                    cand = np.flatnonzero(weights < upper)
                    if cand.size:
                        order = cand[np.argsort(weights[cand], kind="stable")]
                        for c in order:
                            wt = int(weights[c])
                            if wt >= upper:
                                break
                            enc = prod[c * r : (c + 1) * r]
                            if _passes_intersection(field, enc, h2t, r):
                                upper = wt
                                witness = _make_witness(field, block[c], s_cols, j, wt, k)
                                break
        if stop_lower is not None and upper <= stop_lower:
            break
    return upper, witness, count


def _process_round(field, mats, sel, supports, r, w, k, upper, source, h2t, threads, stop_lower):
    if threads <= 1 or len(supports) < 2:
        return _scan_supports(field, mats, sel, supports, r, w, k, upper, source, h2t, stop_lower)
    source.ensure(r, w)
    nparts = min(threads, len(supports))
    bounds = np.linspace(0, len(supports), nparts + 1, dtype=int)
    parts = [supports[bounds[i] : bounds[i + 1]] for i in range(nparts)]
    with ThreadPoolExecutor(max_workers=nparts) as ex:
        futs = [
            ex.submit(_scan_supports, field, mats, sel, part, r, w, k, upper, source, h2t, None)
            for part in parts
        ]
        results = [f.result() for f in futs]
    best_upper, best_witness = upper, None
    total = 0
    for part_upper, part_witness, part_count in results:
        total += part_count
        if part_upper < best_upper:
            best_upper, best_witness = part_upper, part_witness
    return best_upper, best_witness, total


def _select_final_matrices(reds, last, active, w, upper):
    """Minimal prefix (ascending redundancy) of matrices to process in a
    predicted final round, counting skipped matrices at their stale bound."""
    contrib = {j: max(0, last[j] + 1 - reds[j]) if last[j] is not None else 0 for j in last}
    total = sum(contrib.values())
    sel = []
    for j in sorted(active, key=lambda j: (reds[j], j)):
        total += max(0, w + 1 - reds[j]) - contrib[j]
        sel.append(j)
        if total >= upper:
            break
    return sorted(sel)


def _synthesize_witness(field, mats, r, k, value, h2t):
    """Witness for a bound-certified exit (value = generalized Singleton
    bound): any r rows of a systematic matrix then attain it exactly."""
    limit = 5000
    tried = 0
    for j, mat in enumerate(mats):
        for rows in combinations(range(k), r):
            tried += 1
            if tried > limit:
                return None
            enc = mat[list(rows), :]
            weight = int((enc != 0).any(axis=0).sum())
            if weight != value:
                continue
            if h2t is not None and not _passes_intersection(field, enc, h2t, r):
                continue
            base = np.zeros((r, k), dtype=np.int64)
            for t, c in enumerate(rows):
                base[t, c] = 1
            return Witness(MatrixGF(field, base), j, weight, synthesized=True)
    return None


def _bz_search(code, r, dec, base_lower, opts, source, h2t=None, upper0=None):
    """Core bounded search; returns (value, RunReport)."""
    field, k, n = code.field, code.k, code.n
    mats = [M.array for M in dec.mats]
    reds = list(dec.reds)
    m = len(mats)
    report = RunReport(r=r)

    upper = n - k + r if upper0 is None else upper0
    raw_lower = max(r, base_lower)
    state = BoundsState(w=r, lower=min(upper, raw_lower), upper=upper, last_round={j: None for j in range(m)})
    witness = None

    while state.w <= k and state.lower < state.upper:
        w = state.w
        t0 = time.perf_counter()
        active = [j for j in range(m) if w + 1 - reds[j] > 0]
        sel = active
        w0 = next(
            (wp for wp in range(w, k + 1) if sum(max(0, wp + 1 - R) for R in reds) >= state.upper),
            None,
        )
        if w0 is not None and w >= w0:
            sel = _select_final_matrices(reds, state.last_round, active, w, state.upper)
        supports = [np.array(c, dtype=np.intp) for c in combinations(range(k), w)]
        new_upper, new_witness, nsub = _process_round(
            field, mats, sel, supports, r, w, k, state.upper, source, h2t, opts.threads, state.lower
        )
        if new_upper < state.upper:
            state.upper = new_upper
            witness = new_witness
        report.subspaces_enumerated += nsub
        for j in sel:
            state.last_round[j] = w
        contrib = sum(
            max(0, state.last_round[j] + 1 - reds[j])
            for j in range(m)
            if state.last_round[j] is not None
        )
        raw_lower = max(raw_lower, contrib)
        state.lower = min(state.upper, raw_lower)
        ev = RoundEvent(
            r=r,
            w=w,
            lower=state.lower,
            upper=state.upper,
            active_mats=len(sel),
            subspaces=nsub,
            elapsed_s=time.perf_counter() - t0,
        )
        report.rounds.append(ev)
        _emit(opts, ev)
        state.w = w + 1

    if witness is None:
        witness = _synthesize_witness(field, mats, r, k, state.upper, h2t)
    report.value = state.upper
    report.witness = witness
    if opts.report is not None:
        opts.report.runs.append(report)
    return state.upper, report


def _cyclic_floor(code: LinearCode) -> int | None:
    """BCH bound of a cyclic code, or None when unavailable."""
    try:
        if is_cyclic(code):
            return bch_bound(code)
    except (GHWError, ValueError):
        return None
    return None


def _check_rank_arg(code, r):
    if not 1 <= r <= code.k:
        raise BadRank(f"need 1 <= r <= k = {code.k}, got r={r}")


def ghw(code: LinearCode, r: int, opts: ComputeOptions | None = None) -> int:
    """The r-th generalized Hamming weight d_r of a linear code."""
    opts = opts or ComputeOptions()
    _check_rank_arg(code, r)
    dec = opts.info_sets or information(code)
    base = max(r, opts.initial_lower or 1)
    floor = _cyclic_floor(code)
    if floor is not None:
        base = max(base, floor + r - 1)
    source = _BlockSource(code.field, opts.low_mem)
    value, _ = _bz_search(code, r, dec, base, opts, source)
    return value


def hierarchy(code: LinearCode, opts: ComputeOptions | None = None) -> Hierarchy:
    """The full weight hierarchy [d_1..d_k], chaining d_{r-1}+1 as the lower
    bound of each inner run."""
    opts = opts or ComputeOptions()
    dec = opts.info_sets or information(code)
    floor = _cyclic_floor(code)
    source = _BlockSource(code.field, opts.low_mem)
    values: list[int] = []
    for r in range(1, code.k + 1):
        base = values[-1] + 1 if values else max(1, opts.initial_lower or 1)
        if floor is not None:
            base = max(base, floor + r - 1)
        value, _ = _bz_search(code, r, dec, base, opts, source)
        values.append(value)
    return Hierarchy(tuple(values))


def _validate_nested(c1: LinearCode, c2: LinearCode) -> None:
    if c1.field != c2.field or c1.n != c2.n:
        raise NotNested("codes must share the same field and length")
    if c2.k >= c1.k:
        raise NotNested(f"need dim C2 < dim C1, got {c2.k} >= {c1.k}")
    stacked = np.vstack([c1.G.array, c2.G.array])
    if rank_array(c1.field, stacked) != c1.k:
        raise NotNested("C2 is not a subcode of C1")


def _relative_parity_check_t(c2: LinearCode) -> np.ndarray:
    return dual(c2).G.array.T.copy()


def rghw(c1: LinearCode, c2: LinearCode, r: int, opts: ComputeOptions | None = None) -> int:
    """The r-th relative generalized Hamming weight M_r(C1, C2): minimum
    support among r-dimensional subcodes of C1 meeting C2 only in 0."""
    opts = opts or ComputeOptions()
    _validate_nested(c1, c2)
    if not 1 <= r <= c1.k - c2.k:
        raise BadRank(f"need 1 <= r <= k1 - k2 = {c1.k - c2.k}, got r={r}")
    dec = opts.info_sets or information(c1)
    base = max(r, opts.initial_lower or 1)
    floor = _cyclic_floor(c1)
    if floor is not None:
        base = max(base, floor + r - 1)
    source = _BlockSource(c1.field, opts.low_mem)
    value, _ = _bz_search(c1, r, dec, base, opts, source, h2t=_relative_parity_check_t(c2))
    return value


def rhierarchy(c1: LinearCode, c2: LinearCode, opts: ComputeOptions | None = None) -> Hierarchy:
    """The relative weight hierarchy [M_1..M_{k1-k2}] with chained bounds."""
    opts = opts or ComputeOptions()
    _validate_nested(c1, c2)
    dec = opts.info_sets or information(c1)
    h2t = _relative_parity_check_t(c2)
    floor = _cyclic_floor(c1)
    source = _BlockSource(c1.field, opts.low_mem)
    values: list[int] = []
    for r in range(1, c1.k - c2.k + 1):
        base = values[-1] + 1 if values else max(1, opts.initial_lower or 1)
        if floor is not None:
            base = max(base, floor + r - 1)
        value, _ = _bz_search(c1, r, dec, base, opts, source, h2t=h2t)
        values.append(value)
    return Hierarchy(tuple(values))


def wei_duality(h, n: int) -> Hierarchy:
    """Hierarchy of the dual code: the complement of {n+1-d : d in h} in
    {1..n}, ascending."""
    values = tuple(int(x) for x in h)
    if any(not 1 <= d <= n for d in values):
        raise BadHierarchy(f"weights must lie in [1, {n}]: {values}")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise BadHierarchy(f"weights must be strictly increasing: {values}")
    excluded = {n + 1 - d for d in values}
    return Hierarchy(tuple(w for w in range(1, n + 1) if w not in excluded))


def hierarchy_auto(code: LinearCode, opts: ComputeOptions | None = None) -> Hierarchy:
    """Weight hierarchy via whichever of the code and its dual has the
    smaller dimension, using duality to translate."""
    opts = opts or ComputeOptions()
    if code.k == code.n:
        return Hierarchy(tuple(range(1, code.n + 1)))
    if 2 * code.k <= code.n:
        return hierarchy(code, opts)
    dual_opts = ComputeOptions(
        low_mem=opts.low_mem,
        verbose=opts.verbose,
        initial_lower=None,
        work_limit=opts.work_limit,
        threads=opts.threads,
        progress=opts.progress,
        report=opts.report,
    )
    return wei_duality(hierarchy(dual(code), dual_opts), code.n)


def naive_ghw(code: LinearCode, r: int, low_mem: bool = False) -> int:
    """Oracle: minimum encoded support over the whole Grassmannian through a
    single generator matrix; no bounds, no early exit."""
    _check_rank_arg(code, r)
    field, k, n = code.field, code.k, code.n
    source = _BlockSource(field, low_mem)
    best = n + 1
    for w in range(r, k + 1):
        supports = [np.array(c, dtype=np.intp) for c in combinations(range(k), w)]
        best, _, _ = _scan_supports(
            field, [code.G.array], [0], supports, r, w, k, best, source, None, None
        )
    return best


def naive_rghw(c1: LinearCode, c2: LinearCode, r: int, low_mem: bool = False) -> int:
    """Oracle for the relative weight: full enumeration with the trivial
    intersection test, no bounds."""
    _validate_nested(c1, c2)
    if not 1 <= r <= c1.k - c2.k:
        raise BadRank(f"need 1 <= r <= k1 - k2 = {c1.k - c2.k}, got r={r}")
    field, k, n = c1.field, c1.k, c1.n
    h2t = _relative_parity_check_t(c2)
    source = _BlockSource(field, low_mem)
    best = n + 1
    for w in range(r, k + 1):
        supports = [np.array(c, dtype=np.intp) for c in combinations(range(k), w)]
        best, _, _ = _scan_supports(
            field, [c1.G.array], [0], supports, r, w, k, best, source, h2t, None
        )
    return best


def _count_supports(field, G, r, w, n, supports, source, h2t):
    """Weight histogram over the given support sets; one worker's share."""
    acc = np.zeros(n + 1, dtype=np.int64)
    nsub = 0
    for s_cols in supports:
        gsub = G[s_cols, :]
        for block in source.blocks(r, w):
            cnt = block.shape[0]
            nsub += cnt
            flat = block.reshape(-1, w)
            prod = field.matmul(flat, gsub)
            weights = (prod != 0).reshape(cnt, r, -1).any(axis=1).sum(axis=1)
            if h2t is None:
                acc += np.bincount(weights, minlength=n + 1)
            else:
                t = field.matmul(prod, h2t)
                if r == 1:
                    ok = (t != 0).any(axis=1)
                else:
                    ok = np.fromiter(
                        (rank_array(field, t[i * r : (i + 1) * r]) == r for i in range(cnt)),
                        dtype=bool,
                        count=cnt,
                    )
                if ok.any():
                    acc += np.bincount(weights[ok], minlength=n + 1)
    return acc, nsub


def _spectrum_counts(field, G, r, k, n, source, h2t, opts):
    """Support-weight histogram of all r-dimensional subspaces (optionally
    restricted to trivial C2-intersection).  Per-worker histograms merge by
    addition, so the result is independent of the partitioning."""
    acc = np.zeros(n + 1, dtype=np.int64)
    for w in range(r, k + 1):
        t0 = time.perf_counter()
        supports = [np.array(c, dtype=np.intp) for c in combinations(range(k), w)]
        if opts.threads > 1 and len(supports) > 1:
            source.ensure(r, w)
            nparts = min(opts.threads, len(supports))
            bounds = np.linspace(0, len(supports), nparts + 1, dtype=int)
            with ThreadPoolExecutor(max_workers=nparts) as ex:
                futs = [
                    ex.submit(
                        _count_supports, field, G, r, w, n,
                        supports[bounds[i] : bounds[i + 1]], source, h2t,
                    )
                    for i in range(nparts)
                ]
                results = [f.result() for f in futs]
            nsub = sum(c for _, c in results)
            for part_acc, _ in results:
                acc += part_acc
        else:
            part_acc, nsub = _count_supports(field, G, r, w, n, supports, source, h2t)
            acc += part_acc
        _emit(
            opts,
            RoundEvent(
                r=r, w=w, lower=0, upper=0, active_mats=1, subspaces=nsub,
                elapsed_s=time.perf_counter() - t0,
            ),
        )
    return {int(w): int(c) for w, c in enumerate(acc) if c}


def higher_spectrum(code: LinearCode, opts: ComputeOptions | None = None) -> Spectrum:
    """Exact counts A_w^(r) for r = 0..k by full enumeration through one
    fixed generator matrix."""
    opts = opts or ComputeOptions()
    field, k, n, q = code.field, code.k, code.n, code.field.q
    for r in range(k + 1):
        if gaussian_binomial(k, r, q) > opts.work_limit:
            raise WorkLimitExceeded(
                f"Grassmannian of dimension {r} exceeds the work limit {opts.work_limit}"
            )
    source = _BlockSource(field, opts.low_mem)
    counts: dict[int, dict[int, int]] = {0: {0: 1}}
    for r in range(1, k + 1):
        counts[r] = _spectrum_counts(field, code.G.array, r, k, n, source, None, opts)
    return Spectrum(counts)


def rhigher_spectrum(c1: LinearCode, c2: LinearCode, opts: ComputeOptions | None = None) -> Spectrum:
    """Relative higher weight spectra: counts restricted to subcodes meeting
    C2 only in 0, for r = 0..k1-k2."""
    opts = opts or ComputeOptions()
    _validate_nested(c1, c2)
    field, k, n, q = c1.field, c1.k, c1.n, c1.field.q
    rmax = c1.k - c2.k
    for r in range(rmax + 1):
        if gaussian_binomial(k, r, q) > opts.work_limit:
            raise WorkLimitExceeded(
                f"Grassmannian of dimension {r} exceeds the work limit {opts.work_limit}"
            )
    h2t = _relative_parity_check_t(c2)
    source = _BlockSource(field, opts.low_mem)
    counts: dict[int, dict[int, int]] = {0: {0: 1}}
    for r in range(1, rmax + 1):
        counts[r] = _spectrum_counts(field, c1.G.array, r, k, n, source, h2t, opts)
    return Spectrum(counts)
