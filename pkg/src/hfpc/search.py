"""Pruned exhaustive search over generator candidates, with deterministic
parallelism, deduplication, and reproduction of the results table.

The raw candidate space for (family, t) is the integer interval [0, 2^4t) in
the BitVector layout; the stream filters it down to plausible generators
(weight 2t plus the cheap order filters).  Work is split into contiguous
subranges merged in range order, so results are identical for any worker
count; accepted candidates are re-assembled through the reference constructors
in hfpc.families before being reported, which cross-checks the scan kernels.
"""

from __future__ import annotations

import json
import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from . import _backend
from .families import (
    SEARCH_TAGS,
    Reject,
    assemble,
    assemble_quaternion_explicit,
)
from .gf2 import BitVector
from .hadamard import CodeProfile, profile
from .propelinear import PropelinearCode

__all__ = [
    "DEEP_GATE",
    "SearchTask",
    "AcceptedCode",
    "SearchResult",
    "TableCell",
    "candidate_stream",
    "candidate_count",
    "run_search",
    "dedup",
    "analytic_nonexistence",
    "reproduce_table",
    "default_workers",
]

_FAMILY_CODE = {"4tu2": 0, "2t22u": 1, "2t4u": 2}

# Cells with more candidates than this require the deep flag; the threshold is
# below 2^30 so that the hours-scale length-32 enumerations are always gated.
DEEP_GATE = 1 << 28


def default_workers() -> int:
    env = os.environ.get("HFP_THREADS")
    if env:
        return max(1, int(env))
    return 1


@dataclass(frozen=True)
class SearchTask:
    family: str
    t: int
    lo: int = 0
    hi: int | None = None
    mode: str = "all"  # or "first"

    def bounds(self) -> tuple[int, int]:
        top = 1 << (4 * self.t)
        hi = top if self.hi is None else min(self.hi, top)
        return max(0, self.lo), hi


@dataclass(frozen=True)
class AcceptedCode:
    family: str
    t: int
    candidate: str  # the searched generator: a, or d for the quaternion family
    profile: CodeProfile
    vector_values: frozenset[int] = field(repr=False, hash=False, compare=False)


@dataclass
class SearchResult:
    family: str
    t: int
    accepted: list[AcceptedCode]
    counters: dict[str, int]
    distinct_code_sets: int
    wall_time: float  # informational only; excluded from canonical output


_TWO_GEN_COUNTERS = ("examined", "rejected_power", "rejected_hadamard")
_QUATERNION_COUNTERS = (
    "examined",
    "rejected_power",
    "rejected_no_b",
    "rejected_relation",
    "rejected_hadamard",
)


def candidate_count(tag: str, t: int) -> int:
    """Exact size of the filtered candidate stream, by binomial convolution."""
    if tag in ("4tu2", "2t22u", "2t4u"):
        want = 1 if tag == "4tu2" else 0
        return sum(
            comb(2 * t, w) * comb(2 * t, 2 * t - w)
            for w in range(2 * t + 1)
            if w % 2 == want
        )
    if tag == "tqu":
        if t % 2 == 0:
            raise ValueError("quaternion family requires odd t")
        total = 0
        evens = range(0, t + 1, 2)
        for w1 in evens:
            for w2 in evens:
                for w3 in evens:
                    w4 = 2 * t - w1 - w2 - w3
                    if 0 <= w4 <= t and w4 % 2 == 0:
                        total += comb(t, w1) * comb(t, w2) * comb(t, w3) * comb(t, w4)
        return total
    raise ValueError("no candidate stream for family %r" % tag)


def candidate_stream(tag: str, t: int) -> Iterator[BitVector]:
    """Filtered candidates in ascending lexicographic order."""
    n = 4 * t
    w = 2 * t
    if tag in ("4tu2", "2t22u", "2t4u"):
        need = 1 if tag == "4tu2" else 0
        half = 2 * t

        def keep(v: int) -> bool:
            return ((v >> half).bit_count() & 1) == need

    elif tag == "tqu":
        if t % 2 == 0:
            raise ValueError("quaternion family requires odd t")
        m1 = int("1000" * t, 2)
        m2, m3 = m1 >> 1, m1 >> 2

        def keep(v: int) -> bool:
            return (
                (v & m1).bit_count() & 1
                or (v & m2).bit_count() & 1
                or (v & m3).bit_count() & 1
            ) == 0

    else:
        raise ValueError("no candidate stream for family %r" % tag)
    v = _backend.least_geq_with_weight(0, n, w)
    top = 1 << n
    while v is not None and v < top:
        if keep(v):
            yield BitVector(n, v)
        v = _backend.gosper_next(v)


def _chunk_count(workers: int) -> int:
    return 1 << max(0, math.ceil(math.log2(workers * 64)))


def _partition(lo: int, hi: int, chunks: int) -> list[tuple[int, int]]:
    """Contiguous subranges by leading range fraction; exact cover of [lo, hi)."""
    span = hi - lo
    if span <= 0:
        return []
    chunks = min(chunks, span)
    return [
        (lo + m * span // chunks, lo + (m + 1) * span // chunks)
        for m in range(chunks)
        if m * span // chunks != (m + 1) * span // chunks
    ]


def _scan_chunk(args: tuple) -> tuple:
    family, t, lo, hi, first_only = args
    if family == "tqu":
        return _backend.scan_quaternion(t, lo, hi, first_only)
    return _backend.scan_two_generator(_FAMILY_CODE[family], t, lo, hi, first_only)


def _run_chunks(
    chunk_args: list[tuple],
    workers: int,
    stop_early: bool,
    on_chunk: Callable[[int, tuple], None] | None = None,
) -> list[tuple]:
    """Run chunks, consuming results strictly in submission order."""
    results: list[tuple] = []
    if workers <= 1:
        for idx, args in enumerate(chunk_args):
            res = _scan_chunk(args)
            results.append(res)
            if on_chunk:
                on_chunk(idx, res)
            if stop_early and res[0]:
                break
        return results
    with ProcessPoolExecutor(max_workers=workers) as ex:
        pending = {}
        window = workers * 2
        submitted = 0
        consumed = 0
        total = len(chunk_args)
        stopped = False
        while consumed < total and not stopped:
            while submitted < total and submitted - consumed < window:
                pending[submitted] = ex.submit(_scan_chunk, chunk_args[submitted])
                submitted += 1
            res = pending.pop(consumed).result()
            results.append(res)
            if on_chunk:
                on_chunk(consumed, res)
            consumed += 1
            if stop_early and res[0]:
                stopped = True
        for fut in pending.values():
            fut.cancel()
    return results


def _verify_two_generator(tag: str, t: int, a_val: int) -> PropelinearCode:
    code = assemble(tag, t, BitVector(4 * t, a_val))
    if isinstance(code, Reject):
        raise RuntimeError(
            "scan kernel accepted %s but the reference constructor rejected it "
            "(%s); kernel and reference disagree" % (format(a_val, "b"), code.reason)
        )
    return code


def _verify_quaternion(t: int, triple: tuple[int, int, int]) -> PropelinearCode:
    n = 4 * t
    d, a, b = (BitVector(n, x) for x in triple)
    code = assemble_quaternion_explicit(t, d, a, b)
    if isinstance(code, Reject):
        raise RuntimeError(
            "scan kernel accepted a quaternion variant the reference "
            "constructor rejected (%s)" % code.reason
        )
    return code


def run_search(
    task: SearchTask,
    workers: int | None = None,
    checkpoint: str | None = None,
) -> SearchResult:
    """Scan the task range; accepted candidates are re-assembled and profiled.

    Output (accepted order, counters) is independent of the worker count: in
    mode "all" counters are sums over an exact partition, and in mode "first"
    counting stops at the first accepted candidate in stream order.
    """
    if task.family not in SEARCH_TAGS:
        raise ValueError("unknown family %r" % task.family)
    if task.family == "tqu" and task.t % 2 == 0:
        raise ValueError("quaternion family requires odd t")
    workers = default_workers() if workers is None else max(1, workers)
    t0 = time.perf_counter()
    lo, hi = task.bounds()
    counter_names = (
        _QUATERNION_COUNTERS if task.family == "tqu" else _TWO_GEN_COUNTERS
    )
    first_only = task.mode == "first"

    state = _CheckpointState.load(checkpoint, task, _chunk_count(workers))
    # a resumed checkpoint pins its own partition, so any worker count works
    chunk_bounds = _partition(lo, hi, state.header["chunks"])
    chunk_args = [
        (task.family, task.t, c_lo, c_hi, first_only)
        for (c_lo, c_hi) in chunk_bounds
    ]
    todo = [i for i in range(len(chunk_args)) if i not in state.completed]

    def on_chunk(pos: int, res: tuple) -> None:
        idx = todo[pos]
        state.record(idx, res)
        if checkpoint:
            state.flush(checkpoint)

    _run_chunks([chunk_args[i] for i in todo], workers, first_only, on_chunk)

    counters = Counter()
    accepted_raw: list = []
    for idx in sorted(state.completed):
        acc, ctr = state.results[idx]
        for name, val in zip(counter_names, ctr):
            counters[name] += val
        accepted_raw.extend(acc)
        if first_only and acc:
            accepted_raw = accepted_raw[:1]
            break

    accepted: list[AcceptedCode] = []
    profile_cache: dict[frozenset[int], CodeProfile] = {}
    for item in accepted_raw:
        if task.family == "tqu":
            code = _verify_quaternion(task.t, item)
            cand = str(code.generators["d"].vector)
        else:
            code = _verify_two_generator(task.family, task.t, item)
            cand = str(code.generators["a"].vector)
        key = code.vector_values
        prof = profile_cache.get(key)
        if prof is None:
            prof = profile(code)
            profile_cache[key] = prof
        else:
            # identical code set: reuse the profile but report this candidate's
            # own generators
            gens = code.generators
            prof = CodeProfile(
                family=prof.family,
                t=prof.t,
                length=prof.length,
                size=prof.size,
                rank=prof.rank,
                kernel_dim=prof.kernel_dim,
                kernel_basis=prof.kernel_basis,
                min_distance=prof.min_distance,
                generator_a=str(gens["a"].vector) if "a" in gens else None,
                generator_b=str(gens["b"].vector) if "b" in gens else None,
                generator_d=str(gens["d"].vector) if "d" in gens else None,
            )
        accepted.append(
            AcceptedCode(task.family, task.t, cand, prof, key)
        )
    counters["accepted"] = len(accepted)
    return SearchResult(
        family=task.family,
        t=task.t,
        accepted=accepted,
        counters=dict(counters),
        distinct_code_sets=len({a.vector_values for a in accepted}),
        wall_time=time.perf_counter() - t0,
    )


class _CheckpointState:
    """Per-chunk progress store; written atomically after every chunk."""

    def __init__(self, header: dict):
        self.header = header
        self.completed: set[int] = set()
        self.results: dict[int, tuple] = {}

    @classmethod
    def load(cls, path: str | None, task: SearchTask, n_chunks: int) -> "_CheckpointState":
        lo, hi = task.bounds()
        header = {
            "family": task.family,
            "t": task.t,
            "lo": lo,
            "hi": hi,
            "mode": task.mode,
            "chunks": n_chunks,
        }
        state = cls(header)
        if path and os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            stored = data.get("header", {})
            identity = {k: v for k, v in header.items() if k != "chunks"}
            if {k: v for k, v in stored.items() if k != "chunks"} != identity:
                raise ValueError(
                    "checkpoint %s belongs to a different task" % path
                )
            state.header["chunks"] = stored["chunks"]
            for idx_s, (acc, ctr) in data["results"].items():
                idx = int(idx_s)
                acc = [tuple(x) if isinstance(x, list) else x for x in acc]
                state.completed.add(idx)
                state.results[idx] = (acc, tuple(ctr))
        return state

    def record(self, idx: int, res: tuple) -> None:
        self.completed.add(idx)
        self.results[idx] = res

    def flush(self, path: str) -> None:
        data = {
            "header": self.header,
            "results": {
                str(i): [list(map(_jsonable, acc)), list(ctr)]
                for i, (acc, ctr) in self.results.items()
            },
        }
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def dedup(accepted: list[AcceptedCode]) -> list[AcceptedCode]:
    """One representative per distinct code set, keeping stream order."""
    seen: set[frozenset[int]] = set()
    out = []
    for a in accepted:
        if a.vector_values in seen:
            continue
        seen.add(a.vector_values)
        out.append(a)
    return out


def analytic_nonexistence(tag: str, t: int) -> bool:
    """Cells excluded by the parity / square-order arguments, no search needed."""
    if t == 1:
        return False
    if tag in ("4tu2", "2t4u"):
        return t % 2 == 1
    if tag == "2t22u":
        return not (t % 2 == 0 and math.isqrt(t) ** 2 == t)
    if tag == "tqu":
        return False  # odd-t only; even t is not-applicable, not nonexistence
    raise ValueError("unknown family %r" % tag)


@dataclass(frozen=True)
class TableCell:
    family: str
    t: int
    status: str  # searched | analytic | not-applicable | skipped-budget
    profiles: tuple[tuple[int, int], ...] = ()
    candidates: int = 0
    accepted: int = 0
    distinct: int = 0


def reproduce_table(
    t_max: int,
    deep: bool = False,
    workers: int | None = None,
    checkpoint_dir: str | None = None,
) -> list[list[TableCell]]:
    """One row per t, one cell per family, mirroring the results table."""
    rows = []
    for t in range(1, t_max + 1):
        row = []
        for tag in SEARCH_TAGS:
            if tag == "tqu" and t % 2 == 0:
                row.append(TableCell(tag, t, "not-applicable"))
                continue
            if analytic_nonexistence(tag, t):
                row.append(TableCell(tag, t, "analytic"))
                continue
            count = candidate_count(tag, t)
            if count > DEEP_GATE and not deep:
                row.append(TableCell(tag, t, "skipped-budget", candidates=count))
                continue
            ckpt = None
            if checkpoint_dir:
                ckpt = os.path.join(
                    checkpoint_dir, "table_%s_t%d.json" % (tag, t)
                )
            result = run_search(
                SearchTask(tag, t, mode="all"), workers=workers, checkpoint=ckpt
            )
            profs = tuple(
                sorted({a.profile.rk for a in dedup(result.accepted)})
            )
            row.append(
                TableCell(
                    tag,
                    t,
                    "searched",
                    profiles=profs,
                    candidates=count,
                    accepted=len(result.accepted),
                    distinct=result.distinct_code_sets,
                )
            )
        rows.append(row)
    return rows
