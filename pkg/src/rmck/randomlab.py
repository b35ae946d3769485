"""Seeded G(n, p) sampling and Monte-Carlo threshold experiments.

Randomness is counter based: edge ``i`` of trial seed ``s`` is present iff
``splitmix64(mix(s) + i) / 2**64 < p``, so a sample depends only on
``(n, p, seed)`` and trials can run in any order or in parallel.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import Graph
from .packing import stp_number

BETA = 2.0 / (1.0 - math.log(2.0))

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _splitmix(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = z + _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
        return z ^ (z >> np.uint64(31))


def edge_uniforms(n: int, seed: int) -> np.ndarray:
    """One uniform in [0, 1) per vertex pair, pairs in lexicographic order."""
    count = n * (n - 1) // 2
    key = _splitmix(np.array([seed % 2**64], dtype=np.uint64))[0]
    with np.errstate(over="ignore"):
        counters = key + np.arange(count, dtype=np.uint64)
    bits = _splitmix(counters) >> np.uint64(11)
    return bits.astype(np.float64) * (1.0 / 2**53)


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return Graph(n, ())
    iu, iv = np.triu_indices(n, 1)
    keep = edge_uniforms(n, seed) < p
    return Graph(n, tuple(zip(iu[keep].tolist(), iv[keep].tolist())))


def trial_seed(seed: int, *path: int) -> int:
    """Independent 64-bit seed for a position in the experiment grid."""
    return int(np.random.SeedSequence(seed, spawn_key=tuple(path)).generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class TrialRecord:
    n: int
    p: float
    k: int
    seed: int
    m: int
    min_degree: int
    T: int
    has_rmc_k: bool
    baseline_colors: Optional[int]
    stp_formula_agrees: bool


def run_trial(n: int, p: float, k: int, seed: int) -> TrialRecord:
    if k < 1:
        raise ValueError("k must be >= 1")
    g = sample_gnp(n, p, seed)
    delta = min(g.degrees()) if n else 0
    t = stp_number(g) if n >= 2 and g.is_connected() else 0
    formula = min(delta, g.m // (n - 1)) if n >= 2 else 0
    has = t >= k
    base = g.m - k * (n - 2) if has else None
    return TrialRecord(n, p, k, seed, g.m, delta, t, has, base, t == formula)


def _run_trial_args(args):
    return run_trial(*args)


def _map(tasks, workers: Optional[int]):
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_trial_args, tasks, chunksize=8))
    return [_run_trial_args(t) for t in tasks]


def check_stp_formula(n: int, p: float, trials: int, seed: int, workers: Optional[int] = None) -> float:
    """Fraction of samples where T equals ``min(delta, floor(m/(n-1)))``."""
    if trials < 1:
        raise ValueError("trials must be positive")
    recs = _map([(n, p, 1, trial_seed(seed, t)) for t in range(trials)], workers)
    return sum(r.stp_formula_agrees for r in recs) / trials


class ThresholdCaseError(ValueError):
    pass


@dataclass(frozen=True)
class Regime:
    """Which growth regime the target ``f(n)`` and ``k`` are in.

    ``kind``: "sublinear-log" (f = o(n log n), k = o(n)), "superlinear-log"
    (f at least of order n log n, k = o(n); ``f`` must then be given), or
    "linear-k" (k of order n).
    """

    kind: str
    f: Optional[float] = None

    def describe(self) -> str:
        return self.kind if self.f is None else f"{self.kind}(f={self.f:g})"


def predicted_threshold(n: int, k: int, regime: Regime, rule: str = "min") -> tuple[float, bool]:
    """Predicted threshold p* and whether the case is the degenerate one.

    In the sublinear regime ``rule="min"`` evaluates ``min(k/n, log n/n)``
    as stated (for k = 1 this is the connectivity threshold log n/n);
    ``rule="max"`` gives the larger of the two, which is what the
    k-versus-log n case split of the edge-count argument selects.
    """
    if n < 2 or not 1 <= k <= n // 2:
        raise ThresholdCaseError(f"need 1 <= k <= n//2, got n={n}, k={k}")
    if regime.kind == "superlinear-log":
        if regime.f is None:
            raise ThresholdCaseError("this regime needs f(n)")
        if regime.f < k * (n - 1):
            raise ThresholdCaseError(f"f={regime.f} below k(n-1)={k * (n - 1)}")
        return (regime.f + k * n) / n**2, False
    if regime.kind == "sublinear-log":
        a, b = k / n, math.log(n) / n
        if k == 1:
            return b, False  # existence is plain connectivity
        if rule == "min":
            return min(a, b), False
        if rule == "max":
            return max(a, b), False
        raise ValueError(f"unknown rule {rule!r}")
    if regime.kind == "linear-k":
        return 1.0, True
    raise ThresholdCaseError(f"regime {regime.kind!r} matches no threshold case")


def geometric_grid(p_min: float, p_max: float, steps: int) -> list[float]:
    if not 0 < p_min < p_max <= 1 or steps < 2:
        raise ValueError("need 0 < p_min < p_max <= 1 and steps >= 2")
    return [float(x) for x in np.geomspace(p_min, p_max, steps)]


def crossing_point(grid: Sequence[float], freqs: Sequence[float], level: float = 0.5) -> Optional[float]:
    """First p where the frequency reaches ``level``, log-linearly interpolated."""
    for i, f in enumerate(freqs):
        if f >= level:
            if i == 0:
                return grid[0] if f == level else None
            f0, f1 = freqs[i - 1], f
            a, b = math.log(grid[i - 1]), math.log(grid[i])
            return math.exp(a + (level - f0) / (f1 - f0) * (b - a))
    return None


def monotone_within(freqs: Sequence[float], trials: int, z: float = 3.0) -> bool:
    """No adjacent drop larger than ``z`` combined standard errors."""
    for f0, f1 in zip(freqs, freqs[1:]):
        se = math.sqrt((f0 * (1 - f0) + f1 * (1 - f1)) / trials)
        if f1 < f0 - z * se - 1e-12:
            return False
    return True


@dataclass
class SweepReport:
    n: int
    k: int
    f_description: str
    grid: list[float]
    trials: int
    frequencies: list[float]
    crossing: Optional[float]
    p_star: Optional[float]
    beta: float = BETA
    note: str = ""
    records: list[TrialRecord] = field(default_factory=list, repr=False)

    def to_dict(self, with_records: bool = False) -> dict:
        d = {
            "n": self.n,
            "k": self.k,
            "f": self.f_description,
            "grid": self.grid,
            "trials": self.trials,
            "frequencies": self.frequencies,
            "crossing": self.crossing,
            "p_star": self.p_star,
            "beta": self.beta,
            "note": self.note,
        }
        if with_records:
            d["records"] = [asdict(r) for r in self.records]
        return d


def sweep(
    n: int,
    k: int,
    p_grid: Sequence[float],
    trials_per_p: int,
    seed: int,
    f_value: Optional[int] = None,
    regime: Optional[Regime] = None,
    workers: Optional[int] = None,
    rule: str = "min",
) -> SweepReport:
    """Success frequency across ``p_grid``.

    The property is ``T >= k`` (an RMC_k-coloring exists) or, when
    ``f_value`` is given, that the certified lower bound ``m - k(n-2)``
    reaches it.
    """
    grid = [float(p) for p in p_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("p grid must be strictly increasing")
    if trials_per_p < 1:
        raise ValueError("trials must be positive")
    tasks = [(n, p, k, trial_seed(seed, i, t)) for i, p in enumerate(grid) for t in range(trials_per_p)]
    recs = _map(tasks, workers)
    freqs = []
    for i in range(len(grid)):
        chunk = recs[i * trials_per_p:(i + 1) * trials_per_p]
        if f_value is None:
            hits = sum(r.has_rmc_k for r in chunk)
        else:
            hits = sum(r.baseline_colors is not None and r.baseline_colors >= f_value for r in chunk)
        freqs.append(hits / trials_per_p)
    if regime is None:
        regime = Regime("sublinear-log") if f_value is None else Regime("superlinear-log", f_value)
    note = ""
    try:
        p_star, degenerate = predicted_threshold(n, k, regime, rule)
        if degenerate:
            note = "degenerate case, no crossing expected"
    except ThresholdCaseError as exc:
        p_star, note = None, str(exc)
    desc = "has RMC_k" if f_value is None else f"m-k(n-2) >= {f_value}"
    return SweepReport(n, k, f"{desc}; {regime.describe()}", grid, trials_per_p, freqs,
                       crossing_point(grid, freqs), p_star, BETA, note, recs)
