"""Beveridge-curve estimation.

Fits log v on log u by ordinary least squares, locates multiple
structural breaks by exact dynamic programming over segment endpoints,
and selects the number of breaks with a BIC. The DP is the classic
optimal-partition recursion: precompute the OLS sum of squared residuals
for every admissible window, then build the best k-break partition from
the best (k-1)-break ones. For a given SSR table the optimum is exact,
so break placement is deterministic.

Elasticities are reported signed (negative along a downward-sloping
curve); formulas elsewhere take the positive magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InfeasiblePartition, SingularFit
from .periods import DateRange
from .series import PairedSeries


@dataclass(frozen=True)
class Segment:
    """One regression regime: log v = intercept + elasticity * log u."""

    range: DateRange
    elasticity: float
    intercept: float
    ssr: float
    n: int


@dataclass(frozen=True)
class BeveridgeFit:
    """Selected segmentation of the sample."""

    segments: tuple[Segment, ...]
    break_dates: tuple  # Period of the first observation of each new segment
    num_breaks: int
    selection_score: float  # BIC of the chosen model
    bic_path: tuple[float, ...]  # BIC for k = 0..max_breaks evaluated
    ssr_path: tuple[float, ...]


@dataclass(frozen=True)
class HyperbolaConstant:
    """Location of the hyperbola uv = A over a window."""

    A: float
    dispersion: float  # std of log(uv)


class _SsrTable:
    """O(1) per-window OLS statistics via prefix sums."""

    def __init__(self, x: np.ndarray, y: np.ndarray):
        z = np.zeros(1)
        self.n = len(x)
        self.sx = np.concatenate([z, np.cumsum(x)])
        self.sy = np.concatenate([z, np.cumsum(y)])
        self.sxx = np.concatenate([z, np.cumsum(x * x)])
        self.syy = np.concatenate([z, np.cumsum(y * y)])
        self.sxy = np.concatenate([z, np.cumsum(x * y)])

    def stats(self, i: int, j: int) -> tuple[float, float, float]:
        """(slope, intercept, ssr) for observations i..j inclusive."""
        n = j - i + 1
        sx = self.sx[j + 1] - self.sx[i]
        sy = self.sy[j + 1] - self.sy[i]
        sxx = self.sxx[j + 1] - self.sxx[i]
        syy = self.syy[j + 1] - self.syy[i]
        sxy = self.sxy[j + 1] - self.sxy[i]
        den = n * sxx - sx * sx
        if den <= 1e-12 * max(1.0, n * sxx):
            raise SingularFit(f"degenerate regressor on observations {i}..{j}")
        slope = (n * sxy - sx * sy) / den
        intercept = (sy - slope * sx) / n
        ssr = syy - sy * sy / n - slope * (sxy - sx * sy / n)
        # prefix-sum cancellation leaves O(eps * Syy) residue on exact fits;
        # snap it to zero so noiseless data reports a perfect fit
        if ssr < 1e-10 * max(1.0, abs(syy)):
            ssr = 0.0
        return slope, intercept, ssr

    def ssr(self, i: int, j: int) -> float:
        return self.stats(i, j)[2]


def log_ols(pairs: PairedSeries, r: DateRange | None = None) -> Segment:
    """OLS of log v on log u with intercept over a window.

    The slope is the Beveridge elasticity (negative along the curve).
    Requires at least three observations and non-degenerate variation in
    log u.
    """
    piece = pairs if r is None else pairs.restrict(r)
    if len(piece) < 3:
        raise SingularFit(f"need at least 3 observations, got {len(piece)}")
    u, v = piece.arrays()
    table = _SsrTable(np.log(u), np.log(v))
    slope, intercept, ssr = table.stats(0, len(piece) - 1)
    return Segment(
        range=piece.range(),
        elasticity=float(slope),
        intercept=float(intercept),
        ssr=float(ssr),
        n=len(piece),
    )


def detect_breaks(
    pairs: PairedSeries, max_breaks: int, min_seg: int
) -> dict[int, tuple[tuple[int, ...], float]]:
    """Globally optimal break placements for k = 0..max_breaks.

    Returns, for each break count k, the SSR-minimizing placement as a
    tuple of segment-start indices (the first observation of each new
    regime) together with the total SSR. Placement minimizes the sum of
    per-segment OLS residuals of log v on log u, subject to every
    segment holding at least ``min_seg`` observations.
    """
    n = len(pairs)
    min_seg = max(int(min_seg), 3)
    if n < (max_breaks + 1) * min_seg:
        raise InfeasiblePartition(
            f"{n} observations cannot hold {max_breaks} breaks "
            f"with segments of at least {min_seg}"
        )
    u, v = pairs.arrays()
    table = _SsrTable(np.log(u), np.log(v))

    # cost[i][j]: SSR of the single segment i..j (inclusive), admissible only
    cost = np.full((n, n), np.inf)
    for i in range(n):
        for j in range(i + min_seg - 1, n):
            cost[i, j] = table.ssr(i, j)

    # best[k][j]: minimal SSR of observations 0..j split into k+1 segments
    best = np.full((max_breaks + 1, n), np.inf)
    arg = np.full((max_breaks + 1, n), -1, dtype=int)
    best[0] = cost[0]
    for k in range(1, max_breaks + 1):
        for j in range((k + 1) * min_seg - 1, n):
            # last segment starts at t+1; earlier part holds k segments
            lo = k * min_seg - 1
            hi = j - min_seg + 1
            candidates = best[k - 1, lo:hi] + cost[lo + 1 : hi + 1, j]
            t = int(np.argmin(candidates)) + lo
            if np.isfinite(candidates[t - lo]):
                best[k, j] = candidates[t - lo]
                arg[k, j] = t

    results: dict[int, tuple[tuple[int, ...], float]] = {}
    for k in range(max_breaks + 1):
        if not np.isfinite(best[k, n - 1]):
            continue
        starts: list[int] = []
        j = n - 1
        for kk in range(k, 0, -1):
            t = arg[kk, j]
            starts.append(t + 1)
            j = t
        results[k] = (tuple(sorted(starts)), float(best[k, n - 1]))
    return results


def bic_score(n: int, ssr: float, k: int) -> float:
    """BIC for a k-break model: n*log(SSR/n) + p*log(n), p = 2(k+1)+k.

    Each regime contributes two regression parameters and each break one
    location parameter. Zero SSR maps to -inf so that noiseless data
    selects the smallest k achieving it.
    """
    p = 2 * (k + 1) + k
    if ssr <= 0.0:
        return -math.inf
    return n * math.log(ssr / n) + p * math.log(n)


def select_num_breaks(pairs: PairedSeries, results: dict[int, tuple[tuple[int, ...], float]]) -> BeveridgeFit:
    """Pick the break count minimizing BIC and assemble the full fit.

    Ties (including multiple zero-SSR models) resolve to the smallest k.
    """
    if not results:
        raise InfeasiblePartition("no feasible segmentations to select from")
    n = len(pairs)
    ks = sorted(results)
    bics = {k: bic_score(n, results[k][1], k) for k in ks}
    best_k = min(ks, key=lambda k: (bics[k], k))

    starts, _ = results[best_k]
    bounds = [0, *starts, n]
    segments = []
    for a, b in zip(bounds, bounds[1:]):
        window = DateRange(pairs.periods[a], pairs.periods[b - 1])
        segments.append(log_ols(pairs, window))
    return BeveridgeFit(
        segments=tuple(segments),
        break_dates=tuple(pairs.periods[s] for s in starts),
        num_breaks=best_k,
        selection_score=bics[best_k],
        bic_path=tuple(bics[k] for k in ks),
        ssr_path=tuple(results[k][1] for k in ks),
    )


def fit_breaks(pairs: PairedSeries, max_breaks: int = 7, min_seg_frac: float = 0.10) -> BeveridgeFit:
    """End-to-end break fit with the trimming convention.

    ``min_seg_frac`` sets the minimum segment length as a fraction of
    the sample (rounded up).
    """
    min_seg = math.ceil(min_seg_frac * len(pairs))
    results = detect_breaks(pairs, max_breaks, min_seg)
    return select_num_breaks(pairs, results)


def hyperbola_constant(pairs: PairedSeries, r: DateRange | None = None) -> HyperbolaConstant:
    """Hyperbola location A = geometric mean of the products u*v.

    The square root of A anchors the window's efficient unemployment
    rate, and the dispersion of log(uv) measures how far the sample is
    from a single hyperbola.
    """
    piece = pairs if r is None else pairs.restrict(r)
    if len(piece) < 1:
        raise DomainError("hyperbola constant needs at least one observation")
    u, v = piece.arrays()
    logs = np.log(u * v)
    return HyperbolaConstant(A=float(np.exp(logs.mean())), dispersion=float(logs.std()))


def matching_elasticity(eps: float, u: float) -> float:
    """Matching elasticity implied by a Beveridge elasticity of ``eps``.

    eta = (eps - u/(1-u)) / (1 + eps), with ``eps`` the positive
    magnitude of the Beveridge elasticity.
    """
    if eps <= 0:
        raise DomainError(f"Beveridge elasticity magnitude must be positive, got {eps}")
    if not 0 < u < 1:
        raise DomainError(f"unemployment rate must lie in (0, 1), got {u}")
    return (eps - u / (1.0 - u)) / (1.0 + eps)
