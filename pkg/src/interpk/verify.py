"""Named verification experiments.

Each check measures an empirical two-sided equivalence constant (min and max
of a ratio of two norms over a seeded sample set) and reports it as an
EquivReport.  No check claims set equality of spaces: equality or
distinctness of interpolation spaces is not decidable from finite data, so
the runtime counterpart of every equivalence theorem is a ratio band that
stays stable across a dimension sweep, and the counterpart of a distinctness
theorem is a witness whose membership flags differ between two parameter
pairs.

All pass/fail thresholds live in DEFAULTS (overridable per call), never in
the check logic.  Every check is deterministic under (seed, config): sample
i is drawn from a child generator keyed by (seed, i), so doubling the sample
count extends the sample set and can only widen the observed band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._descent import decomposition_infimum
from .couples import (Couple, FiniteVector, _l1_linf_batch, _power_batch,
                      _weighted_sup_batch, k_sphere_sup, l1_linf_couple,
                      power_couple)
from .errors import DomainError, EmptyReportError, InvariantError
from .interp import (DEFAULT_N_MAX, DEFAULT_N_MIN, InterpParams,
                     derived_sum_int_couple, interp_weights, _lq_combine,
                     sequence_couple_k)
from .snum import (LorentzParams, diag_operator, ideal_norm,
                   k_operator_diag_batch, witness_sequence)

__all__ = [
    "DEFAULTS", "EquivReport", "DichotomyReport", "DistinctnessReport",
    "equivalence_report", "vector_sampler", "check_mainlema",
    "check_sum_intersection", "check_reiteration", "check_konig",
    "dichotomy_sweep", "distinctness_demo", "oracle_agreement",
    "couple_family",
]

DEFAULTS = {
    "mainlema": {"band": (0.125, 8.0), "dims": (2, 4, 8),
                 "t_grid": tuple(2.0 ** n for n in range(-6, 1)),
                 "count": 200, "budget": 4},
    "sum_intersection": {"dims": (4, 8, 16, 32, 64), "count": 160,
                         "spread_growth": 1.10},
    "reiteration": {"dims": (4, 8, 16, 32), "count": 160,
                    "spread_growth": 1.10},
    "konig": {"lengths": (4, 8, 16, 32, 64), "count": 48,
              "spread_growth": 1.10, "witness_length": 2 ** 16},
    "dichotomy": {"lower": 0.99, "upper_slack": 1e-9, "samples": 32},
}


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class EquivReport:
    """Empirical two-sided equivalence constants for one check."""

    check: str
    seed: int
    sample_count: int
    min_ratio: float
    max_ratio: float
    per_dimension: dict
    config: dict
    passed: bool | None = None
    notes: str = ""
    trace: list | None = None

    def __post_init__(self):
        if not (0 < self.min_ratio <= self.max_ratio):
            raise InvariantError("need 0 < min_ratio <= max_ratio")

    @property
    def spread(self) -> float:
        return self.max_ratio / self.min_ratio

    def to_json(self) -> dict:
        out = {"check": self.check, "seed": self.seed,
               "sample_count": self.sample_count,
               "min_ratio": self.min_ratio, "max_ratio": self.max_ratio,
               "per_dimension": {str(k): v for k, v in self.per_dimension.items()},
               "config": self.config, "pass": self.passed}
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass
class DichotomyReport:
    check: str
    family: str
    t: float
    sizes: list
    values: list
    seed: int
    config: dict
    passed: bool

    def to_json(self) -> dict:
        return {"check": self.check, "family": self.family, "t": self.t,
                "sizes": list(self.sizes), "values": list(self.values),
                "seed": self.seed, "config": self.config, "pass": self.passed}


@dataclass
class DistinctnessReport:
    check: str
    length: int
    pairs: list
    config: dict
    passed: bool

    def to_json(self) -> dict:
        return {"check": self.check, "length": self.length,
                "pairs": self.pairs, "config": self.config,
                "pass": self.passed}


# ---------------------------------------------------------------------------
# seeded samplers
# ---------------------------------------------------------------------------

def _sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def sample_dense(dim: int, index: int, seed: int) -> np.ndarray:
    """Sample i of the standard mix: flat, spike, Gaussian, sparse, witness.

    Index 0 is always the flat vector (the strictness witness shape) and
    index 1 the first basis spike, so the extreme shapes are represented at
    every sample count.
    """
    rng = _sample_rng(seed, index)
    if index == 0:
        return np.full(dim, 1.0 / dim)
    if index == 1:
        out = np.zeros(dim)
        out[0] = 1.0
        return out
    kind = index % 3
    if kind == 0:
        return rng.standard_normal(dim)
    if kind == 1:
        out = np.zeros(dim)
        support = rng.choice(dim, size=max(1, dim // 4), replace=False)
        out[support] = rng.standard_normal(len(support)) * (
            2.0 ** rng.uniform(-5.0, 5.0))
        return out
    scale = 2.0 ** rng.integers(-3, 4)
    if rng.integers(0, 2):
        return np.full(dim, scale / dim)
    return scale * 2.0 ** (-np.arange(dim, dtype=float) / 2.0)


def sample_matrix_dense(count: int, dim: int, seed: int) -> np.ndarray:
    return np.stack([sample_dense(dim, i, seed) for i in range(count)])


def vector_sampler(dim: int, seed: int, offset: int = 0) -> Callable[[int], FiniteVector]:
    """Seeded generator index -> FiniteVector for equivalence_report."""

    def sample(index: int) -> FiniteVector:
        return FiniteVector(offset, sample_dense(dim, index, seed))

    return sample


def sample_nonincreasing(length: int, index: int, seed: int) -> np.ndarray:
    """Seeded nonincreasing nonnegative sequences of mixed decay shapes."""
    rng = _sample_rng(seed, index)
    kind = index % 3
    if kind == 0:
        vals = np.sort(np.abs(rng.standard_normal(length)))[::-1]
    elif kind == 1:
        rate = rng.uniform(0.1, 1.5)
        vals = 2.0 ** (-rate * np.arange(length, dtype=float))
    else:
        n = np.arange(1, length + 1, dtype=float)
        vals = n ** (-rng.uniform(0.3, 2.0))
    return vals * 2.0 ** rng.integers(-2, 3)


# ---------------------------------------------------------------------------
# generic equivalence report
# ---------------------------------------------------------------------------

def equivalence_report(norm_a, norm_b, sampler: Callable[[int], FiniteVector],
                       count: int, check: str = "equivalence",
                       seed: int = 0, config: dict | None = None,
                       keep_trace: bool = False) -> EquivReport:
    """Ratios norm_a(x)/norm_b(x) over ``count`` sampled vectors.

    Samples where either norm vanishes are skipped; if all collide at zero
    an EmptyReportError is raised.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    ratios = []
    trace = [] if keep_trace else None
    dims: dict[int, list] = {}
    for i in range(count):
        x = sampler(i)
        va = float(norm_a(x))
        vb = float(norm_b(x))
        if va <= 1e-300 or vb <= 1e-300:
            continue
        r = va / vb
        ratios.append(r)
        dims.setdefault(len(x), []).append(r)
        if keep_trace:
            trace.append({"index": i, "dim": len(x), "ratio": r})
    if not ratios:
        raise EmptyReportError("all samples had a vanishing norm")
    per_dim = {d: {"min": float(np.min(v)), "max": float(np.max(v)),
                   "count": len(v)} for d, v in sorted(dims.items())}
    return EquivReport(check=check, seed=seed, sample_count=len(ratios),
                       min_ratio=float(np.min(ratios)),
                       max_ratio=float(np.max(ratios)),
                       per_dimension=per_dim, config=config or {},
                       trace=trace)


# ---------------------------------------------------------------------------
# couple families
# ---------------------------------------------------------------------------

def couple_family(name: str, dim: int) -> Couple:
    """Construct the named couple at the given dimension.

    ``l1_linf``: the unweighted (l1, linf) pair on dim coordinates (ordered
    at fixed dimension).  ``l1_geometric``: the non-ordered pair
    (l1(2^k), l1(2^{-k})) on the symmetric window |k| <= (dim-1)//2.
    """
    if name == "l1_linf":
        return l1_linf_couple(dim)
    if name == "l1_geometric":
        half = (dim - 1) // 2
        ks = np.arange(-half, half + 1, dtype=float)
        return power_couple(1.0, 2.0 ** ks, 2.0 ** (-ks), offset=-half)
    raise DomainError(f"unknown couple family {name!r}")


def _profile_matrix(couple: Couple, X: np.ndarray, grid: np.ndarray) -> np.ndarray:
    cols = [couple.k_batch(X, float(2.0 ** n)) for n in grid]
    return np.stack(cols, axis=1)


def _derived_profile(base_profile: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Surrogate K of (A0+A1, A0 cap A1) at t = 2^n from the base profile.

    Needs a symmetric grid: for n <= 0 the value is P_n + 2^n P_{-n}; for
    n > 0 the monotone extension by the t = 1 value (2 P_0) applies.
    """
    if grid[0] != -grid[-1]:
        raise DomainError("derived profile needs a symmetric n-window")
    P = base_profile
    out = np.empty_like(P)
    zero = np.searchsorted(grid, 0)
    for j, n in enumerate(grid):
        if n <= 0:
            mirror = np.searchsorted(grid, -n)
            out[:, j] = P[:, j] + (2.0 ** float(n)) * P[:, mirror]
        else:
            out[:, j] = 2.0 * P[:, zero]
    return out


def _band_from_ratios(per_size: dict[int, np.ndarray]):
    per_dim = {}
    lo, hi = math.inf, 0.0
    total = 0
    for size, arr in sorted(per_size.items()):
        per_dim[size] = {"min": float(np.min(arr)), "max": float(np.max(arr)),
                         "count": int(arr.size)}
        lo = min(lo, per_dim[size]["min"])
        hi = max(hi, per_dim[size]["max"])
        total += arr.size
    return per_dim, lo, hi, total


def _spreads_stable(per_dim: dict, growth: float) -> bool:
    spreads = [v["max"] / v["min"] for _, v in sorted(per_dim.items())]
    return all(b <= a * growth for a, b in zip(spreads, spreads[1:]))


def _filtered_ratios(lhs, rhs, size, trace):
    ok = (lhs > 1e-300) & (rhs > 1e-300)
    ratios = lhs[ok] / rhs[ok]
    if trace is not None:
        idx = np.arange(len(lhs))[ok]
        trace.extend({"size": int(size), "index": int(i), "ratio": float(r)}
                     for i, r in zip(idx, ratios))
    return ratios


# ---------------------------------------------------------------------------
# named checks
# ---------------------------------------------------------------------------

def check_mainlema(family: str = "l1_linf", dims=None, t_grid=None,
                   count: int | None = None, seed: int = 0,
                   band=None, budget: int | None = None,
                   keep_trace: bool = False) -> EquivReport:
    """Descent K on (A0+A1, A0 cap A1) against the surrogate
    K(x,t) + t K(x,1/t), over t <= 1 and a dimension sweep."""
    cfg = DEFAULTS["mainlema"]
    dims = tuple(cfg["dims"] if dims is None else dims)
    t_grid = tuple(cfg["t_grid"] if t_grid is None else t_grid)
    count = cfg["count"] if count is None else count
    band = tuple(cfg["band"] if band is None else band)
    budget = cfg["budget"] if budget is None else budget
    per_size = {}
    trace = [] if keep_trace else None
    for dim in dims:
        couple = couple_family(family, dim)
        derived = derived_sum_int_couple(couple)
        X = sample_matrix_dense(count, dim, seed)
        keep = np.max(np.abs(X), axis=1) > 0
        X = X[keep]
        idx = np.arange(count)[keep]
        rows = []
        for t in t_grid:
            if t > 1.0:
                continue
            oracle = derived.k_oracle_batch(X, t, budget=budget, seed=seed)
            surr = derived.k_batch(X, t)
            ok = (oracle > 1e-300) & (surr > 1e-300)
            ratios = oracle[ok] / surr[ok]
            rows.append(ratios)
            if keep_trace:
                trace.extend({"size": dim, "t": float(t), "index": int(i),
                              "ratio": float(r)}
                             for i, r in zip(idx[ok], ratios))
        per_size[dim] = np.concatenate(rows)
    per_dim, lo, hi, total = _band_from_ratios(per_size)
    passed = band[0] <= lo and hi <= band[1]
    config = {"family": family, "dims": list(dims), "t_grid": list(t_grid),
              "count": count, "band": list(band), "budget": budget}
    return EquivReport("mainlema", seed, total, lo, hi, per_dim, config,
                       passed=passed, trace=trace)


def check_sum_intersection(theta: float, p: float, dims=None,
                           count: int | None = None, seed: int = 0,
                           family: str = "l1_linf",
                           n_min: int = DEFAULT_N_MIN,
                           n_max: int = DEFAULT_N_MAX,
                           spread_growth: float | None = None,
                           keep_trace: bool = False) -> EquivReport:
    """Interpolation norm of the derived couple (A0+A1, A0 cap A1) at
    (theta, p) against the sum (theta < 1/2) or max (theta >= 1/2) of the
    endpoint norms at theta and 1-theta.

    The derived couple is ordered (intersection into sum), so its norm is
    equivalent to the t <= 1 half of the profile sum with dimension-free
    constants; the check evaluates that half, where the surrogate
    K(x,t) + t K(x,1/t) is available.
    """
    cfg = DEFAULTS["sum_intersection"]
    dims = tuple(cfg["dims"] if dims is None else dims)
    count = cfg["count"] if count is None else count
    spread_growth = cfg["spread_growth"] if spread_growth is None else spread_growth
    params = InterpParams(theta, p)
    grid = np.arange(n_min, n_max + 1)
    low_half = grid <= 0
    w_theta = interp_weights(params, grid)
    w_mirror = interp_weights(InterpParams(1.0 - theta, p), grid)
    per_size = {}
    trace = [] if keep_trace else None
    for dim in dims:
        couple = couple_family(family, dim)
        X = sample_matrix_dense(count, dim, seed)
        P = _profile_matrix(couple, X, grid)
        D = _derived_profile(P, grid)
        lhs = _lq_combine((w_theta * D)[:, low_half], p)
        if theta < 0.5:
            rhs = _power_batch(P, 1.0, p, w_theta, w_mirror)
        else:
            rhs = np.maximum(_lq_combine(w_theta * P, p),
                             _lq_combine(w_mirror * P, p))
        per_size[dim] = _filtered_ratios(lhs, rhs, dim, trace)
    per_dim, lo, hi, total = _band_from_ratios(per_size)
    passed = _spreads_stable(per_dim, spread_growth)
    config = {"theta": theta, "p": p, "dims": list(dims), "count": count,
              "family": family, "n_min": n_min, "n_max": n_max,
              "spread_growth": spread_growth}
    return EquivReport("sum_intersection", seed, total, lo, hi, per_dim,
                       config, passed=passed, trace=trace)


def check_reiteration(theta0: float, theta1: float, alpha: float, r: float,
                      p: float | None = None, q: float | None = None,
                      dims=None, count: int | None = None, seed: int = 0,
                      family: str = "l1_linf", n_min: int = DEFAULT_N_MIN,
                      n_max: int = DEFAULT_N_MAX,
                      spread_growth: float | None = None,
                      keep_trace: bool = False) -> EquivReport:
    """Interpolation at (alpha, r) between the endpoint spaces
    (theta0, p) and (theta1, q) against direct interpolation at
    ((1-alpha) theta0 + alpha theta1, r).

    The K-functional between the endpoint spaces is evaluated on the shared
    K-profile: a decomposition of x induces a decomposition of its profile
    and conversely up to dimension-free constants, so the profile-level K in
    the weighted sequence couple stands in for the vector-level one.
    """
    if not (0.0 < alpha < 1.0):
        raise DomainError("alpha must lie in (0, 1)")
    cfg = DEFAULTS["reiteration"]
    dims = tuple(cfg["dims"] if dims is None else dims)
    count = cfg["count"] if count is None else count
    spread_growth = cfg["spread_growth"] if spread_growth is None else spread_growth
    p = r if p is None else p
    q = r if q is None else q
    grid = np.arange(n_min, n_max + 1)
    w0 = 2.0 ** (-theta0 * grid.astype(float))
    w1 = 2.0 ** (-theta1 * grid.astype(float))
    theta_bar = (1.0 - alpha) * theta0 + alpha * theta1
    w_bar = 2.0 ** (-theta_bar * grid.astype(float))
    w_alpha = 2.0 ** (-alpha * grid.astype(float))
    per_size = {}
    trace = [] if keep_trace else None
    for dim in dims:
        couple = couple_family(family, dim)
        X = sample_matrix_dense(count, dim, seed)
        P = _profile_matrix(couple, X, grid)
        if p == q:
            cols = [_power_batch(P, float(2.0 ** mu), p, w0, w1)
                    for mu in grid]
        else:
            cols = [sequence_couple_k(P, float(2.0 ** mu), p, w0, q, w1,
                                      seed=seed) for mu in grid]
        KK = np.stack(cols, axis=1)
        lhs = _lq_combine(w_alpha * KK, r)
        rhs = _lq_combine(w_bar * P, r)
        per_size[dim] = _filtered_ratios(lhs, rhs, dim, trace)
    per_dim, lo, hi, total = _band_from_ratios(per_size)
    passed = _spreads_stable(per_dim, spread_growth)
    config = {"theta0": theta0, "theta1": theta1, "alpha": alpha, "r": r,
              "p": p, "q": q, "dims": list(dims), "count": count,
              "family": family, "n_min": n_min, "n_max": n_max,
              "spread_growth": spread_growth}
    return EquivReport("reiteration", seed, total, lo, hi, per_dim, config,
                       passed=passed, trace=trace)


def check_konig(p0: float, p1: float, theta: float, q: float, lengths=None,
                count: int | None = None, seed: int = 0,
                n_min: int = DEFAULT_N_MIN, n_max: int = DEFAULT_N_MAX,
                spread_growth: float | None = None,
                witness_length: int | None = None,
                keep_trace: bool = False) -> EquivReport:
    """Dyadic interpolation norm of diagonal K-profiles between the lp0 and
    lp1 ideals against the Lorentz (p, q) norm, 1/p = (1-theta)/p0 + theta/p1.

    Also runs the separating witness eps_n = n^{-1/p}(1+ln n)^{-1/q} and
    records its membership flags at (p, q) and (p, 2q); the flags are part
    of the pass condition.
    """
    cfg = DEFAULTS["konig"]
    lengths = tuple(cfg["lengths"] if lengths is None else lengths)
    count = cfg["count"] if count is None else count
    spread_growth = cfg["spread_growth"] if spread_growth is None else spread_growth
    witness_length = (cfg["witness_length"] if witness_length is None
                      else witness_length)
    p = 1.0 / ((1.0 - theta) / p0 + theta / p1)
    params = LorentzParams(p, q)
    grid = np.arange(n_min, n_max + 1)
    w_theta = 2.0 ** (-theta * grid.astype(float))
    per_size = {}
    trace = [] if keep_trace else None
    for length in lengths:
        S = np.stack([sample_nonincreasing(length, i, seed)
                      for i in range(count)])
        cols = [k_operator_diag_batch(S, float(2.0 ** mu), p0, p1, seed=seed)
                for mu in grid]
        KK = np.stack(cols, axis=1)
        lhs = _lq_combine(w_theta * KK, q)
        n_idx = np.arange(1, length + 1, dtype=float)
        rhs = _lq_combine(
            np.broadcast_to(n_idx ** (1.0 / p - 1.0 / q), S.shape) * S, q)
        per_size[length] = _filtered_ratios(lhs, rhs, length, trace)
    per_dim, lo, hi, total = _band_from_ratios(per_size)
    _, report = witness_sequence(p, q, witness_length,
                                 probe_params=[(p, q), (p, 2.0 * q)])
    flags = [probe.flag for probe in report.probes]
    passed = (_spreads_stable(per_dim, spread_growth)
              and flags == ["diverging", "converging"])
    config = {"p0": p0, "p1": p1, "theta": theta, "q": q, "p": p,
              "lengths": list(lengths), "count": count, "n_min": n_min,
              "n_max": n_max, "spread_growth": spread_growth,
              "witness_length": witness_length, "witness_flags": flags}
    return EquivReport("konig", seed, total, lo, hi, per_dim, config,
                       passed=passed, trace=trace)


def dichotomy_sweep(family: str, t: float, sizes: Sequence[int],
                    samples: int | None = None, seed: int = 0,
                    lower: float | None = None,
                    upper_slack: float | None = None) -> DichotomyReport:
    """Sphere sup of K(., t) across growing windows.

    For the non-ordered family the estimate must stay >= ``lower`` (the sum
    space differs from both endpoints, so the normalized K cannot drop); for
    the ordered family it must stay below t (consistent with A0+A1 = A1).
    """
    cfg = DEFAULTS["dichotomy"]
    samples = cfg["samples"] if samples is None else samples
    lower = cfg["lower"] if lower is None else lower
    upper_slack = cfg["upper_slack"] if upper_slack is None else upper_slack
    values = []
    for size in sizes:
        couple = couple_family(family, size)
        values.append(k_sphere_sup(couple, t, samples, seed))
    if family == "l1_geometric":
        passed = all(v >= lower for v in values)
    else:
        # ordered: K(x, t) <= t ||x||_{A1} <= t K(x, 1) for t <= 1
        bound = min(1.0, t) * (1.0 + upper_slack)
        passed = all(v <= bound for v in values)
    config = {"family": family, "t": t, "sizes": list(sizes),
              "samples": samples, "lower": lower, "upper_slack": upper_slack}
    return DichotomyReport("dichotomy", family, t, list(sizes),
                           [float(v) for v in values], seed, config, passed)


def distinctness_demo(p_list: Sequence[float], q_list: Sequence[float],
                      N: int, norm_lengths: Sequence[int] = (16, 64)) -> DistinctnessReport:
    """Witness-based separation of Lorentz ideal parameter pairs.

    For each unordered pair of parameters, the witness built from the finer
    pair (smaller p, then smaller q) diverges there and converges in the
    coarser ideal whenever p differs or q does; identical pairs report
    identical flags.  Ideal norms of the truncated witness diagonal operator
    are tabulated alongside.
    """
    pairs_all = [(float(p), float(q)) for p in p_list for q in q_list]
    results = []
    passed = True
    for i, a in enumerate(pairs_all):
        for b in pairs_all[i:]:
            fine, coarse = sorted((a, b))
            _, report = witness_sequence(fine[0], fine[1], N,
                                         probe_params=[fine, coarse])
            flag_fine, flag_coarse = (pr.flag for pr in report.probes)
            entry = {"pair_a": list(fine), "pair_b": list(coarse),
                     "flag_fine": flag_fine, "flag_coarse": flag_coarse,
                     "separated": flag_fine != flag_coarse}
            eps, _ = witness_sequence(fine[0], fine[1], max(norm_lengths))
            entry["ideal_norms"] = {
                str(L): {
                    "fine": float(ideal_norm(diag_operator(eps[:L]),
                                             LorentzParams(*fine))),
                    "coarse": float(ideal_norm(diag_operator(eps[:L]),
                                               LorentzParams(*coarse)))}
                for L in norm_lengths}
            # distinct parameter pairs must separate, identical ones must not
            passed &= entry["separated"] == (fine != coarse)
            results.append(entry)
    config = {"p_list": [float(p) for p in p_list],
              "q_list": [float(q) for q in q_list], "N": N,
              "norm_lengths": list(norm_lengths)}
    return DistinctnessReport("distinctness", N, results, config, passed)


# ---------------------------------------------------------------------------
# oracle agreement (closed forms vs descent)
# ---------------------------------------------------------------------------

def oracle_agreement(count: int = 200, max_dim: int = 8, seed: int = 0,
                     budget: int = 4) -> dict:
    """Relative gap between the exact strategies and the descent oracle.

    Per sample: a random dimension <= max_dim, a random t in [2^-6, 2^6],
    and either the unweighted (l1, linf) couple or (linf(w0), linf(w1)) with
    seeded log-uniform weights.  Returns the worst relative errors per kind.
    """
    specs = {"l1_linf": [], "weighted_sup": []}
    for i in range(count):
        rng = _sample_rng(seed, i)
        dim = int(rng.integers(1, max_dim + 1))
        t = float(2.0 ** rng.uniform(-6.0, 6.0))
        x = rng.standard_normal(dim)
        kind = "l1_linf" if i % 2 == 0 else "weighted_sup"
        w0 = 2.0 ** rng.uniform(-3.0, 3.0, size=dim)
        w1 = 2.0 ** rng.uniform(-3.0, 3.0, size=dim)
        specs[kind].append((dim, t, x, w0, w1))

    worst = {}
    for kind, items in specs.items():
        errs = []
        by_dim: dict[int, list] = {}
        for item in items:
            by_dim.setdefault(item[0], []).append(item)
        for dim, group in by_dim.items():
            X = np.stack([g[2] for g in group])
            T = np.asarray([g[1] for g in group])
            if kind == "l1_linf":
                exact = _l1_linf_batch(X, T)
                n0 = lambda A: np.sum(np.abs(A), axis=1)
                n1 = lambda A: np.max(np.abs(A), axis=1)
                s0 = s1 = np.ones(dim)
            else:
                W0 = np.stack([g[3] for g in group])
                W1 = np.stack([g[4] for g in group])
                exact = _weighted_sup_batch(X, T, W0, W1)
                n0 = lambda A, W0=W0: np.max(W0 * np.abs(A), axis=1)
                n1 = lambda A, W1=W1: np.max(W1 * np.abs(A), axis=1)
                s0, s1 = W0, W1
            oracle = decomposition_infimum(X, T, n0, n1, budget=budget,
                                           seed=seed, scale0=s0, scale1=s1)
            keep = exact > 1e-300
            errs.append(np.abs(oracle[keep] - exact[keep]) / exact[keep])
        worst[kind] = float(np.max(np.concatenate(errs)))
    return {"count": count, "max_dim": max_dim, "seed": seed,
            "worst_relative_error": worst}
