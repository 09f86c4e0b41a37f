"""Vectors on integer windows, weighted lp quasi-norms, couples, and the
decomposition functional

    K(x, t) = inf { ||a||_{A0} + t * ||b||_{A1} : a + b = x }.

Everything is finite: vectors carry an integer offset into Z and a finite
entry array; norms carry positive weights over a window of Z.  A couple is
two norms on a shared window plus an evaluation strategy for K together with
the constants relating the strategy's output to the true infimum:

* ``exact_l1_linf``        closed form for the unweighted (l1, linf) pair,
  in either order via the identity K(x, t; A0, A1) = t * K(x, 1/t; A1, A0);
* ``weighted_sup_lp``      exact K for (linf(w0), linf(w1)), computed as a
  two-variable linear program by vertex enumeration;
* ``power_coordinatewise`` the coordinatewise power functional

      K_p(x, t) = ( sum_i inf_{a+b=x_i} (w0_i |a|)^p + t^p (w1_i |b|)^p )^{1/p}

  for two weighted lp norms sharing one exponent p; equals the true K for
  p = 1 and stays within [2^{-|1-1/p|}, 2^{|1-1/p|}] of it otherwise;
* ``oracle``               seeded multi-start descent over decompositions
  (an upper approximation), usable with arbitrary norm handles.

K-profiles sample K(x, 2^n) over a dyadic window; they are the discrete
object every interpolation norm downstream consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ._descent import decomposition_infimum
from .errors import (DomainError, InvariantError, SizeError, WindowError)

__all__ = [
    "FiniteVector", "WeightedNorm", "Couple", "KProfile",
    "EXACT_L1_LINF", "WEIGHTED_SUP_LP", "POWER_COORDINATEWISE", "ORACLE",
    "quasi_norm", "k_exact_l1_linf", "k_weighted_sup",
    "k_power_coordinatewise", "k_oracle", "k_profile", "endpoint_norms",
    "k_sphere_sup", "l1_linf_couple", "weighted_sup_couple", "power_couple",
    "geometric_weights",
]

EXACT_L1_LINF = "exact_l1_linf"
WEIGHTED_SUP_LP = "weighted_sup_lp"
POWER_COORDINATEWISE = "power_coordinatewise"
ORACLE = "oracle"

_EXACT_STRATEGIES = (EXACT_L1_LINF, WEIGHTED_SUP_LP)

ORACLE_MAX_DIM = 16


def _parse_p(p) -> float:
    if isinstance(p, str):
        if p.lower() in ("inf", "infinity"):
            return math.inf
        raise DomainError(f"unrecognized exponent string {p!r}")
    p = float(p)
    if not (p > 0):
        raise DomainError(f"exponent p must be positive, got {p}")
    return p


def stable_lp_sum(terms: np.ndarray, p: float, axis: int = -1) -> np.ndarray:
    """(sum terms^p)^(1/p) of nonnegative terms along ``axis``; max for p = inf.

    Factors out the largest term so intermediate powers never overflow even
    for large exponents or extreme magnitudes.
    """
    terms = np.asarray(terms, dtype=float)
    if terms.shape[axis] == 0:
        return np.zeros(np.delete(terms.shape, axis))
    if math.isinf(p):
        return np.max(terms, axis=axis)
    peak = np.max(terms, axis=axis, keepdims=True)
    safe = np.where(peak > 0, peak, 1.0)
    return np.squeeze(peak, axis=axis) * np.sum(
        (terms / safe) ** p, axis=axis) ** (1.0 / p)


def _p_to_json(p: float):
    return "inf" if math.isinf(p) else p


@dataclass(frozen=True)
class FiniteVector:
    """A finitely supported vector over Z: entries start at index ``offset``."""

    offset: int
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=float)
        if arr.ndim != 1:
            raise InvariantError("entries must be one-dimensional")
        if not np.all(np.isfinite(arr)):
            raise InvariantError("entries must be finite")
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "offset", int(self.offset))

    def __len__(self):
        return len(self.entries)

    @property
    def window(self) -> tuple[int, int]:
        """Half-open index window [offset, offset + len)."""
        return self.offset, self.offset + len(self.entries)

    def scaled(self, factor: float) -> "FiniteVector":
        return FiniteVector(self.offset, factor * self.entries)

    def to_json(self) -> dict:
        return {"offset": self.offset, "entries": self.entries.tolist()}

    @staticmethod
    def from_json(data: dict) -> "FiniteVector":
        return FiniteVector(int(data.get("offset", 0)), data["entries"])


def vec(entries, offset: int = 0) -> FiniteVector:
    """Shorthand constructor."""
    return FiniteVector(offset, np.asarray(entries, dtype=float))


@dataclass(frozen=True)
class WeightedNorm:
    """Weighted lp quasi-norm over a window of Z.

    ``norm(x) = (sum_i (w_i |x_i|)^p)^(1/p)`` for finite p and
    ``sup_i w_i |x_i|`` for p = inf.  The norm is r-normed with
    r = min(p, 1), and its quasi-norm constant is 2^(1/p - 1) for p < 1,
    1 otherwise.
    """

    p: float
    offset: int
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", _parse_p(self.p))
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or len(w) == 0:
            raise InvariantError("weights must be a nonempty 1-d array")
        if not np.all(w > 0) or not np.all(np.isfinite(w)):
            raise InvariantError("weights must be positive and finite")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "offset", int(self.offset))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def window(self) -> tuple[int, int]:
        return self.offset, self.offset + self.dim

    @property
    def power_exponent(self) -> float:
        """Aoki-Rolewicz exponent r = min(p, 1)."""
        return min(self.p, 1.0)

    @property
    def quasi_constant(self) -> float:
        return max(1.0, 2.0 ** (1.0 / self.p - 1.0))

    def dense(self, X: np.ndarray) -> np.ndarray:
        """Norm of each row of X; rows must span the full window."""
        X = np.asarray(X, dtype=float)
        return stable_lp_sum(self.weights * np.abs(X), self.p)

    def embed(self, x: FiniteVector) -> np.ndarray:
        """Dense representation of x on this window (WindowError outside)."""
        lo, hi = x.window
        wlo, whi = self.window
        if len(x) and (lo < wlo or hi > whi):
            raise WindowError(
                f"vector window [{lo},{hi}) not contained in norm window "
                f"[{wlo},{whi})")
        out = np.zeros(self.dim)
        out[lo - wlo:hi - wlo] = x.entries
        return out

    def __call__(self, x: FiniteVector) -> float:
        return float(self.dense(self.embed(x)))

    def to_json(self) -> dict:
        return {"p": _p_to_json(self.p), "weights": self.weights.tolist()}

    @staticmethod
    def from_json(data: dict, offset: int = 0) -> "WeightedNorm":
        return WeightedNorm(data["p"], int(data.get("offset", offset)),
                            np.asarray(data["weights"], dtype=float))


def geometric_weights(base: float, n_lo: int, n_hi: int) -> np.ndarray:
    """Weights base^k for k = n_lo..n_hi inclusive."""
    ks = np.arange(n_lo, n_hi + 1)
    return float(base) ** ks


def unit_weights(dim: int) -> np.ndarray:
    return np.ones(dim)


@dataclass(frozen=True)
class Couple:
    """Two weighted quasi-norms on a shared window plus a K strategy.

    ``equiv_lo <= K_strategy / K_true <= equiv_hi`` on the strategy's domain;
    both constants are 1 for the exact strategies.
    """

    norm0: WeightedNorm
    norm1: WeightedNorm
    strategy: str
    equiv_lo: float = 1.0
    equiv_hi: float = 1.0
    oracle_budget: int = 8
    oracle_seed: int = 0

    def __post_init__(self):
        if self.norm0.window != self.norm1.window:
            raise WindowError("couple norms must share one index window")
        if not (0 < self.equiv_lo <= 1.0 <= self.equiv_hi):
            raise InvariantError("need equiv_lo <= 1 <= equiv_hi, both positive")
        s = self.strategy
        p0, p1 = self.norm0.p, self.norm1.p
        if s == EXACT_L1_LINF:
            pair = {p0, p1}
            if pair != {1.0, math.inf}:
                raise InvariantError("exact_l1_linf needs exponents {1, inf}")
            for n in (self.norm0, self.norm1):
                if not np.all(n.weights == 1.0):
                    raise InvariantError("exact_l1_linf needs unit weights")
            if (self.equiv_lo, self.equiv_hi) != (1.0, 1.0):
                raise InvariantError("exact strategies carry band (1, 1)")
        elif s == WEIGHTED_SUP_LP:
            if not (math.isinf(p0) and math.isinf(p1)):
                raise InvariantError("weighted_sup_lp needs p0 = p1 = inf")
            if (self.equiv_lo, self.equiv_hi) != (1.0, 1.0):
                raise InvariantError("exact strategies carry band (1, 1)")
        elif s == POWER_COORDINATEWISE:
            if math.isinf(p0) or math.isinf(p1):
                raise DomainError(
                    "power_coordinatewise rejects p = inf; use weighted_sup_lp")
            if p0 != p1:
                raise InvariantError(
                    "power_coordinatewise needs one shared exponent")
        elif s != ORACLE:
            raise InvariantError(f"unknown strategy {s!r}")

    @property
    def offset(self) -> int:
        return self.norm0.offset

    @property
    def dim(self) -> int:
        return self.norm0.dim

    @property
    def window(self) -> tuple[int, int]:
        return self.norm0.window

    @property
    def quasi_constant(self) -> float:
        return max(self.norm0.quasi_constant, self.norm1.quasi_constant)

    def is_exact(self) -> bool:
        return (self.strategy in _EXACT_STRATEGIES
                or (self.strategy == POWER_COORDINATEWISE
                    and self.norm0.p == 1.0))

    def reversed(self) -> "Couple":
        """The couple (A1, A0); K relates by K(x,t;A1,A0) = t K(x,1/t;A0,A1)."""
        return replace(self, norm0=self.norm1, norm1=self.norm0)

    def embed(self, x: FiniteVector) -> np.ndarray:
        return self.norm0.embed(x)

    def k_batch(self, X: np.ndarray, T) -> np.ndarray:
        """K at each row of X (dense over the window); T scalar or per-row."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        T = np.broadcast_to(np.asarray(T, dtype=float), (X.shape[0],))
        if np.any(T <= 0):
            raise DomainError("t must be positive")
        s = self.strategy
        if s == EXACT_L1_LINF:
            if self.norm0.p == 1.0:
                return _l1_linf_batch(X, T)
            return T * _l1_linf_batch(X, 1.0 / T)
        if s == WEIGHTED_SUP_LP:
            return _weighted_sup_batch(X, T, self.norm0.weights,
                                       self.norm1.weights)
        if s == POWER_COORDINATEWISE:
            return _power_batch(X, T, self.norm0.p, self.norm0.weights,
                                self.norm1.weights)
        return decomposition_infimum(
            X, T, self.norm0.dense, self.norm1.dense,
            budget=self.oracle_budget, seed=self.oracle_seed,
            scale0=_amplitude_scale(self.norm0),
            scale1=_amplitude_scale(self.norm1))

    def k(self, x: FiniteVector, t: float) -> float:
        return float(self.k_batch(self.embed(x)[None, :], t)[0])

    def to_json(self) -> dict:
        return {"norm0": self.norm0.to_json(), "norm1": self.norm1.to_json(),
                "strategy": self.strategy, "offset": self.offset,
                "equiv_lo": self.equiv_lo, "equiv_hi": self.equiv_hi}

    @staticmethod
    def from_json(data: dict) -> "Couple":
        offset = int(data.get("offset", 0))
        norm0 = WeightedNorm.from_json(data["norm0"], offset)
        norm1 = WeightedNorm.from_json(data["norm1"], offset)
        strategy = data["strategy"]
        extra = {}
        if "equiv_lo" in data:
            extra["equiv_lo"] = float(data["equiv_lo"])
        if "equiv_hi" in data:
            extra["equiv_hi"] = float(data["equiv_hi"])
        if strategy == POWER_COORDINATEWISE and not extra and norm0.p != 1.0:
            # default to the analytically safe surrogate band
            band = 2.0 ** (1.0 / min(norm0.p, 1.0))
            extra = {"equiv_lo": 1.0 / band, "equiv_hi": band}
        return Couple(norm0, norm1, strategy, **extra)


def _amplitude_scale(norm: WeightedNorm) -> np.ndarray:
    # norm(e_j) = w_j for every lp exponent
    return norm.weights


@dataclass(frozen=True)
class KProfile:
    """Samples K(x, 2^n) for n on an integer window.

    Invariants: values are nonnegative, nondecreasing in n, and values/2^n
    is nonincreasing in n.
    """

    n_min: int
    n_max: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if len(v) != self.n_max - self.n_min + 1:
            raise InvariantError("profile length must match the n-window")
        object.__setattr__(self, "values", v)

    @property
    def grid(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1)

    @property
    def t_values(self) -> np.ndarray:
        return 2.0 ** self.grid

    def validate(self, rel_tol: float = 1e-9) -> None:
        v = self.values
        scale = max(float(np.max(v, initial=0.0)), 1e-300)
        slack = rel_tol * scale
        if np.any(v < -slack):
            raise InvariantError("profile values must be nonnegative")
        if np.any(np.diff(v) < -slack):
            raise InvariantError("K(x, t) must be nondecreasing in t")
        ratios = v / self.t_values
        rslack = rel_tol * max(float(np.max(ratios, initial=0.0)), 1e-300)
        if np.any(np.diff(ratios) > rslack):
            raise InvariantError("K(x, t)/t must be nonincreasing in t")

    def to_json(self) -> dict:
        return {"n_min": self.n_min, "n_max": self.n_max,
                "values": self.values.tolist()}


# ---------------------------------------------------------------------------
# batch strategy kernels
# ---------------------------------------------------------------------------

def _l1_linf_batch(X: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Exact K for the unweighted (l1, linf) couple, rowwise.

    K(x, t) = sum_{k<=floor(t)} x*_k + (t - floor(t)) x*_{floor(t)+1} with x*
    the nonincreasing rearrangement of |x| (zero beyond the support).
    """
    X = np.atleast_2d(X)
    m, d = X.shape
    if d == 0:
        return np.zeros(m)
    T = np.broadcast_to(T, (m,))
    star = np.sort(np.abs(X), axis=1)[:, ::-1]
    prefix = np.zeros((m, d + 1))
    np.cumsum(star, axis=1, out=prefix[:, 1:])
    whole = np.minimum(np.floor(T), d).astype(int)
    frac = np.where(np.floor(T) < d, T - np.floor(T), 0.0)
    head = np.take_along_axis(prefix, whole[:, None], axis=1)[:, 0]
    nxt = np.take_along_axis(star, np.minimum(whole, d - 1)[:, None], axis=1)[:, 0]
    nxt = np.where(whole < d, nxt, 0.0)
    return head + frac * nxt


def _weighted_sup_batch(X, T, w0, w1) -> np.ndarray:
    """Exact K for (linf(w0), linf(w1)) by LP vertex enumeration, rowwise.

    Solves min{l0 + t*l1 : l0/w0_i + l1/w1_i >= |x_i|, l0, l1 >= 0}; weights
    may be shared (d,) or per-row (m, d).
    """
    X = np.atleast_2d(X)
    m, d = X.shape
    if d == 0:
        return np.zeros(m)
    T = np.broadcast_to(T, (m,))
    r = np.abs(X)
    W0 = np.broadcast_to(np.asarray(w0, dtype=float), (m, d))
    W1 = np.broadcast_to(np.asarray(w1, dtype=float), (m, d))

    # axis vertices
    v_axis0 = np.max(W0 * r, axis=1)           # (l0, 0)
    v_axis1 = T * np.max(W1 * r, axis=1)       # (0, l1)
    best = np.minimum(v_axis0, v_axis1)
    if d == 1:
        return best

    c = 1.0 / W0
    e = 1.0 / W1
    i_idx, j_idx = np.triu_indices(d, k=1)
    ci, cj = c[:, i_idx], c[:, j_idx]
    ei, ej = e[:, i_idx], e[:, j_idx]
    ri, rj = r[:, i_idx], r[:, j_idx]
    det = ci * ej - cj * ei
    with np.errstate(divide="ignore", invalid="ignore"):
        l0 = (ri * ej - rj * ei) / det
        l1 = (ci * rj - cj * ri) / det
    scale = np.max(r, axis=1, keepdims=True)
    tol = 1e-12 * np.maximum(scale, 1e-300)
    ok = np.isfinite(l0) & np.isfinite(l1) & (l0 >= -tol) & (l1 >= -tol)
    # feasibility against every constraint
    l0f = np.where(ok, l0, 0.0)
    l1f = np.where(ok, l1, 0.0)
    lhs = (l0f[:, :, None] * c[:, None, :] + l1f[:, :, None] * e[:, None, :])
    ok &= np.all(lhs >= r[:, None, :] - tol[:, :, None], axis=2)
    obj = np.where(ok, np.maximum(l0, 0.0) + T[:, None] * np.maximum(l1, 0.0),
                   np.inf)
    best_pair = np.min(obj, axis=1)
    return np.minimum(best, best_pair)


def _power_batch(X, T, p, w0, w1) -> np.ndarray:
    """Coordinatewise power functional K_p for a shared exponent, rowwise.

    Per coordinate, with u = w0_i and v = t*w1_i, the amplitude
    c_i = (inf_{a+b=x_i} (u|a|)^p + (v|b|)^p)^{1/p} is:
      p <= 1:  min(u, v) |x_i|            (endpoint optimum);
      p > 1:   |x_i| (u^-s + v^-s)^{-1/s}, s = p/(p-1)  (stationarity),
    and K_p is the lp sum of the amplitudes.
    """
    X = np.atleast_2d(X)
    m, d = X.shape
    if d == 0:
        return np.zeros(m)
    T = np.broadcast_to(T, (m,))
    absx = np.abs(X)
    u = np.broadcast_to(np.asarray(w0, dtype=float), (m, d))
    v = T[:, None] * np.broadcast_to(np.asarray(w1, dtype=float), (m, d))
    if p <= 1.0:
        amp = np.minimum(u, v) * absx
    else:
        s = p / (p - 1.0)
        # harmonic-type mean of the weights, evaluated in log space
        mean = np.exp(-np.logaddexp(-s * np.log(u), -s * np.log(v)) / s)
        amp = absx * mean
    return stable_lp_sum(amp, p)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def quasi_norm(x: FiniteVector, norm: WeightedNorm) -> float:
    """Evaluate the weighted lp quasi-norm of x on the norm's window."""
    return norm(x)


def k_exact_l1_linf(x: FiniteVector, t: float) -> float:
    """Exact K(x, t) for the unweighted couple (l1, linf)."""
    if not (t > 0):
        raise DomainError("t must be positive")
    return float(_l1_linf_batch(np.abs(x.entries)[None, :],
                                np.asarray([t]))[0])


def k_weighted_sup(x: FiniteVector, t: float, w0, w1) -> float:
    """Exact K(x, t) for (linf(w0), linf(w1)); weights aligned with x."""
    if not (t > 0):
        raise DomainError("t must be positive")
    w0 = np.asarray(w0, dtype=float)
    w1 = np.asarray(w1, dtype=float)
    if len(x) == 0:
        return 0.0
    if not (np.all(w0 > 0) and np.all(w1 > 0)):
        raise InvariantError("weights must be positive")
    if w0.shape != x.entries.shape or w1.shape != x.entries.shape:
        raise WindowError("weights must align with the vector window")
    return float(_weighted_sup_batch(x.entries[None, :], np.asarray([t]),
                                     w0, w1)[0])


def k_power_coordinatewise(x: FiniteVector, t: float, p, w0, w1) -> float:
    """Coordinatewise power functional K_p for (lp(w0), lp(w1)).

    Exact for p = 1; otherwise within [2^{-|1-1/p|}, 2^{|1-1/p|}] of the true
    K.  p = inf is rejected (use the weighted sup strategy).
    """
    if not (t > 0):
        raise DomainError("t must be positive")
    p = _parse_p(p)
    if math.isinf(p):
        raise DomainError("p = inf is not supported coordinatewise")
    w0 = np.asarray(w0, dtype=float)
    w1 = np.asarray(w1, dtype=float)
    if not (np.all(w0 > 0) and np.all(w1 > 0)):
        raise InvariantError("weights must be positive")
    if w0.shape != x.entries.shape or w1.shape != x.entries.shape:
        raise WindowError("weights must align with the vector window")
    return float(_power_batch(x.entries[None, :], np.asarray([t]),
                              p, w0, w1)[0])


def k_oracle(x: FiniteVector, t: float, couple: Couple,
             budget: int = 8, seed: int = 0) -> float:
    """Brute-force upper approximation of K(x, t) for any couple.

    Multi-start coordinate descent with per-coordinate golden-section plus
    clip-family line searches; deterministic for a fixed seed.  Guarded to
    window dimension <= 16.
    """
    if couple.dim > ORACLE_MAX_DIM:
        raise SizeError(f"oracle limited to dimension {ORACLE_MAX_DIM}")
    if not (t > 0):
        raise DomainError("t must be positive")
    if budget < 1:
        raise DomainError("budget must be >= 1")
    X = couple.embed(x)[None, :]
    val = decomposition_infimum(
        X, t, couple.norm0.dense, couple.norm1.dense, budget=budget,
        seed=seed, scale0=_amplitude_scale(couple.norm0),
        scale1=_amplitude_scale(couple.norm1))
    return float(val[0])


def k_profile(x: FiniteVector, couple: Couple, n_min: int, n_max: int) -> KProfile:
    """Evaluate the couple's strategy at t = 2^n for n in [n_min, n_max]."""
    if n_min > n_max:
        raise DomainError("need n_min <= n_max")
    dense = couple.embed(x)
    grid = np.arange(n_min, n_max + 1)
    X = np.broadcast_to(dense, (len(grid), len(dense)))
    values = couple.k_batch(X, 2.0 ** grid.astype(float))
    prof = KProfile(n_min, n_max, values)
    if couple.strategy != ORACLE:
        prof.validate(rel_tol=1e-9)
    return prof


def endpoint_norms(x: FiniteVector, couple: Couple) -> tuple[float, float]:
    """(sum norm, intersection norm) = (K(x, 1), max of the two norms)."""
    return couple.k(x, 1.0), max(couple.norm0(x), couple.norm1(x))


def k_sphere_sup(couple: Couple, t: float, samples: int, seed: int) -> float:
    """Max of K(x, t) over seeded directions normalized to K(x, 1) = 1.

    A lower bound for the sup over the whole sum-space sphere.  The sampled
    directions always include every basis spike e_k of the window, plus
    ``samples`` random directions (alternating dense Gaussian and sparse).
    Always <= max(1, t).
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if not (t > 0):
        raise DomainError("t must be positive")
    d = couple.dim
    rng = np.random.default_rng(seed)
    dirs = [np.eye(d)]
    rand = np.zeros((samples, d))
    for i in range(samples):
        if i % 2 == 0:
            rand[i] = rng.standard_normal(d)
        else:
            support = rng.choice(d, size=max(1, d // 4), replace=False)
            rand[i, support] = rng.standard_normal(len(support)) * (
                2.0 ** rng.integers(-4, 5))
    dirs.append(rand)
    X = np.vstack(dirs)
    k_one = couple.k_batch(X, 1.0)
    keep = k_one > 1e-300
    if not np.any(keep):
        return 0.0
    k_t = couple.k_batch(X[keep], t)
    return float(np.max(k_t / k_one[keep]))


# ---------------------------------------------------------------------------
# couple factories
# ---------------------------------------------------------------------------

def l1_linf_couple(dim: int, offset: int = 0) -> Couple:
    """The unweighted (l1, linf) couple on ``dim`` coordinates."""
    ones = np.ones(dim)
    return Couple(WeightedNorm(1.0, offset, ones),
                  WeightedNorm(math.inf, offset, ones), EXACT_L1_LINF)


def weighted_sup_couple(w0, w1, offset: int = 0) -> Couple:
    """The couple (linf(w0), linf(w1)) with its exact LP strategy."""
    return Couple(WeightedNorm(math.inf, offset, w0),
                  WeightedNorm(math.inf, offset, w1), WEIGHTED_SUP_LP)


def power_couple(p, w0, w1, offset: int = 0) -> Couple:
    """The couple (lp(w0), lp(w1)) with the coordinatewise power strategy."""
    p = _parse_p(p)
    r = min(p, 1.0)
    band = 2.0 ** (1.0 / r) if p != 1.0 else 1.0
    return Couple(WeightedNorm(p, offset, w0), WeightedNorm(p, offset, w1),
                  POWER_COORDINATEWISE, equiv_lo=1.0 / band, equiv_hi=band)
