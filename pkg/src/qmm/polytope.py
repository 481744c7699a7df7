"""Volumes of diagonal subpolytopes of symmetric stochastic matrices.

Exact formulas for N=3 (point polytope) and N=4 (piecewise quadratic),
two Monte-Carlo oracles (hit-and-miss over the free off-diagonal block,
and a row-peeling simplex sampler that stays usable at N ~ 9), and the
asymptotic product formula with its applicability diagnostic.

Conventions: h_j are the diagonal entries, u_j = 1 - h_j the off-diagonal
row sums, s_{i..} = (sum u)/2 - u_i - ...  Volumes are Lebesgue measure in
the free coordinates {u_kl : 2 <= k < l, l != 3}, the normalisation under
which the lattice counts converge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numkit import LogValue

_MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class DiagonalSpec:
    """Diagonal h of a symmetric stochastic matrix; defines the subpolytope."""

    n: int
    h: tuple[float, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if len(self.h) != self.n:
            raise ValueError("need one diagonal entry per row")
        if any(not 0.0 <= hj <= 1.0 for hj in self.h):
            raise ValueError("diagonal entries must lie in [0, 1]")
        object.__setattr__(self, "h", tuple(float(hj) for hj in self.h))

    @property
    def chi(self) -> float:
        return sum(self.h)

    @property
    def u(self) -> tuple[float, ...]:
        return tuple(1.0 - hj for hj in self.h)

    @property
    def dimension(self) -> int:
        return self.n * (self.n - 3) // 2


def polytope_basis(n: int) -> list[np.ndarray]:
    """Identity plus the binom(n,2) transposition vertices B^(jk)."""
    basis = [np.eye(n)]
    for j in range(n):
        for k in range(j + 1, n):
            b = np.eye(n)
            b[j, j] = b[k, k] = 0.0
            b[j, k] = b[k, j] = 1.0
            basis.append(b)
    return basis


def _s_single(u) -> list[float]:
    half = sum(u) / 2.0
    return [half - uj for uj in u]


def exact_volume_n3(spec: DiagonalSpec) -> float:
    """Indicator of the point polytope at N=3: 1 iff all s_j >= 0."""
    if spec.n != 3:
        raise ValueError("exact_volume_n3 requires n = 3")
    return 1.0 if all(s >= 0.0 for s in _s_single(spec.u)) else 0.0


def exact_volume_n4(spec: DiagonalSpec) -> float:
    """Piecewise-quadratic exact volume at N=4.

    The sign triple of (s_12, s_13, s_14) selects one branch
    (boundaries go with the >= 0 branch; adjacent branches agree there, so
    the function is continuous).  Empty polytope (some s_j < 0) gives 0.
    """
    if spec.n != 4:
        raise ValueError("exact_volume_n4 requires n = 4")
    return _exact_volume_n4_rowsum(spec.u)


def _exact_volume_n4_rowsum(u) -> float:
    u = tuple(float(x) for x in u)
    if any(s < 0.0 for s in _s_single(u)):
        return 0.0
    half = sum(u) / 2.0
    s12 = half - u[0] - u[1]
    s13 = half - u[0] - u[2]
    s14 = half - u[0] - u[3]
    s1, s2, s3, s4 = _s_single(u)
    branch = {
        (True, True, True): u[0],
        (False, False, False): s1,
        (True, False, False): u[1],
        (False, True, True): s2,
        (False, True, False): u[2],
        (True, False, True): s3,
        (False, False, True): u[3],
        (True, True, False): s4,
    }
    side = branch[(s12 >= 0.0, s13 >= 0.0, s14 >= 0.0)]
    return 0.5 * side * side


# ---------------------------------------------------------------------------
# Monte-Carlo oracles


def _free_pairs(n: int) -> list[tuple[int, int]]:
    # 1-based pairs; the dependent entries are u_1k (k>=4), u_12, u_13, u_23
    return [(k, l) for k in range(2, n + 1) for l in range(k + 1, n + 1) if l != 3]


def mc_volume(
    spec: DiagonalSpec, samples: int, seed: int
) -> tuple[float, float]:
    """Hit-and-miss estimate over the free off-diagonal block.

    Free u_kl sampled uniformly in [0, min(u_k, u_l)]; the dependent
    entries are solved from the row sums and a sample counts when all of
    them are non-negative.  Returns (box volume * hit fraction, binomial
    standard error).  Deterministic per seed and independent of chunking.
    """
    if spec.n < 4:
        raise ValueError("mc_volume requires n >= 4")
    if samples < 1000:
        raise ValueError("need at least 1e3 samples")
    n = spec.n
    u = np.asarray(spec.u)
    pairs = _free_pairs(n)
    box = np.array([min(u[k - 1], u[l - 1]) for k, l in pairs])
    box_vol = float(np.prod(box))
    if box_vol == 0.0:
        return 0.0, 0.0

    total = sum(u)
    s12 = total / 2.0 - u[0] - u[1]
    s13 = total / 2.0 - u[0] - u[2]
    s1 = total / 2.0 - u[0]
    idx_k_ge3 = [i for i, (k, l) in enumerate(pairs) if k >= 3]
    idx_13 = [i for i, (k, l) in enumerate(pairs) if (k == 2 and l >= 4) or k >= 4]
    cols_1k = {
        k: [i for i, (a, b) in enumerate(pairs) if a == k or b == k]
        for k in range(4, n + 1)
    }

    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < samples:
        m = min(_MC_CHUNK, samples - done)
        done += m
        x = rng.random((m, len(pairs))) * box
        ok = np.ones(m, dtype=bool)
        for k in range(4, n + 1):
            ok &= u[k - 1] - x[:, cols_1k[k]].sum(axis=1) >= 0.0
        ok &= x[:, idx_k_ge3].sum(axis=1) - s12 >= 0.0
        ok &= x[:, idx_13].sum(axis=1) - s13 >= 0.0
        ok &= s1 - x.sum(axis=1) >= 0.0
        hits += int(ok.sum())

    p = hits / samples
    est = box_vol * p
    se = box_vol * math.sqrt(max(p * (1.0 - p), 0.0) / samples)
    return est, se


def mc_volume_peel(
    spec: DiagonalSpec, samples: int, seed: int
) -> tuple[float, float]:
    """Row-peeling simplex Monte Carlo, the oracle that scales to N ~ 9.

    Peels one row at a time: the peeled row's entries are drawn uniformly
    from the simplex {gamma >= 0, sum gamma = u_row} (Lebesgue weight
    u_row^(m-1)/(m-1)! on the free coordinates), residuals shrink, and the
    recursion bottoms out at the exact N=4 volume.  Unbiased; hit-and-miss
    at N=4,5 reproduces it within statistical error.
    """
    if spec.n < 5:
        raise ValueError("mc_volume_peel requires n >= 5 (use exact formulas below)")
    if samples < 1000:
        raise ValueError("need at least 1e3 samples")
    n = spec.n
    u0 = np.asarray(spec.u)
    if np.any(u0 <= 0.0):
        # a unit diagonal entry pins its row: measure zero in full dimension
        return 0.0, 0.0
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        batch = min(_MC_CHUNK, samples - done)
        done += batch
        u = np.tile(u0, (batch, 1))
        w = np.ones(batch)
        for k in range(n, 4, -1):
            m = k - 1
            s = u[:, k - 1]
            # uniform point of the simplex {g >= 0, sum g = s}
            g = rng.gamma(1.0, 1.0, (batch, m))
            g *= (s / g.sum(axis=1))[:, None]
            w *= np.where(
                (g <= u[:, :m]).all(axis=1),
                s ** (m - 1) / math.factorial(m - 1),
                0.0,
            )
            u[:, :m] -= g
        v4 = np.array(
            [
                _exact_volume_n4_rowsum(row) if wi > 0.0 else 0.0
                for row, wi in zip(u[:, :4], w)
            ]
        )
        w *= v4
        total += float(w.sum())
        total_sq += float((w * w).sum())
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    return mean, math.sqrt(var / samples)


# ---------------------------------------------------------------------------
# asymptotic volume


def asymptotic_volume_rowsum(u) -> LogValue:
    """Asymptotic volume in row-sum variables u_j = 1 - h_j (log space).

    Homogeneous of degree N(N-3)/2: V(M u) = M^(N(N-3)/2) V(u).
    """
    u = [float(x) for x in u]
    n = len(u)
    big_s = sum(u)
    if big_s <= 0:
        raise ValueError("degenerate all-identity corner: sum u must be positive")
    c = [uj - big_s / n for uj in u]
    m2 = sum(x**2 for x in c)
    m3 = sum(x**3 for x in c)
    m4 = sum(x**4 for x in c)
    nm1 = n - 1.0
    ln = 0.5 * math.log(2.0) + 7.0 / 6.0
    ln += (n * (n - 1) // 2) * math.log(math.e * big_s / (n * nm1))
    ln += (n / 2.0) * math.log(n * nm1**2 / (2.0 * math.pi * big_s**2))
    ln += -(nm1**2 * (n + 2.0)) / (2.0 * big_s**2) * m2
    ln += (n * nm1**3) / (3.0 * big_s**3) * m3
    ln += -(n * nm1**4) / (4.0 * big_s**4) * m4
    ln += nm1**4 / (4.0 * big_s**4) * m2**2
    return LogValue.from_log(ln)


def asymptotic_volume(spec: DiagonalSpec) -> LogValue:
    """Asymptotic volume of the diagonal subpolytope, log space."""
    if spec.chi >= spec.n:
        raise ValueError("degenerate all-identity corner: chi must be < n")
    return asymptotic_volume_rowsum(spec.u)


def applicability_margin(spec: DiagonalSpec) -> float:
    """max_j N^(1/4) (N-1)/(N-chi) |h_j - chi/N|; small means trustworthy."""
    n = spec.n
    chi = spec.chi
    mean = chi / n
    return max(
        n**0.25 * (n - 1.0) / (n - chi) * abs(hj - mean) for hj in spec.h
    )
