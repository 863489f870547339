"""Complex special functions used throughout the package.

Everything here is hand-rolled on top of numpy so that accuracy and branch
behaviour are under our control:

* ``log_gamma`` / ``digamma``: Stirling's asymptotic series after shifting the
  argument to Re(s) >= 10.  The shift accumulates principal-branch logs, which
  keeps log-gamma continuous on the plane cut along the negative real axis.
* ``riemann_zeta`` / ``hurwitz_zeta``: Euler-Maclaurin continuation with up to
  twelve Bernoulli correction terms and a truncation point that grows with
  |s|.  Valid comfortably for Re(s) > -2 and |Im(s)| up to 1e4 (accuracy
  degrades slowly past |Im(s)| ~ 1e3; see module tests for measured errors).
* ``elliptic_k`` via the AGM, ``jacobi_sn`` and its inverse via a descending
  Landen chain run on the complementary modulus so that aspect ratios as
  extreme as 1:1000 stay representable.

All functions are pure and accept numpy arrays elementwise where that is
useful (the zero-scanning code batches entire t-grids through them).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EvalOptions",
    "PoleError",
    "DomainError",
    "log_gamma",
    "digamma",
    "riemann_zeta",
    "hurwitz_zeta",
    "von_mangoldt",
    "mangoldt_sieve",
    "elliptic_k",
    "solve_modulus_from_ratio",
    "jacobi_sn",
    "inverse_sn",
]


class PoleError(ZeroDivisionError):
    """Evaluation requested exactly at a pole."""


class DomainError(ValueError):
    """Argument outside the supported domain."""


@dataclass(frozen=True)
class EvalOptions:
    """Tuning knobs for the series-based evaluators.

    ``euler_maclaurin_order`` counts Bernoulli correction terms (B_2 .. B_2k)
    and is capped at 12; ``series_cutoff`` is a floor for the truncation point.
    """

    target_abs_tol: float = 1e-12
    series_cutoff: int = 25
    euler_maclaurin_order: int = 12

    def __post_init__(self) -> None:
        if not self.target_abs_tol > 0:
            raise DomainError("target_abs_tol must be positive")
        if self.series_cutoff < 1:
            raise DomainError("series_cutoff must be a positive integer")
        if not 1 <= self.euler_maclaurin_order <= 12:
            raise DomainError("euler_maclaurin_order must be in [1, 12]")


DEFAULT_OPTIONS = EvalOptions()

# B_2, B_4, ..., B_24 as exact rationals rounded to double.
_BERNOULLI = np.array(
    [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
    ]
)

# Stirling coefficients B_2k / (2k (2k-1)) for the log-gamma tail.
_STIRLING = np.array(
    [_BERNOULLI[k - 1] / (2 * k * (2 * k - 1)) for k in range(1, 13)]
)

_LOG_2PI = math.log(2.0 * math.pi)

# Shift target for the Stirling series.  Re(s) >= 10 keeps |arg s| < pi/2 and
# makes the 12-term tail smaller than 1e-15 in absolute value.
_STIRLING_RE = 10.0


def _as_complex_array(s) -> tuple[np.ndarray, bool]:
    arr = np.asarray(s, dtype=np.complex128)
    return arr, arr.ndim == 0


def log_gamma(s):
    """Principal branch of log Gamma(s), continuous off (-inf, 0].

    Accepts scalars or arrays.  Raises :class:`PoleError` if any entry is a
    non-positive integer.
    """
    z, scalar = _as_complex_array(s)
    z = np.atleast_1d(z).copy()
    on_real_axis = z.imag == 0.0
    nonpos_int = on_real_axis & (z.real <= 0.0) & (z.real == np.floor(z.real))
    if np.any(nonpos_int):
        raise PoleError("log_gamma pole at non-positive integer")

    # Shift every entry up to Re >= _STIRLING_RE, accumulating principal logs.
    shift = np.maximum(0, np.ceil(_STIRLING_RE - z.real).astype(int))
    acc = np.zeros_like(z)
    max_shift = int(shift.max()) if shift.size else 0
    for k in range(max_shift):
        mask = shift > k
        acc[mask] += np.log(z[mask] + k)
    zs = z + shift

    w = 1.0 / zs
    w2 = w * w
    tail = np.zeros_like(z)
    # Horner evaluation of sum_k c_k w^{2k-1}.
    for c in _STIRLING[::-1]:
        tail = (tail + c) * w2
    tail /= w  # now sum c_k w^{2k-1}
    out = (zs - 0.5) * np.log(zs) - zs + 0.5 * _LOG_2PI + tail - acc
    return complex(out[0]) if scalar else out.reshape(np.shape(s))


def digamma(s):
    """psi(s) = Gamma'(s)/Gamma(s), principal values, scalar or array."""
    z, scalar = _as_complex_array(s)
    z = np.atleast_1d(z).copy()
    on_real_axis = z.imag == 0.0
    nonpos_int = on_real_axis & (z.real <= 0.0) & (z.real == np.floor(z.real))
    if np.any(nonpos_int):
        raise PoleError("digamma pole at non-positive integer")

    shift = np.maximum(0, np.ceil(_STIRLING_RE - z.real).astype(int))
    acc = np.zeros_like(z)
    max_shift = int(shift.max()) if shift.size else 0
    for k in range(max_shift):
        mask = shift > k
        acc[mask] += 1.0 / (z[mask] + k)
    zs = z + shift

    w = 1.0 / zs
    w2 = w * w
    tail = np.zeros_like(z)
    for k in range(12, 0, -1):
        tail = (tail + _BERNOULLI[k - 1] / (2 * k)) * w2
    out = np.log(zs) - 0.5 * w - tail - acc
    return complex(out[0]) if scalar else out.reshape(np.shape(s))


def _em_truncation(s_arr: np.ndarray, opts: EvalOptions) -> int:
    # N ~ |s| + 12 keeps the order-12 Bernoulli remainder far below 1e-13
    # throughout the strip; the floor comes from the options
    smax = float(np.max(np.abs(s_arr))) if s_arr.size else 0.0
    return max(opts.series_cutoff, int(math.ceil(smax)) + 12)


def _zeta_em(s: np.ndarray, n_trunc: int, order: int, a: float = 1.0,
             deriv: bool = False):
    """Euler-Maclaurin evaluation of sum_{n>=0} (n+a)^(-s).

    ``a = 1`` gives the Riemann zeta function.  Returns (value, derivative)
    when ``deriv`` is set, values only otherwise.  ``s`` is a 1-d complex
    array; the pole s = 1 must be excluded by the caller.
    """
    n = np.arange(n_trunc, dtype=np.float64) + a      # a, a+1, ..., a+N-1
    logn = np.log(n)
    # main sum: terms (N_points, n_trunc)
    powers = np.exp(np.multiply.outer(-s, logn))
    val = powers.sum(axis=1)
    if deriv:
        dval = -(powers * logn).sum(axis=1)

    big = float(n_trunc) + a
    logbig = math.log(big)
    big_ms = np.exp(-s * logbig)                       # big^(-s)
    sm1 = s - 1.0

    val = val + big_ms * big / sm1 + 0.5 * big_ms
    if deriv:
        dval = dval + big_ms * big * (-logbig / sm1 - 1.0 / (sm1 * sm1))
        dval = dval - 0.5 * logbig * big_ms

    # Bernoulli corrections: B_2k/(2k)! * (s)_(2k-1) * big^(-s-2k+1)
    poch = s.copy()            # (s)_1
    fact = 2.0                 # (2k)! running
    recip_big = 1.0 / big
    power = big_ms * recip_big  # big^(-s-1) after first multiply below
    if deriv:
        dpoch = np.ones_like(s)  # d/ds (s)_(2k-1)
    scale = big_ms * big * recip_big * recip_big  # big^(-s-1)
    for k in range(1, order + 1):
        coeff = _BERNOULLI[k - 1] / fact
        term_pow = scale  # big^(-s-2k+1)
        val = val + coeff * poch * term_pow
        if deriv:
            dval = dval + coeff * term_pow * (dpoch - logbig * poch)
        # advance (s)_(2k-1) -> (s)_(2k+1) and factorial (2k)! -> (2k+2)!
        if k < order:
            if deriv:
                dpoch = dpoch * (s + 2 * k - 1) * (s + 2 * k) + \
                    poch * (2 * s + 4 * k - 1)
            poch = poch * (s + 2 * k - 1) * (s + 2 * k)
            fact *= (2 * k + 1) * (2 * k + 2)
            scale = scale * recip_big * recip_big
    if deriv:
        return val, dval
    return val


def riemann_zeta(s, opts: EvalOptions | None = None):
    """zeta(s) by Euler-Maclaurin continuation; scalar or array.

    Supported region: Re(s) > -2, |Im(s)| <= 1e4, s != 1.
    """
    opts = opts or DEFAULT_OPTIONS
    z, scalar = _as_complex_array(s)
    flat = np.atleast_1d(z).ravel()
    if np.any(flat == 1.0):
        raise PoleError("zeta pole at s = 1")
    out = _zeta_em(flat, _em_truncation(flat, opts), opts.euler_maclaurin_order)
    return complex(out[0]) if scalar else out.reshape(np.shape(s))


def zeta_deriv(s, opts: EvalOptions | None = None):
    """zeta'(s) by term-wise differentiated Euler-Maclaurin."""
    opts = opts or DEFAULT_OPTIONS
    z, scalar = _as_complex_array(s)
    flat = np.atleast_1d(z).ravel()
    if np.any(flat == 1.0):
        raise PoleError("zeta pole at s = 1")
    _, dv = _zeta_em(flat, _em_truncation(flat, opts),
                     opts.euler_maclaurin_order, deriv=True)
    return complex(dv[0]) if scalar else dv.reshape(np.shape(s))


def hurwitz_zeta(s, a: float, opts: EvalOptions | None = None):
    """Hurwitz zeta(s, a) for 0 < a <= 1, Re(s) > -2, s != 1."""
    opts = opts or DEFAULT_OPTIONS
    if not 0.0 < a <= 1.0:
        raise DomainError("hurwitz_zeta requires a in (0, 1]")
    z, scalar = _as_complex_array(s)
    flat = np.atleast_1d(z).ravel()
    if np.any(flat == 1.0):
        raise PoleError("hurwitz zeta pole at s = 1")
    out = _zeta_em(flat, _em_truncation(flat, opts),
                   opts.euler_maclaurin_order, a=a)
    return complex(out[0]) if scalar else out.reshape(np.shape(s))


def hurwitz_bank(s: complex, q: int, opts: EvalOptions | None = None) -> np.ndarray:
    """zeta(s, a/q) for a = 1..q simultaneously, sharing one power table.

    The main sums over (n + a/q) for all residues a are just the integers
    1..q*N in disguise, so a single vectorised power table serves every a.
    Workhorse behind Dirichlet L evaluation.
    """
    opts = opts or DEFAULT_OPTIONS
    if s == 1.0:
        raise PoleError("hurwitz zeta pole at s = 1")
    sc = complex(s)
    n_trunc = _em_truncation(np.array([sc]), opts)
    k = np.arange(1, q * n_trunc + 1, dtype=np.float64)
    main = np.exp(-sc * np.log(k)) * np.exp(sc * math.log(q))
    main = main.reshape(n_trunc, q).sum(axis=0)        # index a-1

    order = opts.euler_maclaurin_order
    a_over_q = np.arange(1, q + 1, dtype=np.float64) / q
    big = n_trunc + a_over_q
    logbig = np.log(big)
    big_ms = np.exp(-sc * logbig)
    tail = big_ms * big / (sc - 1.0) + 0.5 * big_ms
    poch = sc
    fact = 2.0
    scale = big_ms / big
    for kk in range(1, order + 1):
        tail = tail + (_BERNOULLI[kk - 1] / fact) * poch * scale
        if kk < order:
            poch = poch * (sc + 2 * kk - 1) * (sc + 2 * kk)
            fact *= (2 * kk + 1) * (2 * kk + 2)
            scale = scale / (big * big)
    return main + tail


# ---------------------------------------------------------------------------
# von Mangoldt function


_spf_cache: dict[int, np.ndarray] = {}


def _smallest_prime_factors(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (sieve, cached)."""
    for size in _spf_cache:
        if size >= limit:
            return _spf_cache[size]
    size = max(limit, 1 << 16)
    spf = np.zeros(size + 1, dtype=np.int64)
    spf[1] = 1
    for p in range(2, int(size ** 0.5) + 1):
        if spf[p] == 0:
            sl = slice(p * p, size + 1, p)
            block = spf[sl]
            block[block == 0] = p
            spf[sl] = block
    spf[spf == 0] = np.arange(size + 1)[spf == 0]
    _spf_cache.clear()
    _spf_cache[size] = spf
    return spf


def von_mangoldt(n: int) -> float:
    """Lambda(n): log p if n is a prime power p^k, else 0."""
    if n < 1 or n != int(n):
        raise DomainError("von_mangoldt requires a positive integer")
    n = int(n)
    if n == 1:
        return 0.0
    if n <= 1 << 24:
        spf = _smallest_prime_factors(n)
        p = int(spf[n])
    else:  # trial division fallback
        p = n
        d = 2
        while d * d <= n:
            if n % d == 0:
                p = d
                break
            d += 1
    m = n
    while m % p == 0:
        m //= p
    return math.log(p) if m == 1 else 0.0


def mangoldt_sieve(limit: int) -> np.ndarray:
    """Array L with L[n] = Lambda(n) for 0 <= n <= limit."""
    spf = _smallest_prime_factors(limit)[: limit + 1]
    lam = np.zeros(limit + 1)
    n = np.arange(limit + 1)
    # n is a prime power iff dividing out spf repeatedly leaves 1
    for i in range(2, limit + 1):
        p = int(spf[i])
        m = i
        while m % p == 0:
            m //= p
        if m == 1:
            lam[i] = math.log(p)
    return lam


def primes_up_to(limit: int) -> np.ndarray:
    spf = _smallest_prime_factors(limit)[: limit + 1]
    n = np.arange(limit + 1)
    return n[(n >= 2) & (spf == n)]


# ---------------------------------------------------------------------------
# Elliptic integrals and Jacobi sn


def _agm(a: float, b: float) -> float:
    for _ in range(64):
        if abs(a - b) <= 4e-16 * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(k: float) -> float:
    """Complete elliptic integral K(k), modulus convention, via the AGM."""
    if not 0.0 <= k < 1.0:
        raise DomainError("elliptic_k requires 0 <= k < 1")
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - k) * (1.0 + k))))


def _elliptic_k_from_comp(kp: float) -> float:
    """K(k) computed from the complementary modulus k' (stable for k -> 1)."""
    if kp <= 0.0:
        raise DomainError("complementary modulus must be positive")
    return math.pi / (2.0 * _agm(1.0, kp))


def solve_modulus_from_ratio(ratio: float, tol: float = 1e-12) -> float:
    """Solve K(k')/K(k) = ratio for the complementary modulus k'.

    The ratio is monotone in k, so bisection on log(k') always converges.
    Returns k'; the modulus itself is sqrt(1 - k'^2) (which may round to 1.0
    for extreme aspect ratios, hence returning the complement).
    """
    if ratio <= 0.0:
        raise DomainError("period ratio must be positive")

    def f(log_kp: float) -> float:
        kp = math.exp(log_kp)
        k = math.sqrt(max(0.0, (1.0 - kp) * (1.0 + kp)))
        # K(k) = pi/(2 agm(1, kp)) and K'(k) = K(kp) = pi/(2 agm(1, k))
        return _elliptic_k_from_comp(k) / _elliptic_k_from_comp(kp) - ratio

    lo, hi = math.log(1e-300), math.log(1.0 - 1e-16)
    flo = f(lo)
    fhi = f(hi)
    if flo > 0.0 or fhi < 0.0:  # ratio out of representable range
        raise DomainError("period ratio outside representable range")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol * 1e-2:
            break
    return math.exp(0.5 * (lo + hi))


def _landen_chain_comp(kp: float) -> list[float]:
    """Descending-Landen moduli [k_1, k_2, ...] down to k_n < 1e-15.

    Driven by the complementary modulus (k'_{n+1} = 2 sqrt(k'_n)/(1+k'_n)),
    so moduli whose distance to 1 underflows doubles are still handled; the
    stored k_n may round to 1.0 at the top of such a chain, costing only a
    relative error on the order of that underflow.
    """
    if kp <= 0.0 or kp > 1.0:
        raise DomainError("complementary modulus must lie in (0, 1]")
    chain = []
    for _ in range(64):
        k_next = (1.0 - kp) / (1.0 + kp)
        if k_next < 1e-15:
            break
        chain.append(k_next)
        kp = 2.0 * math.sqrt(kp) / (1.0 + kp)   # complement of k_next
    return chain


def _comp_modulus(k: float) -> float:
    if not 0.0 <= k < 1.0:
        raise DomainError("jacobi modulus must satisfy 0 <= k < 1")
    return math.sqrt((1.0 - k) * (1.0 + k))


def _sn_from_chain(z, chain: list[float]):
    factor = 1.0
    for kn in chain:
        factor *= 1.0 + kn
    z_arr, scalar = _as_complex_array(z)
    s = np.sin(z_arr / factor)
    for kn in chain[::-1]:
        s = (1.0 + kn) * s / (1.0 + kn * s * s)
    return complex(s) if scalar else s


def jacobi_sn(z, k: float):
    """Jacobi sn(z, k) for complex z via the descending Landen chain.

    Intended for z within a couple of fundamental periods of the origin;
    accuracy target 1e-10 there.
    """
    return _sn_from_chain(z, _landen_chain_comp(_comp_modulus(k)))


def _jacobi_sn_comp(z, kp: float):
    """sn with the modulus given through its complement (stable for k ~ 1)."""
    return _sn_from_chain(z, _landen_chain_comp(kp))


def _inverse_sn_from_chain(u, chain: list[float]):
    u_arr, scalar = _as_complex_array(u)
    s = np.asarray(u_arr, dtype=np.complex128).copy()
    factor = 1.0
    for kn in chain:
        factor *= 1.0 + kn
        disc = np.sqrt((1.0 + kn) * (1.0 + kn) - 4.0 * kn * s * s)
        # rationalised root: no cancellation for small kn or small s
        s = 2.0 * s / ((1.0 + kn) + disc)
    z = np.arcsin(s) * factor
    return complex(z) if scalar else z


def inverse_sn(u, k: float):
    """Inverse of sn: the z in the fundamental rectangle with sn(z, k) = u.

    Inverts each Landen step by its quadratic and finishes with a principal
    arcsin, which lands in (-K, K) x (-K', K').
    """
    return _inverse_sn_from_chain(u, _landen_chain_comp(_comp_modulus(k)))


def _inverse_sn_comp(u, kp: float):
    return _inverse_sn_from_chain(u, _landen_chain_comp(kp))
