"""The concrete L-function model: data, families, evaluation, conductor.

An :class:`LFunctionSpec` carries the arithmetic data (degree m, conductor N,
spectral parameters mu_j, Ramanujan exponent theta, pole order r at s = 1,
root number kappa) together with a family tag that selects the evaluation
strategy.  Three families are built in, and each admits unconditional
evaluation in the critical strip:

* Riemann zeta          (m=1, N=1, mu=[0], r=1)
* primitive Dirichlet L (m=1, N=q, mu=[parity], r=0), via the Hurwitz
  decomposition L(s, chi) = q^(-s) sum_a chi(a) zeta(s, a/q)
* quadratic Dedekind zeta (m=2, N=|D|, r=1), evaluated as zeta(s) L(s, chi_D)

The completed function xi(s) = L(s) N^(s/2) prod_j Gamma_R(s + mu_j) with
Gamma_R(s) = pi^(-s/2) Gamma(s/2) satisfies xi(s) = kappa conj(xi(1-conj(s)))
with |kappa| = 1; ``functional_equation_residual`` measures how well the
numerics honour that identity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import specfun
from .characters import (
    DirichletCharacter,
    quadratic_character,
    is_fundamental_discriminant,
)
from .specfun import DomainError, EvalOptions, PoleError, log_gamma

__all__ = [
    "LFunctionSpec",
    "make_zeta",
    "make_dirichlet",
    "make_dedekind_quadratic",
    "evaluate",
    "completed",
    "log_archimedean",
    "analytic_conductor",
    "lambda_coeff",
    "functional_equation_residual",
    "euler_product",
    "order_at_zero",
]

Family = Literal["zeta", "dirichlet", "dedekind"]


@dataclass(frozen=True)
class LFunctionSpec:
    """Arithmetic data of one L-function from the supported class."""

    family: Family
    degree: int
    conductor: int
    mu: tuple[complex, ...]
    theta: float
    pole_order: int
    root_number: complex
    character: DirichletCharacter | None = None
    discriminant: int | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError("degree must be a positive integer")
        if self.conductor < 1:
            raise DomainError("conductor must be a positive integer")
        if len(self.mu) != self.degree:
            raise DomainError("need exactly one mu per gamma factor")
        mus = sorted(self.mu, key=lambda z: (z.real, z.imag))
        conj = sorted((z.conjugate() for z in self.mu),
                      key=lambda z: (z.real, z.imag))
        if any(abs(a - b) > 1e-12 for a, b in zip(mus, conj)):
            raise DomainError("mu multiset must be closed under conjugation")
        if any(m.real <= -1.0 for m in self.mu):
            raise DomainError("every mu must have real part > -1")
        if not 0 <= self.pole_order <= self.degree:
            raise DomainError("pole order must lie in [0, degree]")
        if abs(abs(self.root_number) - 1.0) > 1e-12:
            raise DomainError("root number must be unimodular")
        if not 0.0 <= self.theta <= 1.0:
            raise DomainError("theta must lie in [0, 1]")

    # JSON record used by the CLI and sweep reports.
    def to_record(self) -> dict:
        rec = {
            "family": self.family,
            "m": self.degree,
            "N": self.conductor,
            "mu": [[m.real, m.imag] for m in self.mu],
            "theta": self.theta,
            "r": self.pole_order,
            "kappa": [self.root_number.real, self.root_number.imag],
        }
        if self.family == "dirichlet":
            rec["q"] = self.character.modulus
            rec["chi_exponents"] = list(self.character.exponents)
        if self.family == "dedekind":
            rec["D"] = self.discriminant
        return rec

    def label(self) -> str:
        if self.family == "zeta":
            return "zeta"
        if self.family == "dirichlet":
            return f"chi_q{self.character.modulus}_" + \
                "_".join(str(c) for c in self.character.exponents)
        return f"dedekind_D{self.discriminant}"


def make_zeta() -> LFunctionSpec:
    """The Riemann zeta function."""
    return LFunctionSpec(
        family="zeta", degree=1, conductor=1, mu=(0.0 + 0.0j,),
        theta=0.0, pole_order=1, root_number=1.0 + 0.0j,
    )


def make_dirichlet(chi: DirichletCharacter) -> LFunctionSpec:
    """L(s, chi) for a primitive character chi mod q >= 3."""
    if chi.modulus < 3:
        raise DomainError("need modulus q >= 3")
    if not chi.is_primitive():
        raise DomainError("character must be primitive")
    parity = chi.parity
    return LFunctionSpec(
        family="dirichlet", degree=1, conductor=chi.modulus,
        mu=(complex(parity),), theta=0.0, pole_order=0,
        root_number=chi.root_number(), character=chi,
    )


def make_dedekind_quadratic(D: int) -> LFunctionSpec:
    """Dedekind zeta of the quadratic field of fundamental discriminant D,
    evaluated as zeta(s) * L(s, chi_D)."""
    if not is_fundamental_discriminant(D) or abs(D) < 3:
        raise DomainError(f"{D} is not a usable fundamental discriminant")
    chi = quadratic_character(D)
    mu = (0.0 + 0.0j, 0.0 + 0.0j) if D > 0 else (0.0 + 0.0j, 1.0 + 0.0j)
    kappa = chi.root_number()  # +1 for real primitive characters
    return LFunctionSpec(
        family="dedekind", degree=2, conductor=abs(D), mu=mu,
        theta=0.0, pole_order=1, root_number=kappa,
        character=chi, discriminant=D,
    )


# ---------------------------------------------------------------------------
# Evaluation
#
# Dirichlet L is evaluated through the Hurwitz decomposition, but with all q
# residue classes merged into a single integer power table: the main sums over
# (n + a/q)^(-s) for a = 1..q are the integers 1..qN in disguise, and the
# Euler-Maclaurin tail for residue a only needs powers of qN + a.  One table of
# k^(-s) for k = 1..qN+q therefore serves the whole family mod q, so grids and
# sweeps over many characters of the same modulus reuse one matrix of
# exponentials (cached below keyed on the digest of the s-batch).

_logk_cache: dict[tuple[int, int], np.ndarray] = {}
_power_cache: dict[tuple, np.ndarray] = {}
_POWER_CACHE_MAX = 16
_POWER_CACHE_MIN_BATCH = 16  # scalar lookups would thrash the FIFO


def _logk(q: int, n_trunc: int) -> np.ndarray:
    key = (q, n_trunc)
    if key not in _logk_cache:
        if len(_logk_cache) > 64:
            _logk_cache.clear()
        _logk_cache[key] = np.log(
            np.arange(1, q * n_trunc + q + 1, dtype=np.float64))
    return _logk_cache[key]


def _power_table(q: int, n_trunc: int, s_flat: np.ndarray) -> np.ndarray:
    """exp(-outer(s, log k)) for k = 1..qN+q, cached on the s-batch digest.

    Grids and contours are evaluated on identical point batches for every
    character of the same modulus, so the digest-keyed cache turns the
    expensive exponential table into a per-modulus cost.  Small batches
    (root refinement probes) are not cached.
    """
    import hashlib

    if s_flat.size < _POWER_CACHE_MIN_BATCH:
        return np.exp(np.multiply.outer(-s_flat, _logk(q, n_trunc)))
    key = (q, n_trunc, hashlib.blake2b(s_flat.tobytes(), digest_size=16).digest())
    hit = _power_cache.get(key)
    if hit is not None:
        return hit
    table = np.exp(np.multiply.outer(-s_flat, _logk(q, n_trunc)))
    if table.nbytes <= 64 << 20:
        if len(_power_cache) >= _POWER_CACHE_MAX:
            _power_cache.pop(next(iter(_power_cache)))
        _power_cache[key] = table
    return table


def _dirichlet_batch(chi: DirichletCharacter, s_flat: np.ndarray,
                     opts: EvalOptions) -> np.ndarray:
    """L(s, chi) on a 1-d array of s, via the merged power table."""
    q = chi.modulus
    n_trunc = specfun._em_truncation(s_flat, opts)
    out = np.empty(s_flat.shape, dtype=np.complex128)
    chunk = max(1, int(4e6) // (q * n_trunc + q))
    vals = chi.values()
    chi_main = vals[np.arange(1, q * n_trunc + 1) % q]  # chi(k), k = 1..qN
    chi_res = vals[np.arange(1, q + 1) % q]  # chi(1)..chi(q)
    order = opts.euler_maclaurin_order
    bvals = np.arange(q * n_trunc + 1, q * n_trunc + q + 1, dtype=np.float64)
    ratio2 = (q / bvals) ** 2
    for lo in range(0, s_flat.size, chunk):
        s = s_flat[lo:lo + chunk]
        table = _power_table(q, n_trunc, s)
        main = table[:, : q * n_trunc] @ chi_main
        # Euler-Maclaurin tail for residue a, in powers of B_a = qN + a:
        #   B^{1-s}/(q(s-1)) + B^{-s}/2 + sum_k c_k (s)_{2k-1} q^{2k-1} B^{-s-2k+1}
        # assembled as B^{-s} (B/(q(s-1)) + 1/2 + (q/B) Horner_{(q/B)^2})
        coeff = []  # c_k (s)_{2k-1} as vectors over the chunk
        poch = s.copy()
        fact = 2.0
        for kk in range(1, order + 1):
            coeff.append((specfun._BERNOULLI[kk - 1] / fact) * poch)
            if kk < order:
                poch = poch * (s + 2 * kk - 1) * (s + 2 * kk)
                fact *= (2 * kk + 1) * (2 * kk + 2)
        horner = np.zeros((s.size, q), dtype=np.complex128)
        for c in coeff[::-1]:
            horner = (horner + c[:, None]) * ratio2[None, :]
        horner /= ratio2[None, :] / (q / bvals)[None, :]  # one net (q/B) power
        bpow = table[:, q * n_trunc:]  # B_a^(-s)
        at_pole = s == 1.0
        sm1 = np.where(at_pole, 1.0, s - 1.0)
        pole_part = bpow * bvals[None, :] / (q * sm1[:, None])
        if np.any(at_pole):
            # removable singularity: sum_a chi(a) B_a^{1-s}/(q(s-1)) tends to
            # -sum_a chi(a) log(B_a)/q for non-principal chi
            pole_part[at_pole] = -np.log(bvals)[None, :] / q
        corr = bpow * (0.5 + horner) + pole_part
        out[lo:lo + chunk] = main + corr @ chi_res
    return out


def evaluate(spec: LFunctionSpec, s, opts: EvalOptions | None = None):
    """L(s) by the family's continuation; scalar or array in s.

    Raises :class:`PoleError` at s = 1 when the function has a pole there.
    """
    opts = opts or specfun.DEFAULT_OPTIONS
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    if spec.pole_order > 0 and np.any(arr == 1.0):
        raise PoleError("pole at s = 1")
    flat = arr.ravel()
    if spec.family == "zeta":
        out = specfun.riemann_zeta(flat, opts)
    elif spec.family == "dirichlet":
        out = _dirichlet_batch(spec.character, flat, opts)
    else:  # dedekind
        out = specfun.riemann_zeta(flat, opts) * \
            _dirichlet_batch(spec.character, flat, opts)
    if np.ndim(s) == 0:
        return complex(out[0])
    return out.reshape(np.shape(s))


def log_archimedean(spec: LFunctionSpec, s):
    """log of N^(s/2) prod_j Gamma_R(s + mu_j), principal branches.

    The archimedean factor of the completed function in log form; the
    zero-scanning code works with this to avoid under/overflow.
    """
    arr = np.asarray(s, dtype=np.complex128)
    out = 0.5 * arr * math.log(spec.conductor)
    for m in spec.mu:
        z = (arr + m) / 2.0
        out = out + log_gamma(z) - z * math.log(math.pi)
    return out


def completed(spec: LFunctionSpec, s, opts: EvalOptions | None = None):
    """xi(s) = L(s) N^(s/2) prod_j Gamma_R(s+mu_j).

    Usable for moderate |Im(s)| (the gamma factors underflow doubles past
    |t| of a few hundred; use :func:`log_archimedean` beyond that).
    """
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    for m in spec.mu:
        z = (arr + m) / 2.0
        bad = (z.imag == 0) & (z.real <= 0) & (z.real == np.floor(z.real))
        if np.any(bad):
            raise PoleError("gamma factor pole")
    val = evaluate(spec, s, opts) * np.exp(log_archimedean(spec, s))
    return val


def functional_equation_residual(spec: LFunctionSpec, s,
                                 opts: EvalOptions | None = None) -> float:
    """|xi(s) - kappa conj(xi(1 - conj(s)))| / max(|xi(s)|, 1e-300)."""
    sc = complex(s)
    lhs = completed(spec, sc, opts)
    rhs = spec.root_number * np.conj(completed(spec, 1.0 - sc.conjugate(), opts))
    return float(abs(lhs - rhs) / max(abs(lhs), 1e-300))


def analytic_conductor(spec: LFunctionSpec, T: float) -> float:
    """N * prod_j (|iT + mu_j| + 3), evaluated literally."""
    out = float(spec.conductor)
    for m in spec.mu:
        out *= abs(1j * T + m) + 3.0
    return out


def analytic_conductor_scaled(spec: LFunctionSpec, T: float) -> float:
    """The pi^(-m) variant of the conductor, reported alongside the literal
    one for Dirichlet L-functions (conventions differ in the literature)."""
    return analytic_conductor(spec, T) / math.pi ** spec.degree


# ---------------------------------------------------------------------------
# Coefficients


def lambda_coeff(spec: LFunctionSpec, n: int) -> complex:
    """Coefficient of the Dirichlet series of -L'/L at n (n >= 2).

    Additive over products: the quadratic Dedekind case gives
    Lambda(n) (1 + chi_D(n)).
    """
    if n < 2:
        raise DomainError("lambda_coeff needs n >= 2")
    lam = specfun.von_mangoldt(n)
    if lam == 0.0:
        return 0.0 + 0.0j
    if spec.family == "zeta":
        return complex(lam)
    if spec.family == "dirichlet":
        return lam * spec.character(n)
    return lam * (1.0 + spec.character(n))


def euler_product(spec: LFunctionSpec, s: complex, prime_limit: int = 100000) -> complex:
    """Truncated Euler product over p <= prime_limit; Re(s) > 1 required."""
    sc = complex(s)
    if sc.real <= 1.0:
        raise DomainError("Euler product requires Re(s) > 1")
    primes = specfun.primes_up_to(prime_limit).astype(np.float64)
    p_ms = np.exp(-sc * np.log(primes))
    if spec.family == "zeta":
        logs = -np.log1p(-p_ms)
    elif spec.family == "dirichlet":
        chi_p = np.array([spec.character(int(p)) for p in primes])
        logs = -np.log1p(-chi_p * p_ms)
    else:
        chi_p = np.array([spec.character(int(p)) for p in primes])
        logs = -np.log1p(-p_ms) - np.log1p(-chi_p * p_ms)
    return complex(cmath.exp(complex(np.sum(logs))))


def order_at_zero(spec: LFunctionSpec) -> int:
    """Order of vanishing of L at s = 0 (known per family).

    zeta(0) = -1/2 (order 0); primitive Dirichlet L vanishes at 0 exactly
    when chi is even (the Gamma_R(s) factor forces a simple trivial zero);
    the quadratic Dedekind case inherits the orders of its two factors.
    """
    if spec.family == "zeta":
        return 0
    if spec.family == "dirichlet":
        return 1 if spec.character.parity == 0 else 0
    return 1 if spec.discriminant > 0 else 0
