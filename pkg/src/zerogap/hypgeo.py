"""Hyperbolic distance in disks, strips, and rectangles; lemma check suites.

Distances are computed through the Mobius-invariant pseudo-hyperbolic form

    d(z1, z2; D) = atanh |(z1 - z2) / (1 - conj(z1) z2)|

after conformally transporting the domain onto the unit disk.  For a strip
the transport is z = tanh((w - i T)/a); for a rectangle it is the Jacobi-sn
map composed with an inverse Joukowski step and a disk automorphism.  Any
correct transport gives the same distance (conformal invariance), so the
tests here pin geometric identities rather than map internals.

The ``check_*`` functions verify classical growth and distortion lemmas
(Borel-Caratheodory via Hadamard three circles, Rademacher's
Phragmen-Lindelof interpolation, Siegel's sinh-ratio rectangle lemma) on
documented families of analytic test functions.  The lemmas quantify over
all analytic functions; a numeric suite can only test instances, so the
instance families are part of the contract and the hypotheses are verified
by dense sampling, never assumed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .specfun import DomainError

__all__ = [
    "RectangleDomain",
    "ConformalRectMap",
    "disk_distance",
    "strip_distance",
    "build_rect_map",
    "rect_distance",
    "check_lemma_borel",
    "check_lemma_siegel",
    "check_lemma_rademacher",
    "check_tanh_inequality",
    "check_log1p_bound",
    "borel_test_family",
    "siegel_test_family",
    "rademacher_test_family",
]


@dataclass(frozen=True)
class RectangleDomain:
    sigma_lo: float
    sigma_hi: float
    t_lo: float
    t_hi: float

    def __post_init__(self):
        if not (self.sigma_lo < self.sigma_hi and self.t_lo < self.t_hi):
            raise DomainError("degenerate rectangle")

    @property
    def width(self) -> float:
        return self.sigma_hi - self.sigma_lo

    @property
    def height(self) -> float:
        return self.t_hi - self.t_lo

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.sigma_lo + self.sigma_hi),
                       0.5 * (self.t_lo + self.t_hi))

    def contains(self, w: complex, margin: float = 0.0) -> bool:
        return (self.sigma_lo + margin < w.real < self.sigma_hi - margin and
                self.t_lo + margin < w.imag < self.t_hi - margin)


def disk_distance(z1: complex, z2: complex) -> float:
    """Hyperbolic distance in the unit disk: atanh of the pseudo-hyperbolic
    distance |(z1-z2)/(1-conj(z1) z2)|."""
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) >= 1.0 or abs(z2) >= 1.0:
        raise DomainError("points must lie strictly inside the unit disk")
    rho = abs((z1 - z2) / (1.0 - z1.conjugate() * z2))
    # interior points have rho < 1 exactly; rounding can saturate it
    return math.atanh(min(rho, 1.0 - 1e-16))


def strip_distance(w1: complex, w2: complex, center_t: float,
                   half_width_param: float) -> float:
    """Hyperbolic distance in the strip {|Im w - center_t| < a pi/4}.

    The strip maps onto the disk by z = tanh((w - i center_t)/a); on the
    center line the metric density is 1/a, so distances there equal
    |w1 - w2| / a exactly.
    """
    a = half_width_param
    if a <= 0:
        raise DomainError("half_width_param must be positive")
    lim = a * math.pi / 4.0
    w1, w2 = complex(w1), complex(w2)
    for w in (w1, w2):
        if abs(w.imag - center_t) >= lim:
            raise DomainError("point outside the strip")
    # translation invariance along the strip: recentring the pair keeps the
    # two images on opposite sides of 0, which protects the cross term below
    shift = 0.5 * (w1.real + w2.real)
    v1 = (w1 - shift - 1j * center_t) / a
    v2 = (w2 - shift - 1j * center_t) / a
    z1 = cmath.tanh(v1)
    z2 = cmath.tanh(v2)
    rho = abs((z1 - z2) / (1.0 - z1.conjugate() * z2))
    if rho < 1.0 - 1e-9:
        return math.atanh(rho)
    # large separation: tanh saturates, so assemble atanh(rho) from
    #   log(1 - rho^2) = sum_i log(1 - |z_i|^2) - 2 log|1 - conj(z1) z2|
    # with log(1 - |tanh(x+iy)|^2) = log 4 - 2|x| + log cos(2y) - 2 log|1+u|,
    # u = exp(-2(|x| - iy)), which never underflows for |x| < 350
    def log_gap(v: complex) -> float:
        x, y = abs(v.real), v.imag
        u = cmath.exp(-2.0 * (x - 1j * y))
        c = math.cos(2.0 * y)
        if c <= 0.0:
            return float("-inf")
        return math.log(4.0) - 2.0 * x + math.log(c) - 2.0 * math.log(abs(1.0 + u))

    log_1m_rho2 = log_gap(v1) + log_gap(v2) - \
        2.0 * math.log(abs(1.0 - z1.conjugate() * z2))
    rho_sq = math.exp(log_1m_rho2) if log_1m_rho2 > -700 else 0.0
    rho = math.sqrt(max(0.0, 1.0 - rho_sq))
    return math.log1p(rho) - 0.5 * log_1m_rho2


@dataclass(frozen=True)
class ConformalRectMap:
    """Biholomorphic map of an axis-parallel rectangle onto the unit disk.

    The stored modulus solves K'(k)/K(k) = height/width (so a square gets
    k = 1/sqrt(2)); the complementary modulus is kept alongside because k
    itself rounds to 1.0 for extreme aspect ratios.  ``center`` is sent to 0.
    """

    domain: RectangleDomain
    center: complex
    modulus: float
    comp_modulus: float
    quarter_period: float
    comp_quarter_period: float
    _center_image: complex

    def _to_slit_plane(self, w):
        """Affine to the sn rectangle (-K,K)x(-K',K'), then sn."""
        arr = np.asarray(w, dtype=np.complex128)
        lam = 2.0 * self.quarter_period / self.domain.width
        zeta = (arr - self.domain.center) * lam
        return specfun._jacobi_sn_comp(zeta, self.comp_modulus)

    def _slit_to_disk(self, u):
        # inverse Joukowski: slit plane C \ ((-inf,-1] u [1,inf)) -> disk
        u = np.asarray(u, dtype=np.complex128)
        return u / (1.0 + np.sqrt(1.0 - u * u))

    def forward(self, w):
        """Map a point of the rectangle to the unit disk (center -> 0)."""
        v = self._slit_to_disk(self._to_slit_plane(w))
        v0 = self._center_image
        out = (v - v0) / (1.0 - np.conj(v0) * v)
        return complex(out) if np.ndim(w) == 0 else out

    def inverse(self, z):
        """Map a point of the unit disk back into the rectangle."""
        z = np.asarray(z, dtype=np.complex128)
        v0 = self._center_image
        v = (z + v0) / (1.0 + np.conj(v0) * z)
        u = 2.0 * v / (1.0 + v * v)
        zeta = specfun._inverse_sn_comp(u, self.comp_modulus)
        lam = 2.0 * self.quarter_period / self.domain.width
        out = zeta / lam + self.domain.center
        return complex(out) if np.ndim(z) == 0 else out


def build_rect_map(R: RectangleDomain, center: complex) -> ConformalRectMap:
    """Conformal map R -> unit disk sending ``center`` to 0.

    The elliptic modulus is solved from the aspect ratio via the
    quarter-period ratio equation, then the map is realised as
    affine -> sn -> inverse Joukowski -> disk automorphism.
    """
    center = complex(center)
    if not R.contains(center):
        raise DomainError("center must lie strictly inside the rectangle")
    kp = specfun.solve_modulus_from_ratio(R.height / R.width)
    k = math.sqrt(max(0.0, (1.0 - kp) * (1.0 + kp)))
    K = specfun._elliptic_k_from_comp(kp)
    Kp = specfun._elliptic_k_from_comp(k)
    m = ConformalRectMap(
        domain=R, center=center, modulus=k, comp_modulus=kp,
        quarter_period=K, comp_quarter_period=Kp,
        _center_image=0.0,
    )
    v0 = m._slit_to_disk(m._to_slit_plane(center))
    object.__setattr__(m, "_center_image", complex(v0))
    return m


def rect_distance(w1: complex, w2: complex, R: RectangleDomain) -> float:
    """Hyperbolic distance between two interior points of a rectangle."""
    w1, w2 = complex(w1), complex(w2)
    for w in (w1, w2):
        if not R.contains(w):
            raise DomainError("points must lie strictly inside the rectangle")
    m = build_rect_map(R, w1)
    return math.atanh(min(abs(m.forward(w2)), 1.0 - 1e-16))


# ---------------------------------------------------------------------------
# Growth / distortion lemma checks on documented test families


@dataclass(frozen=True)
class AnalyticInstance:
    """One member of a lemma's test family: a callable plus a label."""

    label: str
    fn: callable

    def __call__(self, z):
        return self.fn(z)


def borel_test_family() -> list[AnalyticInstance]:
    """Analytic f on the unit disk with f(0) = 0 and K(f) > 0."""
    fam = [
        AnalyticInstance("z", lambda z: z),
        AnalyticInstance("z^2", lambda z: z * z),
        AnalyticInstance("z^3", lambda z: z ** 3),
        AnalyticInstance("0.5 z", lambda z: 0.5 * z),
        AnalyticInstance("z exp(z)", lambda z: z * np.exp(z)),
        AnalyticInstance("z exp(z/2)", lambda z: z * np.exp(0.5 * z)),
        AnalyticInstance("z exp(-z)", lambda z: z * np.exp(-z)),
        AnalyticInstance("z + z^2/2", lambda z: z + 0.5 * z * z),
        AnalyticInstance("sin(z)", lambda z: np.sin(z)),
        AnalyticInstance("z/(2-z)", lambda z: z / (2.0 - z)),
    ]
    for a in (0.3, 0.6):
        fam.append(AnalyticInstance(
            f"mobius a={a}",
            lambda z, a=a: (z - a) / (1.0 - a * z) + a))
    return fam


class HypothesisError(ValueError):
    """Sampling refuted a lemma's hypotheses for the given instance."""


def _sup_re_on_disk(f, n_angles: int = 10000) -> float:
    """K(f) = sup Re f over the disk, by boundary sampling at radius 0.9999
    plus maximum-principle spot checks on an interior grid."""
    ang = np.exp(2j * math.pi * np.arange(n_angles) / n_angles)
    best = float(np.max(np.real(f(0.9999 * ang))))
    for r in (0.5, 0.9, 0.99):
        best = max(best, float(np.max(np.real(f(r * ang[::16])))))
    return best


def _max_mod_on_circle(f, r: float, n_angles: int = 10000) -> float:
    ang = np.exp(2j * math.pi * np.arange(n_angles) / n_angles)
    return float(np.max(np.abs(f(r * ang))))


def check_lemma_borel(f, r1: float, r2: float) -> bool:
    """Hadamard-three-circles growth bound for f analytic on D, f(0)=0.

    Solves c from M(r1, f) = K(f) r1^c and checks
    M(r2, f) < 2 K(f) r2^c / (1 - r2^c).
    """
    if not 0.0 < r1 < r2 < 1.0:
        raise DomainError("need 0 < r1 < r2 < 1")
    K = _sup_re_on_disk(f)
    if K <= 0.0:
        raise HypothesisError("K(f) <= 0: statement vacuous for this f")
    M1 = _max_mod_on_circle(f, r1)
    if M1 <= 0.0:
        raise HypothesisError("M(r1, f) = 0 (f identically 0?): skipped")
    c = math.log(M1 / K) / math.log(r1)
    if c <= 0.0:
        raise HypothesisError("no positive exponent c with M(r1)=K r1^c")
    r2c = r2 ** c
    if r2c >= 1.0:
        raise HypothesisError("r2^c >= 1: bound degenerate")
    M2 = _max_mod_on_circle(f, r2)
    return M2 < 2.0 * K * r2c / (1.0 - r2c)


def siegel_test_family(M0: float = 1.0) -> list[tuple[AnalyticInstance, float]]:
    """(instance, M) pairs analytic on [0,1] x [-1/(2 lambda), 1/(2 lambda)]
    with |f| <= M0 on the right edge and Re f <= M throughout."""
    fam = [
        (AnalyticInstance("const M0", lambda z: M0 + 0.0 * z), 2.0 * M0),
        (AnalyticInstance("M0 exp(-(1-z))", lambda z: M0 * np.exp(-(1.0 - z))),
         M0 * math.e),
        (AnalyticInstance("M0 exp(-5(1-z))",
                          lambda z: M0 * np.exp(-5.0 * (1.0 - z))),
         M0 * math.exp(5.0)),
        (AnalyticInstance("M0 z/(2-z)", lambda z: M0 * z / (2.0 - z)),
         2.0 * M0),
        (AnalyticInstance("M0 exp(2(z-1))", lambda z: M0 * np.exp(2.0 * (z - 1.0))),
         2.0 * M0),
        (AnalyticInstance("M0 (z/(2-z))^2",
                          lambda z: M0 * (z / (2.0 - z)) ** 2), 2.0 * M0),
        (AnalyticInstance("M0 exp(-2(1-z)) cosh-free",
                          lambda z: M0 * np.exp(-2.0 * (1.0 - z))),
         M0 * math.exp(2.0)),
        (AnalyticInstance("M0/2 (1+z^2)/2 scaled",
                          lambda z: 0.25 * M0 * (1.0 + z * z)), 2.0 * M0),
        (AnalyticInstance("M0 z^3/(2-z)^3",
                          lambda z: M0 * (z / (2.0 - z)) ** 3), 2.0 * M0),
        (AnalyticInstance("M0 z/(2-z) exp(z-1)",
                          lambda z: M0 * z / (2.0 - z) * np.exp(z - 1.0)),
         2.0 * M0),
    ]
    return fam


def check_lemma_siegel(f, lam: float, xi: float, M: float, M0: float,
                       samples: int = 2000) -> bool:
    """Siegel's rectangle lemma: with Re f <= M on the rectangle
    [0,1] x [-1/(2 lam), 1/(2 lam)] and |f| <= M0 on the edge x = 1,

        log|2M/f(xi) - 1| / log|2M/M0 - 1| >= sinh(pi lam xi)/sinh(pi lam)

    up to 1e-9 slack.  Hypotheses are verified by sampling and violations
    raise :class:`HypothesisError`.
    """
    if not (lam > 0 and 0.0 < xi < 1.0 and 0.0 < M0 < M):
        raise DomainError("need lam > 0, 0 < xi < 1, 0 < M0 < M")
    h = 1.0 / (2.0 * lam)
    xs = np.linspace(0.0, 1.0, int(math.sqrt(samples)))
    ys = np.linspace(-h, h, int(math.sqrt(samples)))
    grid = xs[:, None] + 1j * ys[None, :]
    if np.max(np.real(f(grid))) > M + 1e-9:
        raise HypothesisError("Re f exceeds M on the rectangle")
    edge = 1.0 + 1j * np.linspace(-h, h, samples)
    if np.max(np.abs(f(edge))) > M0 + 1e-9:
        raise HypothesisError("|f| exceeds M0 on the right edge")
    lhs = math.log(abs(2.0 * M / complex(f(xi)) - 1.0)) / \
        math.log(abs(2.0 * M / M0 - 1.0))
    rhs = math.sinh(math.pi * lam * xi) / math.sinh(math.pi * lam)
    return lhs >= rhs - 1e-9


def rademacher_test_family(a: float, b: float):
    """Instances (g, A, B, alpha, beta, Q) of the Phragmen-Lindelof
    interpolation hypothesis on the strip a <= sigma <= b."""
    Q1 = 2.0 + 1.0j
    Q2 = 3.5 - 1.0j
    fam = [
        (AnalyticInstance("1", lambda s: 1.0 + 0.0 * s),
         1.0, 1.0, 0.0, 0.0, [Q1]),
        (AnalyticInstance("Q+s", lambda s: Q1 + s), 1.0, 1.0, 1.0, 1.0, [Q1]),
        (AnalyticInstance("(Q+s)^2", lambda s: (Q1 + s) ** 2),
         1.0, 1.0, 2.0, 2.0, [Q1]),
        (AnalyticInstance("(Q1+s)(Q2+s)", lambda s: (Q1 + s) * (Q2 + s)),
         1.0, 1.0, 1.0, 1.0, [Q1, Q2]),
        (AnalyticInstance("exp(s)", lambda s: np.exp(s)),
         math.exp(a), math.exp(b), 0.0, 0.0, [Q1]),
        (AnalyticInstance("(Q+s) exp(s-b)", lambda s: (Q1 + s) * np.exp(s - b)),
         math.exp(a - b), 1.0, 1.0, 1.0, [Q1]),
        (AnalyticInstance("sin-free poly", lambda s: (Q1 + s) ** 2 / 4.0),
         0.25, 0.25, 2.0, 2.0, [Q1]),
        (AnalyticInstance("5", lambda s: 5.0 + 0.0 * s),
         5.0, 5.0, 0.0, 0.0, [Q2]),
        (AnalyticInstance("(Q2+s)^3", lambda s: (Q2 + s) ** 3),
         1.0, 1.0, 3.0, 3.0, [Q2]),
        (AnalyticInstance("(Q+s)^2 exp(2(s-b))",
                          lambda s: (Q1 + s) ** 2 * np.exp(2.0 * (s - b))),
         math.exp(2.0 * (a - b)), 1.0, 2.0, 2.0, [Q1]),
    ]
    return fam


def check_lemma_rademacher(g, a: float, b: float, A: float, B: float,
                           alpha: float, beta: float, Q: list[complex],
                           samples: int = 10000, t_max: float = 20.0) -> bool:
    """Phragmen-Lindelof interpolation of edge bounds across a strip.

    Edge hypotheses |g(a+it)| <= A prod |Q_j+a+it|^alpha (and likewise at b
    with B, beta) are verified on ``samples`` boundary points; the interior
    bound is then checked on a quasi-random interior sample with 1e-9 slack.
    """
    if not a < b:
        raise DomainError("need a < b")
    if alpha < beta:
        raise DomainError("need alpha >= beta")
    if any((qj + a).real <= 0 for qj in Q):
        raise HypothesisError("need Re(Q_j) + a > 0")
    ts = np.linspace(-t_max, t_max, samples)

    def prod_pow(sig, expo):
        out = np.ones_like(ts)
        for qj in Q:
            out = out * np.abs(qj + sig + 1j * ts) ** expo
        return out

    if np.max(np.abs(g(a + 1j * ts)) - A * prod_pow(a, alpha)) > 1e-9:
        raise HypothesisError("edge bound fails at sigma = a")
    if np.max(np.abs(g(b + 1j * ts)) - B * prod_pow(b, beta)) > 1e-9:
        raise HypothesisError("edge bound fails at sigma = b")

    rng = np.random.default_rng(20240817)
    sig = rng.uniform(a, b, samples)
    tt = rng.uniform(-t_max, t_max, samples)
    s = sig + 1j * tt
    lam = (b - sig) / (b - a)
    lhs = np.abs(g(s))
    prod_a = np.ones_like(sig)
    for qj in Q:
        prod_a = prod_a * np.abs(qj + s)
    rhs = (A * prod_a ** alpha) ** lam * (B * prod_a ** beta) ** (1.0 - lam)
    return bool(np.all(lhs <= rhs + 1e-9))


def check_tanh_inequality(x: float) -> bool:
    """tanh(x) > log(1/(1-x)) / (1 + log(1/(1-x))) on 0 < x < 0.936."""
    if not 0.0 < x < 0.936:
        raise DomainError("inequality stated for 0 < x < 0.936")
    u = math.log(1.0 / (1.0 - x))
    return math.tanh(x) > u / (1.0 + u)


def check_log1p_bound(w: complex) -> bool:
    """|log(1+w)| <= |w|/(1-|w|) for |w| < 1 (1e-12 slack)."""
    w = complex(w)
    if abs(w) >= 1.0:
        raise DomainError("need |w| < 1")
    return abs(cmath.log(1.0 + w)) <= abs(w) / (1.0 - abs(w)) + 1e-12
