"""Dirichlet characters represented by exponent vectors on CRT generators.

The unit group (Z/qZ)* is decomposed into cyclic factors: one primitive-root
factor for each odd prime power, and for the 2-part either nothing (2),
{-1} (4), or {-1} x {5} (8 and beyond).  A character is an exponent vector
against those generators; its value table on 0..q-1 is materialised once at
construction, which keeps evaluation, Gauss sums, and primitivity tests
simple array operations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import DomainError

__all__ = ["DirichletCharacter", "primitive_characters", "CharacterError"]


class CharacterError(ValueError):
    """Invalid character construction or use."""


def _factorize(q: int) -> list[tuple[int, int]]:
    out = []
    m = q
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


def _primitive_root(pe: int, p: int) -> int:
    """Primitive root mod p^e for odd p (small moduli, brute force)."""
    phi = pe - pe // p
    factors = {f for f, _ in _factorize(phi)}
    for g in range(2, pe):
        if math.gcd(g, pe) != 1:
            continue
        if all(pow(g, phi // f, pe) != 1 for f in factors):
            return g
    raise CharacterError(f"no primitive root mod {pe}")


def _cyclic_factors(q: int) -> list[tuple[int, int]]:
    """(generator, order) pairs for the cyclic decomposition of (Z/qZ)*."""
    factors = []
    for p, e in _factorize(q):
        pe = p ** e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                factors.append((q - 1 if q == 4 else _crt_lift(3, 4, q), 2))
            else:
                factors.append((_crt_lift(pe - 1, pe, q), 2))
                factors.append((_crt_lift(5, pe, q), pe // 4))
        else:
            g = _primitive_root(pe, p)
            factors.append((_crt_lift(g, pe, q), pe - pe // p))
    return factors


def _crt_lift(g: int, pe: int, q: int) -> int:
    """Lift g mod pe to the unit mod q that is g mod pe and 1 elsewhere."""
    other = q // pe
    if other == 1:
        return g % q
    # x = g (mod pe), x = 1 (mod other)
    inv = pow(other, -1, pe)
    x = (1 + other * ((g - 1) * inv % pe)) % q
    return x


def _dlog_tables(q: int, gens: list[tuple[int, int]]) -> np.ndarray:
    """Discrete logs of every unit mod q against the generator list.

    Returns an array of shape (len(gens), q) with -1 at non-units.
    """
    r = len(gens)
    table = -np.ones((r, q), dtype=np.int64)
    # enumerate the whole group by mixed-radix counting over generator powers
    orders = [d for _, d in gens]
    total = 1
    for d in orders:
        total *= d
    exps = [0] * r
    val = 1
    pows = [pow(g, 1, q) for g, _ in gens]
    # walk the group: value = prod gens[i]^exps[i]
    for _ in range(total):
        for i in range(r):
            table[i, val] = exps[i]
        # increment mixed-radix counter, updating val incrementally
        for i in range(r):
            exps[i] += 1
            val = (val * pows[i]) % q
            if exps[i] < orders[i]:
                break
            # wrapped: exps[i] back to 0, val already multiplied order times
            exps[i] = 0
        else:
            break
    return table


_group_cache: dict[int, tuple[list[tuple[int, int]], np.ndarray]] = {}


def _group_data(q: int):
    if q not in _group_cache:
        gens = _cyclic_factors(q)
        _group_cache[q] = (gens, _dlog_tables(q, gens))
    return _group_cache[q]


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod q given by exponents on CRT generators.

    ``exponents[i]`` is c_i in chi(g_i) = exp(2*pi*i * c_i / d_i) where d_i is
    the order of the i-th generator.
    """

    modulus: int
    exponents: tuple[int, ...]
    _values: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.modulus < 1:
            raise CharacterError("modulus must be positive")
        gens, dlogs = _group_data(self.modulus)
        if len(self.exponents) != len(gens):
            raise CharacterError(
                f"expected {len(gens)} exponents for q={self.modulus}")
        q = self.modulus
        vals = np.zeros(q, dtype=np.complex128)
        if q == 1:
            vals[0] = 1.0  # chi mod 1 is identically 1
        else:
            unit_mask = dlogs[0] >= 0 if len(gens) else np.array(
                [math.gcd(n, q) == 1 for n in range(q)])
            angle = np.zeros(q)
            for (g, d), c, row in zip(gens, self.exponents, dlogs):
                angle[unit_mask] += (c % d) * row[unit_mask] / d
            vals[unit_mask] = np.exp(2j * math.pi * angle[unit_mask])
        object.__setattr__(self, "_values", vals)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, n: int) -> complex:
        return complex(self._values[n % self.modulus])

    def values(self) -> np.ndarray:
        """chi(0), ..., chi(q-1) as a complex array (zero off units)."""
        return self._values

    # -- classification -----------------------------------------------------

    @property
    def is_principal(self) -> bool:
        return all(c % d == 0 for c, (_, d) in
                   zip(self.exponents, _group_data(self.modulus)[0]))

    @property
    def parity(self) -> int:
        """0 for even characters (chi(-1)=1), 1 for odd (chi(-1)=-1)."""
        if self.modulus <= 2:
            return 0
        v = self(self.modulus - 1)
        return 0 if abs(v - 1.0) < 1e-9 else 1

    @property
    def is_real(self) -> bool:
        return bool(np.max(np.abs(self._values.imag)) < 1e-12)

    @property
    def order(self) -> int:
        gens, _ = _group_data(self.modulus)
        o = 1
        for c, (_, d) in zip(self.exponents, gens):
            o = math.lcm(o, d // math.gcd(c % d, d) if c % d else 1)
        return o

    def is_primitive(self) -> bool:
        """Induced-modulus test: chi is primitive iff it is not constant on
        residue classes mod q/p for every prime p dividing q."""
        q = self.modulus
        if q == 1:
            return True
        if q == 2:
            return False  # the character mod 2 is induced by the one mod 1
        for p, _ in _factorize(q):
            f = q // p
            if self._induced_mod(f):
                return False
        return True

    def _induced_mod(self, f: int) -> bool:
        """True if chi(a) = chi(b) whenever a = b (mod f) on units of q."""
        q = self.modulus
        vals = self._values
        units = np.nonzero(np.abs(vals) > 0.5)[0]
        res = units % f
        order = np.argsort(res, kind="stable")
        res = res[order]
        v = vals[units[order]]
        same = res[1:] == res[:-1]
        return not np.any(np.abs(v[1:] - v[:-1])[same] > 1e-9)

    def conjugate(self) -> "DirichletCharacter":
        gens, _ = _group_data(self.modulus)
        return DirichletCharacter(
            self.modulus,
            tuple((-c) % d for c, (_, d) in zip(self.exponents, gens)),
        )

    # -- Gauss sum ----------------------------------------------------------

    def gauss_sum(self) -> complex:
        """tau(chi) = sum_a chi(a) e(a/q) by direct summation."""
        q = self.modulus
        a = np.arange(q)
        return complex(np.sum(self._values * np.exp(2j * math.pi * a / q)))

    def root_number(self) -> complex:
        """epsilon(chi) = tau(chi) / (i^parity sqrt(q)); unimodular when
        chi is primitive."""
        q = self.modulus
        return self.gauss_sum() / (1j ** self.parity * math.sqrt(q))


def all_characters(q: int):
    """Every Dirichlet character mod q, in fixed mixed-radix order."""
    gens, _ = _group_data(q)
    orders = [d for _, d in gens]
    total = 1
    for d in orders:
        total *= d
    exps = [0] * len(orders)
    for _ in range(total):
        yield DirichletCharacter(q, tuple(exps))
        for i in range(len(orders)):
            exps[i] += 1
            if exps[i] < orders[i]:
                break
            exps[i] = 0
        else:
            break


def primitive_characters(q: int) -> list[DirichletCharacter]:
    """All primitive characters mod q, in stable enumeration order."""
    if q < 1:
        raise DomainError("modulus must be positive")
    return [chi for chi in all_characters(q) if chi.is_primitive()]


def quadratic_character(D: int) -> DirichletCharacter:
    """The primitive real character attached to a fundamental discriminant.

    Identified as the unique primitive quadratic character mod |D| whose
    parity matches the sign of D (even for D > 0, odd for D < 0).
    """
    if not is_fundamental_discriminant(D):
        raise DomainError(f"{D} is not a fundamental discriminant")
    want_parity = 0 if D > 0 else 1
    found = [chi for chi in primitive_characters(abs(D))
             if chi.order == 2 and chi.parity == want_parity]
    if len(found) != 1:
        raise CharacterError(
            f"expected one primitive quadratic character mod {abs(D)} with "
            f"parity {want_parity}, found {len(found)}")
    return found[0]


def is_fundamental_discriminant(D: int) -> bool:
    """D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree."""
    if D in (0, 1):
        return False

    def squarefree(n: int) -> bool:
        n = abs(n)
        d = 2
        while d * d <= n:
            if n % (d * d) == 0:
                return False
            d += 1
        return True

    if D % 4 == 1:
        return squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False
