"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored as a rational polynomial in zeta_n on the power basis
{zeta_n^e : 0 <= e < phi(n)}, reduced modulo the n-th cyclotomic
polynomial.  Within a fixed order the representation is unique, so
equality of same-order values is dictionary equality; across orders both
sides are lifted to the lcm first.  After every operation the order is
descended by g = gcd(n, exponents) when g > 1, which keeps rationals at
order 1 and later linear algebra small.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)

_cyclotomic_cache: dict[int, list[int]] = {}
_power_cache: dict[int, dict[int, dict[int, int]]] = {}
_phi_cache: dict[int, int] = {}


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # ascending coefficients, den monic; remainder must vanish
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients of Phi_n, ascending degree, monic."""
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    _cyclotomic_cache[n] = poly
    return poly


def _phi(n: int) -> int:
    if n not in _phi_cache:
        _phi_cache[n] = len(cyclotomic_polynomial(n)) - 1
    return _phi_cache[n]


def _power_table(n: int) -> dict[int, dict[int, int]]:
    # x^e mod Phi_n for phi(n) <= e < n, as sparse integer rows
    if n in _power_cache:
        return _power_cache[n]
    poly = cyclotomic_polynomial(n)
    deg = len(poly) - 1
    table: dict[int, dict[int, int]] = {}
    if deg < n:
        top = {i: -c for i, c in enumerate(poly[:deg]) if c}
        table[deg] = top
        prev = top
        for e in range(deg + 1, n):
            nxt: dict[int, int] = {}
            for i, c in prev.items():
                if i + 1 == deg:
                    for j, t in top.items():
                        nxt[j] = nxt.get(j, 0) + c * t
                else:
                    nxt[i + 1] = nxt.get(i + 1, 0) + c
            table[e] = {i: c for i, c in nxt.items() if c}
            prev = table[e]
    _power_cache[n] = table
    return table


def _normalize(n: int, coeffs: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    folded: dict[int, Fraction] = {}
    for e, c in coeffs.items():
        if c:
            k = e % n
            v = folded.get(k)
            folded[k] = c if v is None else v + c
    folded = {e: c for e, c in folded.items() if c}
    if not folded:
        return 1, {}
    deg = _phi(n)
    if any(e >= deg for e in folded):
        table = _power_table(n)
        out: dict[int, Fraction] = {}
        for e, c in folded.items():
            if e < deg:
                out[e] = out.get(e, _ZERO) + c
            else:
                for i, a in table[e].items():
                    out[i] = out.get(i, _ZERO) + c * a
        folded = {e: c for e, c in out.items() if c}
        if not folded:
            return 1, {}
    if n > 1:
        g = n
        for e in folded:
            g = gcd(g, e)
            if g == 1:
                break
        if g > 1:
            return _normalize(n // g, {e // g: c for e, c in folded.items()})
    return n, folded


class CycloNumber:
    """An element of Q(zeta_order), immutable once built."""

    __slots__ = ("order", "coeffs")
    __hash__ = None  # equality crosses orders; key(order) serves dict use

    def __init__(self, order: int, coeffs: dict[int, Fraction], _normalized: bool = False):
        if order < 1:
            raise ValueError("order must be positive")
        if not _normalized:
            order, coeffs = _normalize(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycloNumber is immutable")

    # --- constructors -------------------------------------------------
    @staticmethod
    def rational(q) -> "CycloNumber":
        q = Fraction(q)
        if not q:
            return ZERO
        return CycloNumber(1, {0: q}, _normalized=True)

    @staticmethod
    def zeta(n: int, e: int = 1) -> "CycloNumber":
        return CycloNumber(n, {e: _ONE})

    # --- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return self.order == 1

    def rational_value(self) -> Fraction:
        if self.order != 1:
            raise ValueError("not a rational value")
        return self.coeffs.get(0, _ZERO)

    # --- arithmetic ----------------------------------------------------
    def _lift_coeffs(self, m: int) -> dict[int, Fraction]:
        k = m // self.order
        if k == 1:
            return self.coeffs
        return {e * k: c for e, c in self.coeffs.items()}

    def __add__(self, other) -> "CycloNumber":
        other = as_cyclo(other)
        if self.order == 1 and other.order == 1:
            q = self.coeffs.get(0, _ZERO) + other.coeffs.get(0, _ZERO)
            return CycloNumber(1, {0: q} if q else {}, _normalized=True)
        m = self.order * other.order // gcd(self.order, other.order)
        a = dict(self._lift_coeffs(m))
        for e, c in other._lift_coeffs(m).items():
            a[e] = a.get(e, _ZERO) + c
        return CycloNumber(m, a)

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.order, {e: -c for e, c in self.coeffs.items()}, _normalized=True)

    def __sub__(self, other) -> "CycloNumber":
        return self + (-as_cyclo(other))

    def __rsub__(self, other) -> "CycloNumber":
        return as_cyclo(other) + (-self)

    def __mul__(self, other) -> "CycloNumber":
        other = as_cyclo(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        if self.order == 1 and other.order == 1:
            return CycloNumber(1, {0: self.coeffs[0] * other.coeffs[0]}, _normalized=True)
        if self.order == 1:
            q = self.coeffs[0]
            return CycloNumber(other.order,
                               {e: q * c for e, c in other.coeffs.items()})
        if other.order == 1:
            q = other.coeffs[0]
            return CycloNumber(self.order,
                               {e: q * c for e, c in self.coeffs.items()})
        m = self.order * other.order // gcd(self.order, other.order)
        a = self._lift_coeffs(m)
        b = other._lift_coeffs(m)
        out: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = (e1 + e2) % m
                v = out.get(k)
                p = c1 * c2
                out[k] = p if v is None else v + p
        return CycloNumber(m, out)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNumber":
        """Apply zeta -> zeta^k; k must be coprime to the order."""
        n = self.order
        if n == 1:
            return self
        if gcd(k % n, n) != 1:
            raise ValueError("galois exponent not coprime to order")
        return CycloNumber(n, {(e * k) % n: c for e, c in self.coeffs.items()})

    def conjugate(self) -> "CycloNumber":
        return self.galois(self.order - 1) if self.order > 1 else self

    def inverse(self) -> "CycloNumber":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.order == 1:
            return CycloNumber(1, {0: 1 / self.coeffs[0]}, _normalized=True)
        n = self.order
        prod = ONE
        for k in range(2, n):
            if gcd(k, n) == 1:
                prod = prod * self.galois(k)
        norm = self * prod
        if not norm.is_rational():
            raise ArithmeticError("field norm failed to be rational")
        return prod * CycloNumber.rational(1 / norm.rational_value())

    def __truediv__(self, other) -> "CycloNumber":
        return self * as_cyclo(other).inverse()

    def __rtruediv__(self, other) -> "CycloNumber":
        return as_cyclo(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        other = as_cyclo(other)
        if self.order == other.order:
            return self.coeffs == other.coeffs
        return (self - other).is_zero()

    # --- conversions ----------------------------------------------------
    def to_complex(self) -> complex:
        z = 0j
        for e, c in self.coeffs.items():
            z += float(c) * cmath.exp(2j * cmath.pi * e / self.order)
        return z

    def key(self, order: int) -> tuple:
        """Canonical hashable form at a common ambient order."""
        if order % self.order:
            raise ValueError("key order must be a multiple of the value's order")
        lifted = _normalize(order, dict(self._lift_coeffs(order)))[1] if order > 1 else self.coeffs
        return tuple(sorted((e, c.numerator, c.denominator) for e, c in lifted.items()))

    def sort_key(self, order: int) -> tuple:
        """Dense total-order key at a common ambient order."""
        if order % self.order:
            raise ValueError("sort order must be a multiple of the value's order")
        lifted = _normalize(order, dict(self._lift_coeffs(order)))[1] if order > 1 else self.coeffs
        deg = _phi(order)
        return tuple((lifted.get(e, _ZERO).numerator, lifted.get(e, _ZERO).denominator)
                     for e in range(deg))

    def to_json(self) -> dict:
        return {"n": self.order,
                "c": [[e, c.numerator, c.denominator]
                      for e, c in sorted(self.coeffs.items())]}

    @staticmethod
    def from_json(obj: dict) -> "CycloNumber":
        return CycloNumber(obj["n"],
                           {e: Fraction(a, b) for e, a, b in obj["c"]})

    def __repr__(self) -> str:
        return f"CycloNumber({fmt_cyclo(self)!r})"


def as_cyclo(x) -> CycloNumber:
    if isinstance(x, CycloNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNumber.rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycloNumber")


def fmt_cyclo(x: CycloNumber) -> str:
    """Render as 'a0 + a1*z(n)^e1 + ...' with ascending exponents."""
    if not x.coeffs:
        return "0"
    parts = []
    for e, c in sorted(x.coeffs.items()):
        if e == 0:
            parts.append(str(c))
            continue
        zed = f"z({x.order})" if e == 1 else f"z({x.order})^{e}"
        if c == 1:
            parts.append(zed)
        elif c == -1:
            parts.append(f"-{zed}")
        else:
            parts.append(f"{c}*{zed}")
    return " + ".join(parts)


ZERO = CycloNumber(1, {}, _normalized=True)
ONE = CycloNumber(1, {0: _ONE}, _normalized=True)
