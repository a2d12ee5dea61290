"""Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/4).

An element is a0 + a1*z + a2*z**2 + a3*z**3 with integer numerators over a
shared positive denominator, kept reduced so gcd(a0, a1, a2, a3, den) == 1.
The defining relation is z**4 == -1, so z**2 is the imaginary unit and
z - z**3 is sqrt(2).  All arithmetic is exact; floats only ever appear in
the display embedding to_complex.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable


def _reduce(nums: tuple[int, int, int, int], den: int) -> tuple[tuple[int, int, int, int], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = tuple(-n for n in nums)
        den = -den
    g = math.gcd(den, *(abs(n) for n in nums))
    if g > 1:
        nums = tuple(n // g for n in nums)
        den //= g
    return nums, den


class Cyc:
    """A number in Q(z), z**4 == -1."""

    __slots__ = ("_n", "_d")

    def __init__(self, nums: Iterable[int | Fraction] = (0, 0, 0, 0), den: int = 1):
        ns = list(nums)
        if len(ns) != 4:
            raise ValueError("need exactly 4 coordinates")
        if any(isinstance(n, Fraction) for n in ns):
            fs = [Fraction(n) for n in ns]
            m = math.lcm(*(f.denominator for f in fs))
            ns = [int(f * m) for f in fs]
            den = den * m
        self._n, self._d = _reduce(tuple(int(n) for n in ns), int(den))

    # constructors

    @classmethod
    def from_rational(cls, q: int | Fraction) -> Cyc:
        q = Fraction(q)
        return cls((q.numerator, 0, 0, 0), q.denominator)

    @classmethod
    def zeta_power(cls, k: int) -> Cyc:
        k %= 8
        sign = 1 if k < 4 else -1   # z**4 == -1
        nums = [0, 0, 0, 0]
        nums[k % 4] = sign
        return cls(nums)

    @classmethod
    def from_strings(cls, parts: Iterable[str]) -> Cyc:
        fs = [Fraction(p) for p in parts]
        if len(fs) != 4:
            raise ValueError("need exactly 4 coordinates")
        den = math.lcm(*(f.denominator for f in fs))
        return cls(tuple(int(f * den) for f in fs), den)

    # views

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._d) for n in self._n)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coords]

    def to_complex(self) -> complex:
        w = cmath.exp(1j * cmath.pi / 4)
        return sum(float(Fraction(n, self._d)) * w**k for k, n in enumerate(self._n))

    def is_rational(self) -> bool:
        return self._n[1] == self._n[2] == self._n[3] == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._n[0], self._d)

    def is_real(self) -> bool:
        # real subfield is spanned by 1 and z - z**3
        return self._n[2] == 0 and self._n[1] == -self._n[3]

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coords

    def residue(self, p: int, wpows: tuple[int, int, int, int]) -> int | None:
        """Image in Z/p under z -> w, given (1, w, w**2, w**3) mod p.

        None when the denominator vanishes mod p; w must satisfy w**4 == -1.
        """
        if self._d % p == 0:
            return None
        s = sum(n * wp for n, wp in zip(self._n, wpows))
        return s * pow(self._d, -1, p) % p

    # ring structure

    def __bool__(self) -> bool:
        return any(self._n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash((self._n, self._d))

    def __neg__(self) -> Cyc:
        return Cyc(tuple(-n for n in self._n), self._d)

    def __add__(self, other: Cyc | int | Fraction) -> Cyc:
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._n, other._n
        return Cyc(tuple(a[k] * other._d + b[k] * self._d for k in range(4)),
                   self._d * other._d)

    __radd__ = __add__

    def __sub__(self, other: Cyc | int | Fraction) -> Cyc:
        return self + (-other if isinstance(other, Cyc) else Cyc.from_rational(-other))

    def __rsub__(self, other: int | Fraction) -> Cyc:
        return Cyc.from_rational(other) + (-self)

    def __mul__(self, other: Cyc | int | Fraction) -> Cyc:
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._n, other._n
        c = [0, 0, 0, 0]
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            for j in range(4):
                bj = b[j]
                if not bj:
                    continue
                k = i + j
                if k < 4:
                    c[k] += ai * bj
                else:
                    c[k - 4] -= ai * bj   # z**4 == -1
        return Cyc(tuple(c), self._d * other._d)

    __rmul__ = __mul__

    def galois(self, t: int) -> Cyc:
        """The automorphism z -> z**t for odd t."""
        t %= 8
        if t % 2 == 0:
            raise ValueError("t must be odd")
        a = self._n
        if t == 1:
            return self
        if t == 3:
            return Cyc((a[0], a[3], -a[2], a[1]), self._d)
        if t == 5:
            return Cyc((a[0], -a[1], a[2], -a[3]), self._d)
        return Cyc((a[0], -a[3], -a[2], -a[1]), self._d)

    def conj(self) -> Cyc:
        """Complex conjugation, z -> z**7."""
        return self.galois(7)

    def inv(self) -> Cyc:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        # product of the other three Galois conjugates; times self it is the
        # rational field norm
        c = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * c
        return c * Cyc.from_rational(1 / norm.rational_part())

    def __truediv__(self, other: Cyc | int | Fraction) -> Cyc:
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: int | Fraction) -> Cyc:
        return Cyc.from_rational(other) * self.inv()

    def __pow__(self, k: int) -> Cyc:
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"Cyc({list(self._n)}, {self._d})"

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            unit = ("", "z", "z^2", "z^3")[k]
            if not unit:
                parts.append(str(c))
            elif c == 1:
                parts.append(unit)
            elif c == -1:
                parts.append(f"-{unit}")
            else:
                parts.append(f"{c}*{unit}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


ZERO = Cyc()
ONE = Cyc.from_rational(1)
HALF = Cyc.from_rational(Fraction(1, 2))
ZETA = Cyc.zeta_power(1)
IM = Cyc.zeta_power(2)
SQRT2 = Cyc((0, 1, 0, -1))        # z - z**3
INV_SQRT2 = Cyc((0, 1, 0, -1), 2)
ROOTS_OF_UNITY_8 = tuple(Cyc.zeta_power(k) for k in range(8))


def _frac_sqrt(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def _qi_sqrt(p: Fraction, q: Fraction) -> list[tuple[Fraction, Fraction]]:
    # square roots of p + q*i inside Q(i)
    if not p and not q:
        return [(Fraction(0), Fraction(0))]
    if not q:
        r = _frac_sqrt(p)
        if r is not None:
            return [(r, Fraction(0)), (-r, Fraction(0))]
        r = _frac_sqrt(-p)
        if r is not None:
            return [(Fraction(0), r), (Fraction(0), -r)]
        return []
    norm = _frac_sqrt(p * p + q * q)
    if norm is None:
        return []
    s = _frac_sqrt((p + norm) / 2)
    if s is None or not s:
        return []
    t = q / (2 * s)
    return [(s, t), (-s, -t)]


def cyc_sqrt(c: Cyc) -> list[Cyc]:
    """All square roots of c in Q(z).  Empty when none exist there."""
    a0, a1, a2, a3 = c.coords
    # write c = A + B*z with A, B in Q(i), using z**2 == i
    roots: list[Cyc] = []

    def build(alpha: tuple[Fraction, Fraction], beta: tuple[Fraction, Fraction]) -> None:
        x = Cyc((alpha[0], beta[0], alpha[1], beta[1]))
        if x * x == c and x not in roots:
            roots.append(x)

    if not a1 and not a3:
        for r in _qi_sqrt(a0, a2):
            build(r, (Fraction(0), Fraction(0)))
        # alpha == 0 branch: beta**2 == -i*A
        for r in _qi_sqrt(a2, -a0):
            build((Fraction(0), Fraction(0)), r)
    else:
        # x == alpha + beta*z needs alpha**2 + i*beta**2 == A, 2*alpha*beta == B
        pa, qa = a0, a2
        pb, qb = a1, a3
        # D == A**2 - i*B**2
        da = pa * pa - qa * qa + 2 * pb * qb
        db = 2 * pa * qa - pb * pb + qb * qb
        for dr, di in _qi_sqrt(da, db):
            for ar, ai in _qi_sqrt((pa + dr) / 2, (qa + di) / 2):
                if not ar and not ai:
                    continue
                # beta == B / (2*alpha)
                den = 2 * (ar * ar + ai * ai)
                br = (pb * ar + qb * ai) / den
                bi = (qb * ar - pb * ai) / den
                build((ar, ai), (br, bi))
    roots.sort(key=Cyc.sort_key)
    return roots
