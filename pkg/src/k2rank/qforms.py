"""Positive definite binary quadratic forms and their class groups."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import isqrt_array, legendre, mod_sqrt
from .errors import DomainError

# numpy scan is exact only while every tested value stays below 2**52
_NUMPY_BOUND = 1 << 52
_SCAN_CHUNK = 1 << 16
_PY_SCAN_MAX = 4096


@dataclass(frozen=True, order=True)
class QuadForm:
    """The form a*X^2 + b*X*Y + c*Y^2, positive definite and primitive."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise DomainError(f"form {self.as_tuple()} is not positive definite")
        if math.gcd(self.a, self.b, self.c) != 1:
            raise DomainError(f"form {self.as_tuple()} is not primitive")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 or (-b != a and a != c)

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def inverse(self) -> QuadForm:
        return reduce(QuadForm(self.a, -self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def principal_form(disc: int) -> QuadForm:
    if disc >= 0 or disc % 4 not in (0, 1):
        raise DomainError(f"invalid negative discriminant {disc}")
    if disc % 4 == 0:
        return QuadForm(1, 0, -disc // 4)
    return QuadForm(1, 1, (1 - disc) // 4)


def reduce(f: QuadForm) -> QuadForm:
    a, b, c = f.a, f.b, f.c
    while True:
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QuadForm(a, b, c)


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, u, v) with u*x + v*y = g = gcd(x, y)."""
    u0, u1, v0, v1 = 1, 0, 0, 1
    while y:
        q, x, y = x // y, y, x % y
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return x, u0, v0


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Reduced representative of the product class (Cohen, Algorithm 5.4.7)."""
    disc = f.discriminant
    if g.discriminant != disc:
        raise DomainError(
            f"cannot compose forms of discriminants {disc} and {g.discriminant}"
        )
    if f.a > g.a:
        f, g = g, f
    a1, b1 = f.a, f.b
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _xgcd(s, d)
        x2, y2 = u, -v
    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - disc) // (4 * a3)
    return reduce(QuadForm(a3, b3, c3))


def power_class(f: QuadForm, k: int) -> QuadForm:
    if k < 0:
        raise DomainError(f"exponent must be non-negative, got {k}")
    result = principal_form(f.discriminant)
    base = reduce(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class ClassGroup:
    disc: int
    forms: tuple[QuadForm, ...]

    @property
    def h(self) -> int:
        return len(self.forms)

    @property
    def principal(self) -> QuadForm:
        return principal_form(self.disc)

    def order(self, f: QuadForm) -> int:
        g, k, e = reduce(f), 1, self.principal
        while g != e:
            g = compose(g, f)
            k += 1
        return k


def enumerate_class_group(disc: int) -> ClassGroup:
    """All reduced primitive forms of a negative discriminant."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise DomainError(f"invalid negative discriminant {disc}")
    forms = []
    for a in range(1, math.isqrt(-disc // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if math.gcd(a, b, c) == 1:
                forms.append(QuadForm(a, b, c))
    return ClassGroup(disc, tuple(sorted(forms)))


def form_above(l: int, disc: int) -> QuadForm:
    """Reduced form of the class of a prime ideal of norm l."""
    if l % 2 == 0 or disc % l == 0 or legendre(disc, l) != 1:
        raise DomainError(f"{disc} is not a non-zero square modulo {l}")
    root = mod_sqrt(disc, l)
    b = min(x if x % 2 == disc % 2 else x + l for x in (root, l - root))
    return reduce(QuadForm(l, b, (b * b - disc) // (4 * l)))


@dataclass(frozen=True)
class RepWitness:
    n: int
    m: int


def diag_representation(
    N: int, s: int, t: int, forbidden_modulus: int | None = None
) -> RepWitness | None:
    """First (n, m), m ascending from 1, with s*n^2 + t*m^2 == N.

    Values of m divisible by forbidden_modulus are skipped. n may be 0.
    """
    if N < 1 or s < 1 or t < 1:
        raise DomainError(f"representation query needs positive N, s, t")
    hi = math.isqrt(N // t)
    if hi <= _PY_SCAN_MAX or N >= _NUMPY_BOUND:
        return _scan_python(N, s, t, forbidden_modulus, hi)
    return _scan_numpy(N, s, t, forbidden_modulus, hi)


def _scan_python(N, s, t, mod, hi):
    for m in range(1, hi + 1):
        if mod and m % mod == 0:
            continue
        rem = N - t * m * m
        if rem % s:
            continue
        q = rem // s
        r = math.isqrt(q)
        if r * r == q:
            return RepWitness(r, m)
    return None


def _scan_numpy(N, s, t, mod, hi):
    for start in range(1, hi + 1, _SCAN_CHUNK):
        m = np.arange(start, min(start + _SCAN_CHUNK, hi + 1), dtype=np.int64)
        rem = N - t * m * m
        quot = rem // s
        root = isqrt_array(quot)
        hit = (rem % s == 0) & (root * root == quot)
        if mod:
            hit &= m % mod != 0
        idx = np.flatnonzero(hit)
        if idx.size:
            return RepWitness(int(root[idx[0]]), int(m[idx[0]]))
    return None
