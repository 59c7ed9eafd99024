"""Exact integer primitives: sieving, residue symbols, square roots."""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Deterministic Miller-Rabin bases, valid for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, n: int) -> bool:
        i = bisect_left(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n


def sieve_primes(limit: int) -> PrimeTable:
    """All primes <= limit, from a bit-sieve over the odd numbers only."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    # index i stands for 2*i + 1
    size = (limit - 1) // 2 + 1
    odd = np.ones(size, dtype=bool)
    odd[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if odd[i]:
            q = 2 * i + 1
            odd[(q * q) // 2 :: q] = False
    primes = [2] + (2 * np.flatnonzero(odd) + 1).tolist()
    return PrimeTable(limit, tuple(primes))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) by the reciprocity descent.

    q is only checked for being odd and >= 3; for composite q the result
    is the Jacobi symbol.
    """
    if q < 3 or q % 2 == 0:
        raise DomainError(f"legendre modulus must be an odd prime, got {q}")
    a %= q
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if q % 8 in (3, 5):
                sign = -sign
        a, q = q, a
        if a % 4 == 3 and q % 4 == 3:
            sign = -sign
        a %= q
    return sign if q == 1 else 0


def isqrt(n: int) -> int:
    return math.isqrt(n)


def is_square(n: int) -> tuple[bool, int | None]:
    """(True, root) when n is a perfect square, else (False, None)."""
    if n < 0:
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def mod_sqrt(a: int, q: int) -> int | None:
    """Smaller square root of a modulo the odd prime q (Tonelli-Shanks).

    Returns None when a is a non-residue.
    """
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise DomainError(f"mod_sqrt modulus must be an odd prime, got {q}")
    a %= q
    if a == 0:
        return 0
    if legendre(a, q) != 1:
        return None
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
    else:
        odd, twos = q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            twos += 1
        z = 2
        while legendre(z, q) != -1:
            z += 1
        c = pow(z, odd, q)
        r = pow(a, (odd + 1) // 2, q)
        t = pow(a, odd, q)
        m = twos
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            r = r * b % q
            c = b * b % q
            t = t * c % q
            m = i
    return min(r, q - r)


def isqrt_array(values: np.ndarray) -> np.ndarray:
    """Exact floor square roots of non-negative int64 values below 2**52.

    The float square root is only a first guess; the result is corrected
    with integer comparisons, so no decision depends on rounding.
    """
    root = np.sqrt(values.astype(np.float64)).astype(np.int64)
    root -= root * root > values
    root += (root + 1) * (root + 1) <= values
    return root
