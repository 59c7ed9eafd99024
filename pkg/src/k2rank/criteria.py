"""Representation conditions <1,32>, <1,2p>, <2,p> and the mod 16 residue.

The brute-force scans are the ground truth. The class-group route
(``FastPath.ON``) decides the same questions from the class of a prime
ideal above l, and ``FastPath.VERIFY`` runs both and refuses to continue
if they ever disagree.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, is_square, legendre
from .errors import DomainError, FastPathMismatch, InvariantViolation, NotFoundError
from .qforms import (
    ClassGroup,
    QuadForm,
    RepWitness,
    diag_representation,
    enumerate_class_group,
    form_above,
    power_class,
)

SPLIT_SEARCH_BOUND = 10**6


class Quartic(str, enum.Enum):
    SAT_1_2P = "1_2p"
    SAT_2_P = "2_p"


class FastPath(str, enum.Enum):
    OFF = "off"
    ON = "on"
    VERIFY = "verify"


@dataclass(frozen=True)
class SatisfactionProfile:
    l: int
    p: int
    sat_1_32: bool
    quartic: Quartic
    residue16: int
    witness_1_32: RepWitness | None = None
    quartic_witness: RepWitness | None = None

    def key(self) -> tuple[bool, Quartic, int]:
        return (self.sat_1_32, self.quartic, self.residue16)


@dataclass(frozen=True)
class SplitGenerator:
    a: int
    b: int


def check_p(p: int) -> None:
    if p % 8 != 7 or not is_prime(p):
        raise DomainError(f"p must be a prime congruent to 7 mod 8, got {p}")


def in_omega(l: int, p: int) -> bool:
    return l % 8 == 1 and is_prime(l) and legendre(l, p) == 1


def check_omega(l: int, p: int) -> None:
    check_p(p)
    if not in_omega(l, p):
        raise DomainError(f"l not in Omega(p): l={l}, p={p}")


@lru_cache(maxsize=None)
def class_group_for(p: int) -> ClassGroup:
    """Class group of discriminant -8p, i.e. of Q(sqrt(-2p))."""
    check_p(p)
    return enumerate_class_group(-8 * p)


def satisfies_1_32(l: int) -> RepWitness | None:
    """Witness (x, y) = (n, m) of l = x^2 + 32 y^2, or None."""
    if l % 8 != 1:
        raise DomainError(f"<1,32> is only defined here for l = 1 mod 8, got {l}")
    return diag_representation(l, 1, 32)


def _quartic_exponent(cg: ClassGroup) -> int:
    if cg.h % 4:
        raise InvariantViolation(f"class number {cg.h} of disc {cg.disc} not divisible by 4")
    return cg.h // 4


def quartic_condition(l: int, p: int, cg: ClassGroup) -> tuple[Quartic, RepWitness]:
    """Decide <1,2p> versus <2,p> for l^(h/4) by scanning both forms."""
    k = _quartic_exponent(cg)
    N = l**k
    one_2p = diag_representation(N, 1, 2 * p, l)
    two_p = diag_representation(N, 2, p, l)
    if (one_2p is None) == (two_p is None):
        found = "both" if one_2p else "neither"
        raise InvariantViolation(
            f"dichotomy failed for l={l}, p={p}: {found} of <1,2p>, <2,p> hold"
        )
    if one_2p is not None:
        return Quartic.SAT_1_2P, one_2p
    return Quartic.SAT_2_P, two_p


def quartic_condition_fast(l: int, p: int, cg: ClassGroup) -> Quartic:
    """Same decision via the (h/4)-th power of the class above l."""
    k = _quartic_exponent(cg)
    cls = power_class(form_above(l, cg.disc), k)
    if cls == cg.principal:
        return Quartic.SAT_1_2P
    if cls == QuadForm(2, 0, p):
        return Quartic.SAT_2_P
    raise InvariantViolation(
        f"class of l={l} to the power {k} is {cls}, neither principal nor (2,0,{p})"
    )


def satisfies_1_32_fast(l: int) -> bool:
    return form_above(l, -128) == QuadForm(1, 0, 32)


def profile(
    l: int, p: int, cg: ClassGroup | None = None, fast_path: FastPath = FastPath.OFF
) -> SatisfactionProfile:
    check_omega(l, p)
    if cg is None:
        cg = class_group_for(p)
    if cg.disc != -8 * p:
        raise DomainError(f"class group has disc {cg.disc}, expected {-8 * p}")
    fast_path = FastPath(fast_path)

    if fast_path is FastPath.ON:
        return SatisfactionProfile(
            l, p, satisfies_1_32_fast(l), quartic_condition_fast(l, p, cg), l % 16
        )

    w32 = satisfies_1_32(l)
    quartic, wq = quartic_condition(l, p, cg)
    if fast_path is FastPath.VERIFY:
        fast = (satisfies_1_32_fast(l), quartic_condition_fast(l, p, cg))
        if fast != (w32 is not None, quartic):
            raise FastPathMismatch(
                f"l={l}, p={p}: scans give {(w32 is not None, quartic.value)}, "
                f"class group gives {(fast[0], fast[1].value)}"
            )
    return SatisfactionProfile(l, p, w32 is not None, quartic, l % 16, w32, wq)


def split_generator(p: int, bound: int = SPLIT_SEARCH_BOUND) -> SplitGenerator:
    """Smallest b >= 1 with a^2 - 2 b^2 = -p for some a >= 0."""
    check_p(p)
    b = 1
    while b <= bound:
        ok, a = is_square(2 * b * b - p)
        if ok:
            return SplitGenerator(a, b)
        b += 1
    raise NotFoundError(f"no solution of a^2 - 2b^2 = -{p} with b <= {bound}")
