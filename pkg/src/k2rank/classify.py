"""Splitting case and 4-rank tuple of a prime l, by fixed lookup tables."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .criteria import FastPath, Quartic, SatisfactionProfile, class_group_for, profile
from .qforms import ClassGroup


class SplittingCase(str, enum.Enum):
    CASE_I = "I"
    CASE_II_1 = "II.1"
    CASE_II_2 = "II.2"
    CASE_II_3 = "II.3"
    CASE_II_4 = "II.4"
    CASE_II_5 = "II.5"
    CASE_II_6 = "II.6"
    CASE_II_7 = "II.7"


class RankTuple(NamedTuple):
    """4-ranks of K2 for Q(sqrt(pl)), Q(sqrt(2pl)), Q(sqrt(-pl)), Q(sqrt(-2pl))."""

    upsilon: int
    mu: int
    sigma: int
    tau: int


_Y, _N = True, False
_ONE, _TWO = Quartic.SAT_1_2P, Quartic.SAT_2_P

# (satisfies <1,32>, quartic condition, l mod 16) -> case
CASE_TABLE: dict[tuple[bool, Quartic, int], SplittingCase] = {
    (_Y, _ONE, 1): SplittingCase.CASE_I,
    (_Y, _TWO, 9): SplittingCase.CASE_II_1,
    (_Y, _ONE, 9): SplittingCase.CASE_II_2,
    (_N, _ONE, 9): SplittingCase.CASE_II_3,
    (_N, _ONE, 1): SplittingCase.CASE_II_4,
    (_Y, _TWO, 1): SplittingCase.CASE_II_5,
    (_N, _TWO, 1): SplittingCase.CASE_II_6,
    (_N, _TWO, 9): SplittingCase.CASE_II_7,
}

TUPLE_TABLE: dict[SplittingCase, RankTuple] = {
    SplittingCase.CASE_I: RankTuple(2, 2, 1, 1),
    SplittingCase.CASE_II_1: RankTuple(1, 2, 0, 1),
    SplittingCase.CASE_II_2: RankTuple(2, 1, 1, 0),
    SplittingCase.CASE_II_3: RankTuple(2, 1, 0, 1),
    SplittingCase.CASE_II_4: RankTuple(2, 2, 0, 0),
    SplittingCase.CASE_II_5: RankTuple(1, 1, 0, 0),
    SplittingCase.CASE_II_6: RankTuple(1, 1, 1, 1),
    SplittingCase.CASE_II_7: RankTuple(1, 2, 1, 0),
}

# Column order I1..I8 of the tuple table.
ADMISSIBLE_TUPLES: tuple[RankTuple, ...] = (
    RankTuple(1, 1, 0, 0),
    RankTuple(1, 1, 1, 1),
    RankTuple(2, 1, 1, 0),
    RankTuple(2, 1, 0, 1),
    RankTuple(1, 2, 1, 0),
    RankTuple(1, 2, 0, 1),
    RankTuple(2, 2, 0, 0),
    RankTuple(2, 2, 1, 1),
)


def case_of(prof: SatisfactionProfile) -> SplittingCase:
    return CASE_TABLE[prof.key()]


def tuple_of(case: SplittingCase) -> RankTuple:
    return TUPLE_TABLE[SplittingCase(case)]


@dataclass(frozen=True)
class ClassificationRecord:
    l: int
    p: int
    profile: SatisfactionProfile
    case: SplittingCase
    tuple: RankTuple

    def to_dict(self) -> dict:
        prof = self.profile
        w32, wq = prof.witness_1_32, prof.quartic_witness
        return {
            "l": self.l,
            "p": self.p,
            "sat_1_32": prof.sat_1_32,
            "quartic": prof.quartic.value,
            "l_mod_16": prof.residue16,
            "case": self.case.value,
            "tuple": list(self.tuple),
            "witnesses": {
                "1_32": None if w32 is None else {"x": w32.n, "y": w32.m},
                "quartic": None if wq is None else {"n": wq.n, "m": wq.m},
            },
        }


def classify(
    l: int, p: int, cg: ClassGroup | None = None, fast_path: FastPath = FastPath.OFF
) -> ClassificationRecord:
    if cg is None:
        cg = class_group_for(p)
    prof = profile(l, p, cg, fast_path)
    case = case_of(prof)
    return ClassificationRecord(l, p, prof, case, tuple_of(case))
