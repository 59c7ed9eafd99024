"""Enumeration of Omega(p) and the density tables built from it."""
from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .arith import PrimeTable, legendre, sieve_primes
from .classify import ADMISSIBLE_TUPLES, RankTuple, classify
from .criteria import FastPath, check_p, class_group_for
from .errors import ConsistencyError, DomainError, InvariantViolation

TABLE1_KEYS = (
    "omega1", "omega2", "omega3", "omega4",
    "lambda1", "lambda2", "lambda3", "lambda4",
)
TABLE2_KEYS = tuple(f"i{j}" for j in range(1, 9))

# (tuple coordinate, value) defining each Table 1 set
_TABLE1_SETS = {
    "omega1": (0, 1), "omega2": (0, 2),
    "omega3": (1, 1), "omega4": (1, 2),
    "lambda1": (2, 0), "lambda2": (2, 1),
    "lambda3": (3, 0), "lambda4": (3, 1),
}

# Table 1 sets as unions of tuple classes (indices into TABLE2_KEYS)
_MARGINALS = {
    "omega1": (0, 1, 4, 5),
    "omega3": (0, 1, 2, 3),
    "lambda1": (0, 3, 5, 6),
    "lambda3": (0, 2, 4, 6),
}


@dataclass(frozen=True)
class OmegaSet:
    p: int
    limit: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


def enumerate_omega(p: int, limit: int, table: PrimeTable | None = None) -> OmegaSet:
    check_p(p)
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")
    if table is None or table.limit < limit:
        table = sieve_primes(limit)
    members = []
    for l in table.primes:
        if l > limit:
            break
        if l % 8 != 1 or legendre(l, p) != 1:
            continue
        if legendre(p, l) != 1:
            raise InvariantViolation(f"reciprocity failed: (l/p) = 1 but (p/l) != 1 for l={l}, p={p}")
        members.append(l)
    return OmegaSet(p, limit, tuple(members))


def _percent(count: int, total: int) -> Decimal | None:
    if total == 0:
        return None
    return (Decimal(100 * count) / Decimal(total)).quantize(Decimal("0.01"), ROUND_HALF_UP)


@dataclass(frozen=True)
class DensityReport:
    p: int
    limit: int
    omega_count: int
    table1: dict[str, int]
    table2: tuple[int, ...]
    percent1: dict[str, Decimal | None] = field(init=False, compare=False)
    percent2: tuple[Decimal | None, ...] = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "percent1", {k: _percent(v, self.omega_count) for k, v in self.table1.items()}
        )
        object.__setattr__(
            self, "percent2", tuple(_percent(v, self.omega_count) for v in self.table2)
        )

    @classmethod
    def from_tuples(cls, p: int, limit: int, tuples) -> DensityReport:
        counts = Counter(tuples)
        stray = set(counts) - set(ADMISSIBLE_TUPLES)
        if stray:
            raise InvariantViolation(f"inadmissible rank tuples {sorted(stray)}")
        table1 = {
            key: sum(n for t, n in counts.items() if t[pos] == val)
            for key, (pos, val) in _TABLE1_SETS.items()
        }
        table2 = tuple(counts[t] for t in ADMISSIBLE_TUPLES)
        return cls(p, limit, sum(counts.values()), table1, table2)

    def fractions(self) -> dict[str, float | None]:
        """Four-decimal fractions of |Omega| for every Table 1 and Table 2 set."""
        pct = dict(self.percent1)
        pct.update(zip(TABLE2_KEYS, self.percent2))
        return {k: None if v is None else float(v / 100) for k, v in pct.items()}

    def counts(self) -> dict[str, int]:
        out = {"omega": self.omega_count, **self.table1}
        out.update(zip(TABLE2_KEYS, self.table2))
        return out


def consistency_violations(report: DensityReport) -> list[str]:
    problems = []
    total = report.omega_count
    t1 = report.table1
    for a, b in (("omega1", "omega2"), ("omega3", "omega4"),
                 ("lambda1", "lambda2"), ("lambda3", "lambda4")):
        if t1[a] + t1[b] != total:
            problems.append(f"{a}+{b} = {t1[a] + t1[b]} != omega = {total}")
    if sum(report.table2) != total:
        problems.append(f"sum(I1..I8) = {sum(report.table2)} != omega = {total}")
    for key, idx in _MARGINALS.items():
        s = sum(report.table2[i] for i in idx)
        if s != t1[key]:
            terms = "+".join(TABLE2_KEYS[i].upper() for i in idx)
            problems.append(f"{key} = {t1[key]} != {terms} = {s}")
    return problems


def consistency_check(report: DensityReport, strict: bool = True) -> bool:
    """True when every marginal identity holds.

    With strict=True a violation raises ConsistencyError naming the
    failed identities instead of returning False.
    """
    problems = consistency_violations(report)
    if problems and strict:
        raise ConsistencyError(f"p={report.p}, limit={report.limit}: " + "; ".join(problems))
    return not problems


def _classify_chunk(p: int, members: tuple[int, ...], fast_path: str) -> list[RankTuple]:
    cg = class_group_for(p)
    return [classify(l, p, cg, FastPath(fast_path)).tuple for l in members]


def classify_members(
    p: int, members, jobs: int = 1, fast_path: FastPath = FastPath.OFF
) -> list[RankTuple]:
    """Rank tuples for each member, in input order; chunks run in worker processes."""
    members = tuple(members)
    fast_path = FastPath(fast_path).value
    if jobs <= 1 or len(members) < 2:
        return _classify_chunk(p, members, fast_path)
    n_chunks = min(len(members), jobs * 4)
    size = math.ceil(len(members) / n_chunks)
    chunks = [members[i : i + size] for i in range(0, len(members), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_classify_chunk, [p] * len(chunks), chunks, [fast_path] * len(chunks))
        return [t for part in parts for t in part]


def tabulate(
    p: int,
    limit: int,
    jobs: int = 1,
    fast_path: FastPath = FastPath.OFF,
    table: PrimeTable | None = None,
) -> DensityReport:
    omega = enumerate_omega(p, limit, table)
    tuples = classify_members(p, omega.members, jobs, fast_path)
    report = DensityReport.from_tuples(p, limit, tuples)
    consistency_check(report)
    return report


def density_series(
    p: int,
    limit: int,
    checkpoints: int,
    jobs: int = 1,
    fast_path: FastPath = FastPath.OFF,
    table: PrimeTable | None = None,
) -> list[DensityReport]:
    """Cumulative reports at N_k = ceil(limit*k/checkpoints), k = 1..checkpoints."""
    if checkpoints < 1:
        raise DomainError(f"checkpoints must be >= 1, got {checkpoints}")
    omega = enumerate_omega(p, limit, table)
    tuples = classify_members(p, omega.members, jobs, fast_path)
    rows = []
    for k in range(1, checkpoints + 1):
        n_k = -(-limit * k // checkpoints)
        upto = bisect_right(omega.members, n_k)
        report = DensityReport.from_tuples(p, n_k, tuples[:upto])
        consistency_check(report)
        rows.append(report)
    return rows
