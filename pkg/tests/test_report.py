from decimal import Decimal

import pytest

from k2rank.arith import sieve_primes
from k2rank.classify import ADMISSIBLE_TUPLES, classify
from k2rank.criteria import FastPath
from k2rank.errors import ConsistencyError, DomainError
from k2rank.report import (
    DensityReport,
    classify_members,
    consistency_check,
    consistency_violations,
    density_series,
    enumerate_omega,
    tabulate,
)

from oracles import omega_filter


def test_enumerate_omega_small():
    assert enumerate_omega(7, 300).members == (113, 137, 193, 233, 281)


@pytest.mark.parametrize("p", [7, 23, 31, 47])
def test_enumerate_omega_matches_filter(p):
    assert list(enumerate_omega(p, 30000).members) == omega_filter(p, 30000)


def test_enumerate_omega_reuses_table():
    table = sieve_primes(5000)
    assert enumerate_omega(7, 3000, table) == enumerate_omega(7, 3000)


@pytest.mark.parametrize("p, limit", [(5, 100), (21, 100), (7, 1)])
def test_enumerate_omega_rejects(p, limit):
    with pytest.raises(DomainError):
        enumerate_omega(p, limit)


def test_tabulate_small():
    r = tabulate(7, 300)
    assert r.omega_count == 5
    assert sum(r.table2) == 5
    i = dict(zip(ADMISSIBLE_TUPLES, r.table2))
    assert i[(1, 1, 0, 0)] >= 1  # 113
    assert i[(2, 1, 0, 1)] >= 1  # 281
    assert i[(1, 1, 1, 1)] >= 1  # 193


def test_tabulate_counts_match_direct_classification():
    members = omega_filter(23, 20000)
    tuples = [classify(l, 23).tuple for l in members]
    r = tabulate(23, 20000)
    assert r.table2 == tuple(tuples.count(t) for t in ADMISSIBLE_TUPLES)
    assert r.table1["omega1"] == sum(t.upsilon == 1 for t in tuples)
    assert r.table1["lambda4"] == sum(t.tau == 1 for t in tuples)


def test_parallel_equals_sequential():
    seq = tabulate(31, 30000, jobs=1)
    par = tabulate(31, 30000, jobs=3)
    assert seq == par
    members = enumerate_omega(7, 20000).members
    assert classify_members(7, members, jobs=2) == classify_members(7, members, jobs=1)


def test_fast_path_tabulation_agrees():
    assert tabulate(31, 50000, fast_path=FastPath.ON) == tabulate(31, 50000)


def test_percentages_half_up():
    r = DensityReport(7, 10**6, 9730, {"omega1": 4866, "omega2": 4864}, (1215,))
    assert r.percent1 == {"omega1": Decimal("50.01"), "omega2": Decimal("49.99")}
    assert r.percent2 == (Decimal("12.49"),)
    # 1/160 = 0.625 percent exactly: half-up gives 0.63, banker's rounding would give 0.62
    r = DensityReport(7, 1, 160, {"omega1": 1}, (3,))
    assert r.percent1["omega1"] == Decimal("0.63")
    assert r.percent2 == (Decimal("1.88"),)
    assert r.fractions()["omega1"] == 0.0063


def test_fractions_absent_for_empty_omega():
    r = DensityReport.from_tuples(7, 100, [])
    assert r.omega_count == 0
    assert set(r.fractions().values()) == {None}


PUBLISHED = {
    7: (9730, (4866, 4864, 4866, 4864, 4878, 4852, 4878, 4852),
        (1215, 1213, 1228, 1210, 1210, 1228, 1225, 1201)),
    23: (9742, (4905, 4837, 4911, 4831, 4912, 4830, 4876, 4866),
         (1246, 1229, 1211, 1225, 1204, 1226, 1215, 1186)),
    31: (9754, (4916, 4838, 4851, 4903, 4930, 4824, 4943, 4811),
         (1246, 1203, 1214, 1188, 1227, 1240, 1256, 1180)),
}
KEYS = ("omega1", "omega2", "omega3", "omega4", "lambda1", "lambda2", "lambda3", "lambda4")


def published_report(p):
    omega, t1, t2 = PUBLISHED[p]
    return DensityReport(p, 10**6, omega, dict(zip(KEYS, t1)), t2)


@pytest.mark.parametrize("p", [7, 23, 31])
def test_consistency_on_published_numbers(p):
    assert consistency_check(published_report(p))


def test_consistency_detects_perturbation():
    omega, t1, t2 = PUBLISHED[7]
    bad = DensityReport(7, 10**6, omega, dict(zip(KEYS, t1)), (t2[0] + 1,) + t2[1:])
    assert consistency_check(bad, strict=False) is False
    problems = consistency_violations(bad)
    assert any("I1+I2+I5+I6" in msg for msg in problems)
    with pytest.raises(ConsistencyError, match="omega1"):
        consistency_check(bad)


def test_density_series():
    rows = density_series(7, 100000, 4)
    assert [r.limit for r in rows] == [25000, 50000, 75000, 100000]
    assert rows[-1] == tabulate(7, 100000)
    counts = [r.omega_count for r in rows]
    assert counts == sorted(counts)
    assert density_series(7, 100000, 1) == [tabulate(7, 100000)]


def test_density_series_ceil_checkpoints():
    rows = density_series(7, 1000, 3)
    assert [r.limit for r in rows] == [334, 667, 1000]


def test_density_series_empty_prefix_reports_none():
    rows = density_series(7, 300, 3)
    assert rows[0].limit == 100 and rows[0].omega_count == 0
    assert rows[0].fractions()["omega1"] is None
    assert rows[-1].omega_count == 5


def test_density_series_rejects_zero_checkpoints():
    with pytest.raises(DomainError):
        density_series(7, 300, 0)
