import pytest

from k2rank.criteria import (
    FastPath,
    Quartic,
    SplitGenerator,
    class_group_for,
    profile,
    quartic_condition,
    quartic_condition_fast,
    satisfies_1_32,
    split_generator,
)
from k2rank.errors import DomainError, InvariantViolation, NotFoundError
from k2rank.qforms import RepWitness, enumerate_class_group

from oracles import all_diag_reps, omega_filter


def test_satisfies_1_32_examples():
    assert satisfies_1_32(41) == RepWitness(3, 1)
    assert satisfies_1_32(113) == RepWitness(9, 1)
    assert satisfies_1_32(281) is None


def test_satisfies_1_32_requires_1_mod_8():
    with pytest.raises(DomainError):
        satisfies_1_32(13)


def test_satisfies_1_32_matches_double_loop():
    for l in omega_filter(7, 3000):
        assert (satisfies_1_32(l) is not None) == bool(all_diag_reps(l, 1, 32))


@pytest.mark.parametrize(
    "l, label, witness",
    [
        (113, Quartic.SAT_2_P, RepWitness(5, 3)),
        (281, Quartic.SAT_1_2P, RepWitness(15, 2)),
        (193, Quartic.SAT_2_P, RepWitness(3, 5)),
    ],
)
def test_quartic_condition_examples(l, label, witness):
    assert quartic_condition(l, 7, class_group_for(7)) == (label, witness)


def test_quartic_condition_matches_double_loop_p7():
    cg = class_group_for(7)
    for l in omega_filter(7, 3000):
        one = all_diag_reps(l, 1, 14, l)
        two = all_diag_reps(l, 2, 7, l)
        assert bool(one) != bool(two)
        label, _ = quartic_condition(l, 7, cg)
        assert label == (Quartic.SAT_1_2P if one else Quartic.SAT_2_P)


def test_quartic_uses_square_for_p31():
    cg = class_group_for(31)
    assert cg.h == 8
    for l in omega_filter(31, 600):
        label, w = quartic_condition(l, 31, cg)
        s, t = (1, 62) if label is Quartic.SAT_1_2P else (2, 31)
        assert s * w.n**2 + t * w.m**2 == l**2
        assert w.m % l != 0


def test_quartic_condition_rejects_h_not_divisible_by_4():
    with pytest.raises(InvariantViolation):
        quartic_condition(113, 7, enumerate_class_group(-23))


@pytest.mark.parametrize(
    "l, sat32, quartic, r16",
    [
        (113, True, Quartic.SAT_2_P, 1),
        (281, False, Quartic.SAT_1_2P, 9),
        (193, False, Quartic.SAT_2_P, 1),
    ],
)
def test_profile_examples(l, sat32, quartic, r16):
    prof = profile(l, 7)
    assert (prof.sat_1_32, prof.quartic, prof.residue16) == (sat32, quartic, r16)
    assert profile(l, 7) == prof


@pytest.mark.parametrize("l, p", [(17, 7), (113, 23), (115, 7), (13, 7), (113, 11), (113, 15)])
def test_profile_rejects_outside_omega(l, p):
    with pytest.raises(DomainError):
        profile(l, p)


@pytest.mark.parametrize("p", [7, 23, 31])
def test_profile_invariants(p):
    for l in omega_filter(p, 20000):
        prof = profile(l, p)
        assert prof.residue16 in (1, 9) and prof.residue16 == l % 16
        if prof.witness_1_32:
            w = prof.witness_1_32
            assert w.n**2 + 32 * w.m**2 == l
        w = prof.quartic_witness
        k = class_group_for(p).h // 4
        s, t = (1, 2 * p) if prof.quartic is Quartic.SAT_1_2P else (2, p)
        assert s * w.n**2 + t * w.m**2 == l**k
        assert w.m % l != 0


@pytest.mark.parametrize("p", [7, 23, 31])
def test_fast_path_modes_agree(p):
    cg = class_group_for(p)
    for l in omega_filter(p, 20000):
        slow = profile(l, p, cg, FastPath.OFF)
        fast = profile(l, p, cg, FastPath.ON)
        assert slow.key() == fast.key()
        assert quartic_condition_fast(l, p, cg) is slow.quartic
        assert profile(l, p, cg, FastPath.VERIFY) == slow


@pytest.mark.parametrize("p, expected", [(7, (1, 2)), (23, (3, 4)), (31, (1, 4))])
def test_split_generator_examples(p, expected):
    sg = split_generator(p)
    assert (sg.a, sg.b) == expected
    assert sg.a**2 - 2 * sg.b**2 == -p


def test_split_generator_many_primes():
    for p in (47, 71, 79, 103, 127, 151, 167, 191, 199, 223, 239, 263, 271):
        sg = split_generator(p)
        assert isinstance(sg, SplitGenerator)
        assert sg.a**2 - 2 * sg.b**2 == -p and sg.b >= 1 and sg.a >= 0


@pytest.mark.parametrize("p", [5, 15, 17, 55, 2])
def test_split_generator_rejects(p):
    with pytest.raises(DomainError):
        split_generator(p)


def test_split_generator_bound():
    # 1031 = 7 mod 8; smallest solution is 11^2 - 2*24^2
    with pytest.raises(NotFoundError, match="b <= 3"):
        split_generator(1031, bound=3)
