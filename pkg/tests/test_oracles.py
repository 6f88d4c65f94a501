import random

import pytest

from wreathembed.oracles import (
    CyclicSumOracle,
    DELAY_MODELS,
    FreeAbelianOracle,
    FreeGroupOracle,
    OracleError,
    OracleStats,
    TrivialGroupOracle,
    cyclic_sum_is_trivial,
    free_abelian_is_trivial,
    free_is_trivial,
    oracle_by_name,
    oracle_is_trivial,
    wrap_delayed,
    wrap_instrumented,
)
from wreathembed.words import HWord, WordError, encode_hword


def test_oracle_is_trivial_verdicts():
    assert oracle_is_trivial(FreeAbelianOracle(), "3141").trivial
    assert not oracle_is_trivial(FreeGroupOracle(), "31310").trivial
    assert oracle_is_trivial(TrivialGroupOracle(), "31411310").trivial


def test_free_abelian_is_trivial():
    assert free_abelian_is_trivial(HWord(((1, 2), (2, 1), (1, -2), (2, -1))))
    assert not free_abelian_is_trivial(HWord(((1, 1),)))
    assert not free_abelian_is_trivial(HWord(((3, 5), (3, -4))))


def test_free_is_trivial():
    assert free_is_trivial(HWord(((1, 1), (1, -1))))
    assert free_is_trivial(HWord(((1, 1), (2, 1), (2, -1), (1, -1))))
    assert not free_is_trivial(HWord(((1, 1), (2, -1), (1, -1))))


def test_cyclic_sum_is_trivial():
    assert cyclic_sum_is_trivial(HWord(((1, 4),)), lambda i: 2)
    assert not cyclic_sum_is_trivial(HWord(((2, 3),)), lambda i: 2)
    assert cyclic_sum_is_trivial(HWord(((5, 6), (5, -1))), lambda i: 5)


def test_free_abelian_agrees_with_free_on_single_index():
    rng = random.Random(3)
    for _ in range(200):
        letters = tuple(
            (4, rng.choice((-1, 1)) * rng.randint(1, 3)) for _ in range(rng.randint(0, 6))
        )
        u = HWord(letters)
        assert free_abelian_is_trivial(u) == free_is_trivial(u)


def test_free_trivializes_word_times_inverse():
    rng = random.Random(4)
    for _ in range(200):
        letters = tuple(
            (rng.randint(1, 5), rng.choice((-1, 1)) * rng.randint(1, 3))
            for _ in range(rng.randint(0, 6))
        )
        u = HWord(letters)
        assert free_is_trivial(u.concat(u.inverse()))


def test_large_modulus_matches_free_abelian():
    rng = random.Random(9)
    for _ in range(200):
        letters = tuple(
            (rng.randint(1, 4), rng.choice((-1, 1)) * rng.randint(1, 3))
            for _ in range(rng.randint(0, 6))
        )
        u = HWord(letters)
        big = u.letter_length() + 2
        assert cyclic_sum_is_trivial(u, lambda i: big) == free_abelian_is_trivial(u)


def test_oracle_by_name():
    assert oracle_by_name("trivial").name == "trivial"
    assert oracle_by_name("free-abelian").name == "free-abelian"
    assert oracle_by_name("free").name == "free"
    oracle = oracle_by_name("cyclic:3")
    assert isinstance(oracle, CyclicSumOracle)
    assert oracle.is_trivial(encode_hword(HWord(((1, 3),))))
    with pytest.raises(OracleError):
        oracle_by_name("nope")
    with pytest.raises(OracleError):
        oracle_by_name("cyclic:x")
    with pytest.raises(OracleError):
        oracle_by_name("cyclic:1")


def test_oracles_reject_malformed_codes():
    for oracle in (TrivialGroupOracle(), FreeGroupOracle(), FreeAbelianOracle()):
        with pytest.raises(WordError):
            oracle.is_trivial("35")


def test_instrumented_wrapper_counts():
    inst = wrap_instrumented(FreeGroupOracle())
    assert inst.stats == OracleStats(0, 0, 0, 0)
    inst.is_trivial("31")
    assert inst.stats == OracleStats(1, 2, 2, 1)
    inst.is_trivial("310")
    assert inst.stats == OracleStats(2, 3, 5, 2)


def test_wrappers_are_verdict_transparent():
    rng = random.Random(1)
    base = FreeAbelianOracle()
    inst = wrap_instrumented(base)
    slow = wrap_delayed(base, DELAY_MODELS["linear"])
    for _ in range(100):
        letters = tuple(
            (rng.randint(1, 4), rng.choice((-1, 1))) for _ in range(rng.randint(0, 5))
        )
        code = encode_hword(HWord(letters))
        assert inst.is_trivial(code) == base.is_trivial(code)
        assert slow.is_trivial(code) == base.is_trivial(code)


def test_delayed_wrapper_costs():
    base = TrivialGroupOracle()
    slow = wrap_delayed(base, DELAY_MODELS["const"])
    for _ in range(5):
        slow.is_trivial("31")
    assert slow.cost == 5

    slow = wrap_delayed(base, DELAY_MODELS["linear"])
    slow.is_trivial("31")
    slow.is_trivial("310")
    assert slow.cost == 5

    slow = wrap_delayed(base, DELAY_MODELS["quad"])
    slow.is_trivial("3131")
    assert slow.cost == 16


def test_stats_merge():
    a = OracleStats(2, 3, 5, 2)
    b = OracleStats(1, 7, 7, 1)
    a.merge(b)
    assert a == OracleStats(3, 7, 12, 2)
