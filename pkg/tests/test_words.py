import random

import pytest

from wreathembed.words import (
    CSWord,
    HWord,
    WordError,
    decode_hword,
    encode_hword,
    lg,
    parse_cs_word,
    parse_h_word,
)


def test_lg_values():
    assert lg(0) == 2
    assert lg(1) == 2
    assert lg(2) == 3
    assert lg(3) == 3
    assert lg(4) == 4
    assert lg(1024) == 12


def test_parse_cs_word_blocks():
    w = parse_cs_word("s c s^-1 c^-1")
    assert w.alphas == (1, -1, 0)
    assert w.betas == (1, -1)
    assert w.letter_length() == 4


def test_parse_cs_word_cancellation_to_identity():
    w = parse_cs_word("c^2 c^-2")
    assert w == CSWord()
    assert w.is_empty()
    assert w.letter_length() == 0


def test_parse_cs_word_merges_same_letter_blocks():
    w = parse_cs_word("s^3 s^4")
    assert w.alphas == (7,)
    assert w.betas == ()


def test_parse_cs_word_cascading_cancellation():
    # the middle collapses step by step until nothing is left
    assert parse_cs_word("c s s^-1 c^-1").is_empty()
    assert parse_cs_word("c s c c^-1 s^-1 c^-1").is_empty()


def test_parse_cs_word_errors():
    with pytest.raises(WordError):
        parse_cs_word("x")
    with pytest.raises(WordError):
        parse_cs_word("c^0")
    with pytest.raises(WordError):
        parse_cs_word("c^")
    with pytest.raises(WordError):
        parse_cs_word("cs")


def test_cs_word_invariants_rejected():
    with pytest.raises(WordError):
        CSWord((0, 0, 0), (1, 1))  # zero interior s-block
    with pytest.raises(WordError):
        CSWord((0, 0), (0,))  # zero c-block
    with pytest.raises(WordError):
        CSWord((0, 0), ())  # block counts out of step


def test_cs_word_text_round_trip_random():
    rng = random.Random(7)
    for _ in range(300):
        blocks = [
            (rng.choice("cs"), rng.choice((-1, 1)) * rng.randint(1, 9))
            for _ in range(rng.randint(0, 12))
        ]
        w = CSWord.from_blocks(blocks)
        again = parse_cs_word(w.text())
        assert again == w
        # canonical output re-canonicalizes to itself
        assert CSWord.from_blocks(w.blocks()) == w


def test_cs_word_concat_inverse():
    w = parse_cs_word("s c^2 s^-3 c")
    assert w.concat(w.inverse()).is_empty()
    assert w.inverse().inverse() == w


def test_parse_h_word():
    u = parse_h_word("a1 a3^-2")
    assert u.letters == ((1, 1), (3, -2))
    assert u.letter_length() == 3
    assert parse_h_word("") == HWord()
    assert parse_h_word(u.text()) == u


def test_parse_h_word_errors():
    for bad in ("a0", "b1", "a1^0", "a", "a01", "a1^"):
        with pytest.raises(WordError):
            parse_h_word(bad)


def test_hword_rejects_bad_letters():
    with pytest.raises(WordError):
        HWord(((0, 1),))
    with pytest.raises(WordError):
        HWord(((1, 0),))


def test_encode_paper_table():
    assert encode_hword(HWord(((1, 1),))) == "31"
    assert encode_hword(HWord(((1, -1),))) == "41"
    assert encode_hword(HWord(((2, 1),))) == "310"


def test_encode_repeats_per_unit_of_exponent():
    assert encode_hword(HWord(((1, 2),))) == "3131"
    assert encode_hword(HWord(((3, -2),))) == "411411"


def test_decode_examples():
    assert decode_hword("31") == HWord(((1, 1),))
    assert decode_hword("") == HWord()
    assert decode_hword("310411") == HWord(((2, 1), (3, -1)))


def test_decode_errors():
    with pytest.raises(WordError):
        decode_hword("3")  # dangling marker
    with pytest.raises(WordError):
        decode_hword("301")  # leading zero in index
    with pytest.raises(WordError):
        decode_hword("2")  # not a marker digit
    with pytest.raises(WordError):
        decode_hword("3102")  # stray digit after a valid token


def test_encode_decode_round_trip_random():
    rng = random.Random(5)
    for _ in range(500):
        letters = tuple(
            (rng.randint(1, 40), rng.choice((-1, 1)) * rng.randint(1, 4))
            for _ in range(rng.randint(0, 8))
        )
        u = HWord(letters)
        assert decode_hword(encode_hword(u)) == u.expand()


def test_token_length_bound():
    # each letter's token has length 2 + floor(log2(index))
    for index in (1, 2, 3, 7, 8, 1000):
        token = encode_hword(HWord(((index, 1),)))
        assert len(token) == lg(index)


def test_phi_image_letter_length():
    # expanding the index-2 commutator by hand gives 16 letters
    from wreathembed.embed import phi

    assert phi(HWord(((2, 1),))).letter_length() == 16
