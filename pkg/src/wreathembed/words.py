"""Words over the two alphabets and the digit encoding of base-group letters.

Text grammars:

* ``{c,s}`` words: whitespace-separated tokens ``c``, ``s``, ``c^K``, ``s^K``
  with ``K`` a nonzero decimal integer, e.g. ``"s c s^-1 c^-1"``.
* base-group words: tokens ``aI`` or ``aI^K`` with index ``I >= 1`` and ``K``
  nonzero, e.g. ``"a1 a3^-2"``.
* generator codes: digit strings over ``{0,1,3,4}``.  Each letter is one
  marker digit (``3`` for a positive letter, ``4`` for an inverse) followed by
  the generator index in binary, most significant bit first, no leading zeros.
  The marker digits keep the code prefix-free, so letters need no separators.

All exponents are arbitrary-precision: embedded words carry s-exponents of
size 2^i - 1, which overflow any fixed width for moderate i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator


class WordError(ValueError):
    """Malformed word text, malformed code string, or invalid block data."""


def lg(n: int) -> int:
    """2 + floor(log2(n)), with log2(n) taken as 0 for n <= 0."""
    return 2 + (n.bit_length() - 1 if n >= 1 else 0)


@dataclass(frozen=True)
class HWord:
    """Word over the countable base alphabet, as (index, exponent) letters."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for index, exponent in self.letters:
            if index < 1:
                raise WordError(f"generator index must be >= 1, got {index}")
            if exponent == 0:
                raise WordError(f"zero exponent on generator a{index}")

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def expand(self) -> "HWord":
        """Unit-exponent expansion: one letter per unit of exponent."""
        out = []
        for index, exponent in self.letters:
            unit = 1 if exponent > 0 else -1
            out.extend((index, unit) for _ in range(abs(exponent)))
        return HWord(tuple(out))

    def inverse(self) -> "HWord":
        return HWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def concat(self, other: "HWord") -> "HWord":
        return HWord(self.letters + other.letters)

    def text(self) -> str:
        return " ".join(
            f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in self.letters
        )


_H_TOKEN = re.compile(r"a([1-9][0-9]*)(?:\^(-?[0-9]+))?$")


def parse_h_word(text: str) -> HWord:
    letters = []
    for token in text.split():
        m = _H_TOKEN.match(token)
        if m is None:
            raise WordError(f"malformed base-group token {token!r}")
        exponent = 1 if m.group(2) is None else int(m.group(2))
        if exponent == 0:
            raise WordError(f"explicit zero exponent in token {token!r}")
        letters.append((int(m.group(1)), exponent))
    return HWord(tuple(letters))


@dataclass(frozen=True)
class CSWord:
    """Canonical block form s^a0 c^b1 s^a1 ... c^bn s^an.

    ``alphas`` holds the n+1 s-exponents and ``betas`` the n c-exponents.
    Canonical means: all betas and all interior alphas are nonzero (the two
    outer alphas may be zero), so no two adjacent blocks share a letter.
    """

    alphas: tuple[int, ...] = (0,)
    betas: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.alphas) != len(self.betas) + 1:
            raise WordError("block counts out of step")
        if any(b == 0 for b in self.betas):
            raise WordError("zero c-block")
        if any(a == 0 for a in self.alphas[1:-1]):
            raise WordError("zero interior s-block")

    @classmethod
    def from_blocks(cls, blocks) -> "CSWord":
        """Canonicalize a (letter, exponent) sequence.

        Merges adjacent same-letter blocks and drops zero blocks, cascading:
        a block cancelled to zero may make its neighbours adjacent.
        """
        stack: list[list] = []
        for letter, exponent in blocks:
            if letter not in ("c", "s"):
                raise WordError(f"unknown letter {letter!r}")
            if exponent == 0:
                continue
            if stack and stack[-1][0] == letter:
                stack[-1][1] += exponent
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([letter, exponent])
        alphas = []
        betas = []
        pending = 0
        for letter, exponent in stack:
            if letter == "s":
                pending = exponent
            else:
                alphas.append(pending)
                betas.append(exponent)
                pending = 0
        alphas.append(pending)
        return cls(tuple(alphas), tuple(betas))

    def blocks(self) -> Iterator[tuple[str, int]]:
        """Yield the nonzero (letter, exponent) blocks in word order."""
        if self.alphas[0] != 0:
            yield ("s", self.alphas[0])
        for beta, alpha in zip(self.betas, self.alphas[1:]):
            yield ("c", beta)
            if alpha != 0:
                yield ("s", alpha)

    def is_empty(self) -> bool:
        return not self.betas and self.alphas[0] == 0

    def letter_length(self) -> int:
        return sum(abs(a) for a in self.alphas) + sum(abs(b) for b in self.betas)

    def inverse(self) -> "CSWord":
        return CSWord.from_blocks(
            (letter, -e) for letter, e in reversed(list(self.blocks()))
        )

    def concat(self, other: "CSWord") -> "CSWord":
        merged = list(self.blocks()) + list(other.blocks())
        return CSWord.from_blocks(merged)

    def text(self) -> str:
        return " ".join(
            f"{letter}" if e == 1 else f"{letter}^{e}" for letter, e in self.blocks()
        )


_CS_TOKEN = re.compile(r"([cs])(?:\^(-?[0-9]+))?$")


def parse_cs_word(text: str) -> CSWord:
    blocks = []
    for token in text.split():
        m = _CS_TOKEN.match(token)
        if m is None:
            raise WordError(f"malformed token {token!r}")
        exponent = 1 if m.group(2) is None else int(m.group(2))
        if exponent == 0:
            raise WordError(f"explicit zero exponent in token {token!r}")
        blocks.append((m.group(1), exponent))
    return CSWord.from_blocks(blocks)


def encode_hword(u: HWord) -> str:
    """Code a base-group word, one token per unit of exponent.

    The token for index i has length 2 + floor(log2(i)): marker plus binary.
    """
    parts = []
    for index, exponent in u.letters:
        token = ("3" if exponent > 0 else "4") + format(index, "b")
        parts.append(token * abs(exponent))
    return "".join(parts)


def decode_hword(code: str) -> HWord:
    """Inverse of encode_hword, yielding unit-exponent letters."""
    letters = []
    pos = 0
    while pos < len(code):
        marker = code[pos]
        if marker not in "34":
            raise WordError(f"expected marker digit 3 or 4 at position {pos}")
        pos += 1
        start = pos
        while pos < len(code) and code[pos] in "01":
            pos += 1
        numeral = code[start:pos]
        if not numeral:
            raise WordError(f"dangling marker at position {start - 1}")
        if numeral[0] == "0":
            raise WordError(f"leading zero in binary index at position {start}")
        letters.append((int(numeral, 2), 1 if marker == "3" else -1))
    return HWord(tuple(letters))
