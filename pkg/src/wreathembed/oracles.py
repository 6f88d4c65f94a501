"""Base-group word-problem oracles and instrumentation wrappers.

An oracle answers triviality queries for coded words over the countable base
alphabet (see words.encode_hword).  The built-ins cover the groups used in
tests and differential runs: the one-element group, free abelian of countable
rank, free of countable rank, and direct sums of cyclic groups.  Every
built-in accepts all generator indices; malformed codes raise WordError.

Wrappers are verdict-transparent.  The instrumented wrapper accumulates
per-session counters; a wrapper instance must stay confined to one worker,
with stats merged additively afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .words import HWord, decode_hword


class OracleError(ValueError):
    """Unknown oracle name or invalid oracle configuration."""


class Oracle:
    """Word-problem oracle over coded base-group words."""

    name = "oracle"

    def is_trivial(self, code: str) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class OracleVerdict:
    trivial: bool


def oracle_is_trivial(oracle: Oracle, code: str) -> OracleVerdict:
    return OracleVerdict(oracle.is_trivial(code))


def free_abelian_is_trivial(u: HWord) -> bool:
    """True iff every generator index has zero net exponent."""
    sums: dict[int, int] = {}
    for index, exponent in u.letters:
        sums[index] = sums.get(index, 0) + exponent
    return all(v == 0 for v in sums.values())


def free_is_trivial(u: HWord) -> bool:
    """True iff the word freely reduces to the empty word."""
    stack: list[list[int]] = []
    for index, exponent in u.letters:
        if stack and stack[-1][0] == index:
            stack[-1][1] += exponent
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, exponent])
    return not stack


def cyclic_sum_is_trivial(u: HWord, modulus_rule: Callable[[int], int]) -> bool:
    """True iff each index's net exponent vanishes mod its modulus."""
    sums: dict[int, int] = {}
    for index, exponent in u.letters:
        sums[index] = sums.get(index, 0) + exponent
    for index, total in sums.items():
        modulus = modulus_rule(index)
        if modulus < 2:
            raise OracleError(f"modulus for index {index} must be >= 2, got {modulus}")
        if total % modulus != 0:
            return False
    return True


class TrivialGroupOracle(Oracle):
    name = "trivial"

    def is_trivial(self, code: str) -> bool:
        decode_hword(code)  # still reject malformed input
        return True


class FreeAbelianOracle(Oracle):
    name = "free-abelian"

    def is_trivial(self, code: str) -> bool:
        return free_abelian_is_trivial(decode_hword(code))


class FreeGroupOracle(Oracle):
    name = "free"

    def is_trivial(self, code: str) -> bool:
        return free_is_trivial(decode_hword(code))


class CyclicSumOracle(Oracle):
    """Direct sum of cyclic groups; generator i has order modulus_rule(i)."""

    def __init__(self, modulus_rule: Callable[[int], int] | int):
        if isinstance(modulus_rule, int):
            m = modulus_rule
            if m < 2:
                raise OracleError(f"cyclic modulus must be >= 2, got {m}")
            self.modulus_rule: Callable[[int], int] = lambda _index: m
            self.name = f"cyclic:{m}"
        else:
            self.modulus_rule = modulus_rule
            self.name = "cyclic"

    def is_trivial(self, code: str) -> bool:
        return cyclic_sum_is_trivial(decode_hword(code), self.modulus_rule)


def oracle_by_name(name: str) -> Oracle:
    """Resolve `trivial`, `free-abelian`, `free`, or `cyclic:<m>`."""
    if name == "trivial":
        return TrivialGroupOracle()
    if name == "free-abelian":
        return FreeAbelianOracle()
    if name == "free":
        return FreeGroupOracle()
    if name.startswith("cyclic:"):
        raw = name.split(":", 1)[1]
        try:
            modulus = int(raw)
        except ValueError:
            raise OracleError(f"bad cyclic modulus {raw!r}") from None
        return CyclicSumOracle(modulus)
    raise OracleError(f"unknown oracle {name!r}")


BUILTIN_ORACLE_NAMES = ("trivial", "free-abelian", "free", "cyclic:2")


@dataclass
class OracleStats:
    query_count: int = 0
    max_code_length: int = 0
    total_code_length: int = 0
    max_generator_index: int = 0

    def record(self, code: str, decoded: HWord) -> None:
        self.query_count += 1
        self.total_code_length += len(code)
        self.max_code_length = max(self.max_code_length, len(code))
        if decoded.letters:
            top = max(index for index, _ in decoded.letters)
            self.max_generator_index = max(self.max_generator_index, top)

    def merge(self, other: "OracleStats") -> None:
        """Fold in another session's counters (per-worker merge)."""
        self.query_count += other.query_count
        self.total_code_length += other.total_code_length
        self.max_code_length = max(self.max_code_length, other.max_code_length)
        self.max_generator_index = max(
            self.max_generator_index, other.max_generator_index
        )


class InstrumentedOracle(Oracle):
    """Forwards verdicts unchanged while counting queries and code sizes."""

    def __init__(self, base: Oracle):
        self.base = base
        self.name = base.name
        self.stats = OracleStats()

    def is_trivial(self, code: str) -> bool:
        self.stats.record(code, decode_hword(code))
        return self.base.is_trivial(code)


def wrap_instrumented(oracle: Oracle) -> InstrumentedOracle:
    return InstrumentedOracle(oracle)


class DelayedOracle(Oracle):
    """Accumulates a simulated cost per query from a code-length model.

    The cost is a counter, not a wall-clock sleep, so runs stay fast and
    deterministic.
    """

    def __init__(self, base: Oracle, delay_model: Callable[[int], int]):
        self.base = base
        self.name = base.name
        self.delay_model = delay_model
        self.cost = 0

    def is_trivial(self, code: str) -> bool:
        self.cost += self.delay_model(len(code))
        return self.base.is_trivial(code)


def wrap_delayed(oracle: Oracle, delay_model: Callable[[int], int]) -> DelayedOracle:
    return DelayedOracle(oracle, delay_model)


DELAY_MODELS: dict[str, Callable[[int], int]] = {
    "const": lambda length: 1,
    "linear": lambda length: length,
    "quad": lambda length: length * length,
}
