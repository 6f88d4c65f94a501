"""Command-line front end: decide, member, embed, extract, fuzz, bench.

Every subcommand can write a JSON run report (--json PATH).  Reports are
deterministic given the inputs and seed, except for the elapsed_ms field,
which is informational only and never asserted.  Exit codes: 0 when no check
failed, 1 on a failed check (fuzz disagreement, bound violation, extract on a
non-member), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict

from .bruteforce import brute_is_trivial, brute_membership
from .embed import conjugate_normal_form, g_is_trivial, membership, phi
from .oracles import (
    DELAY_MODELS,
    OracleError,
    OracleStats,
    oracle_by_name,
    wrap_delayed,
    wrap_instrumented,
)
from .words import CSWord, HWord, WordError, encode_hword, lg, parse_cs_word, parse_h_word


def query_count_limit(gamma0: int, n: int, member: bool = False) -> int:
    return (6 * gamma0 + (3 if member else 1)) * (2 * n + 3)


def code_length_limit(n: int) -> int:
    # asserted only for n >= 2
    return n * lg(lg(n))


def generator_index_limit(gamma0: int) -> int:
    # floor(log2(4 * gamma0)), for gamma0 >= 1
    return gamma0.bit_length() + 1


def _bound_rows(stats: OracleStats, n: int, gamma0: int, member: bool) -> list[dict]:
    rows = []

    def row(name, limit, observed):
        rows.append(
            {"name": name, "limit": limit, "observed": observed, "pass": observed <= limit}
        )

    row("query_count", query_count_limit(gamma0, n, member), stats.query_count)
    if n >= 2:
        row("max_query_code_length", code_length_limit(n), stats.max_code_length)
    if gamma0 >= 1:
        row("max_generator_index", generator_index_limit(gamma0), stats.max_generator_index)
    return rows


def _uniform_blocks(rng: random.Random, budget: int) -> list[tuple[str, int]]:
    blocks = []
    letter = rng.choice("cs")
    while budget > 0:
        size = rng.randint(1, budget)
        blocks.append((letter, rng.choice((-1, 1)) * size))
        letter = "s" if letter == "c" else "c"
        budget -= size
    return blocks


def random_cs_word(rng: random.Random, max_len: int) -> CSWord:
    """Uniform block construction: alternate letters and spend a random letter
    budget, each block exponent bounded by what remains (so gamma0 <= n)."""
    return CSWord.from_blocks(_uniform_blocks(rng, rng.randint(0, max_len)))


def random_balanced_cs_word(
    rng: random.Random, max_shift: int, pair_count: int, max_len: int | None = None
) -> CSWord:
    """Words whose shift-class sums are all zero and whose total s-exponent is
    zero: cancelling c-power pairs at shared shifts, in shuffled order.  These
    pass the syntactic gates, so the section scan and the oracle actually run.
    """
    while True:
        factors = []
        for _ in range(pair_count):
            g = rng.randint(-max_shift, max_shift)
            b = rng.choice((-1, 1)) * rng.randint(1, 3)
            factors.append((g, b))
            factors.append((g, -b))
        rng.shuffle(factors)
        blocks = []
        shift = 0
        for g, b in factors:
            blocks.append(("s", g - shift))
            blocks.append(("c", b))
            shift = g
        blocks.append(("s", -shift))
        w = CSWord.from_blocks(blocks)
        if max_len is None or w.letter_length() <= max_len or pair_count == 0:
            return w
        pair_count //= 2


def random_phi_image_word(rng: random.Random, max_len: int) -> CSWord:
    """Image of a short random base-group word under the embedding; the only
    corpus stratum whose members lie in the embedded subgroup."""
    letters = []
    budget = max_len
    while True:
        index = rng.randint(1, 3)
        exponent = rng.choice((-1, 1)) * rng.randint(1, 2)
        cost = 4 * (1 << index) * abs(exponent)
        if cost > budget:
            break
        letters.append((index, exponent))
        budget -= cost
    return phi(HWord(tuple(letters)))


def fuzz_word(seed: int, index: int, max_len: int) -> CSWord:
    """The index-th word of a fuzz corpus; failures replay from (seed, index).

    Stratified: uniform words mostly die at the zero-sum gates, so half the
    corpus is drawn from constructions that reach the section scan (balanced
    class sums) or the membership extraction path (embedded images).
    """
    rng = random.Random(f"{seed}:{index}")
    kind = rng.random()
    if kind < 0.5:
        return random_cs_word(rng, max_len)
    if kind < 0.85:
        max_shift = max(1, max_len // 6)
        return random_balanced_cs_word(
            rng, max_shift, rng.randint(1, max(1, max_len // 6)), max_len
        )
    return random_phi_image_word(rng, max_len)


def check_word(w: CSWord, base) -> tuple[list[dict], OracleStats]:
    """Run both decision routes on one word and collect every failed check."""
    failures = []
    n = w.letter_length()
    gamma0 = conjugate_normal_form(w).gamma0

    inst = wrap_instrumented(base)
    trivial = g_is_trivial(w, inst)
    for bound in _bound_rows(inst.stats, n, gamma0, member=False):
        if not bound["pass"]:
            failures.append({"check": f"decide_bound:{bound['name']}", "detail": bound})

    inst2 = wrap_instrumented(base)
    mres = membership(w, inst2)
    for bound in _bound_rows(inst2.stats, n, gamma0, member=True):
        if not bound["pass"]:
            failures.append({"check": f"member_bound:{bound['name']}", "detail": bound})

    brute_trivial = brute_is_trivial(w, base)
    brute_mres = brute_membership(w, base)
    if trivial != brute_trivial:
        failures.append(
            {"check": "triviality_disagreement", "detail": {"embed": trivial, "brute": brute_trivial}}
        )
    if mres.member != brute_mres.member:
        failures.append(
            {"check": "membership_disagreement", "detail": {"embed": mres.member, "brute": brute_mres.member}}
        )
    if mres.member and brute_mres.member:
        quotient = mres.value.concat(brute_mres.value.inverse())
        if not base.is_trivial(encode_hword(quotient)):
            failures.append(
                {"check": "extracted_value_disagreement",
                 "detail": {"embed": mres.value.text(), "brute": brute_mres.value.text()}}
            )
    if trivial and not mres.member:
        failures.append({"check": "trivial_but_not_member", "detail": {}})
    if trivial and mres.member and not base.is_trivial(encode_hword(mres.value)):
        failures.append(
            {"check": "trivial_but_value_nontrivial", "detail": {"value": mres.value.text()}}
        )

    stats = inst.stats
    stats.merge(inst2.stats)
    return failures, stats


def fuzz_run(count: int, max_len: int, seed: int, oracle_name: str) -> dict:
    started = time.perf_counter()
    base = oracle_by_name(oracle_name)
    stats = OracleStats()
    failures = []
    disagreeing = set()
    violations = {"query_count": 0, "max_query_code_length": 0, "max_generator_index": 0}
    for index in range(count):
        w = fuzz_word(seed, index, max_len)
        word_failures, word_stats = check_word(w, base)
        stats.merge(word_stats)
        for failure in word_failures:
            check = failure["check"]
            if check.startswith(("decide_bound:", "member_bound:")):
                violations[check.split(":", 1)[1]] += 1
            else:
                disagreeing.add(index)
            if len(failures) < 25:
                failures.append({"index": index, "word": w.text(), **failure})
    disagreements = len(disagreeing)
    bounds = [
        {"name": f"{name}_violations", "limit": 0, "observed": hits, "pass": hits == 0}
        for name, hits in violations.items()
    ]
    ok = disagreements == 0 and all(b["pass"] for b in bounds)
    return {
        "command": "fuzz",
        "input": f"count={count} max_len={max_len} seed={seed} oracle={oracle_name}",
        "verdict": ok,
        "agreements": count - disagreements,
        "disagreements": disagreements,
        "failures": failures,
        "stats": asdict(stats),
        "bounds": bounds,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def bench_word(target: int, seed: int) -> CSWord:
    """Deterministic word of letter length about `target` that reaches the
    oracle: a ladder of commutators of shift-conjugated c's, which has zero
    total shift and zero class sums.  Targets too small for one ladder rung
    fall back to a seeded uniform word."""
    if target == 0:
        return CSWord()
    blocks = []
    spent = 0
    k = 1
    while spent + 4 + 6 * k <= target:
        a, b = k, 2 * k
        blocks += [
            ("s", a), ("c", 1), ("s", b - a), ("c", 1),
            ("s", a - b), ("c", -1), ("s", b - a), ("c", -1), ("s", -b),
        ]
        spent += 4 + 6 * k
        k += 1
    if blocks:
        return CSWord.from_blocks(blocks)
    return CSWord.from_blocks(_uniform_blocks(random.Random(f"bench:{seed}:{target}"), target))


def bench_run(max_n: int, oracle_name: str, delay: str, seed: int) -> dict:
    started = time.perf_counter()
    base = oracle_by_name(oracle_name)
    model = DELAY_MODELS[delay]
    targets = [0] + [1 << k for k in range(max_n.bit_length()) if (1 << k) <= max_n]
    rows = []
    stats = OracleStats()
    for target in targets:
        w = bench_word(target, seed)
        n = w.letter_length()
        gamma0 = conjugate_normal_form(w).gamma0
        inst = wrap_instrumented(base)
        timed = wrap_delayed(inst, model)
        trivial = g_is_trivial(w, timed)
        row = {
            "target_n": target,
            "n": n,
            "gamma0": gamma0,
            "trivial": trivial,
            "query_count": inst.stats.query_count,
            "query_count_limit": query_count_limit(gamma0, n),
            "max_code_length": inst.stats.max_code_length,
            "code_length_limit": code_length_limit(n) if n >= 2 else None,
            "delay_cost": timed.cost,
        }
        row["pass"] = row["query_count"] <= row["query_count_limit"] and (
            row["code_length_limit"] is None
            or row["max_code_length"] <= row["code_length_limit"]
        )
        rows.append(row)
        stats.merge(inst.stats)
    ok = all(row["pass"] for row in rows)
    bounds = [
        {
            "name": "bench_rows_within_limits",
            "limit": 0,
            "observed": sum(1 for row in rows if not row["pass"]),
            "pass": ok,
        }
    ]
    return {
        "command": "bench",
        "input": f"max_n={max_n} oracle={oracle_name} delay={delay} seed={seed}",
        "verdict": ok,
        "rows": rows,
        "stats": asdict(stats),
        "bounds": bounds,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def run_decide(word_text: str, oracle_name: str) -> dict:
    started = time.perf_counter()
    w = parse_cs_word(word_text)
    inst = wrap_instrumented(oracle_by_name(oracle_name))
    verdict = g_is_trivial(w, inst)
    bounds = _bound_rows(inst.stats, w.letter_length(), conjugate_normal_form(w).gamma0, False)
    return {
        "command": "decide",
        "input": word_text,
        "verdict": verdict,
        "stats": asdict(inst.stats),
        "bounds": bounds,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def run_member(word_text: str, oracle_name: str, command: str = "member") -> dict:
    started = time.perf_counter()
    w = parse_cs_word(word_text)
    inst = wrap_instrumented(oracle_by_name(oracle_name))
    result = membership(w, inst)
    bounds = _bound_rows(inst.stats, w.letter_length(), conjugate_normal_form(w).gamma0, True)
    report = {
        "command": command,
        "input": word_text,
        "verdict": result.member,
        "stats": asdict(inst.stats),
        "bounds": bounds,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    if result.member:
        report["value"] = result.value.text()
    return report


def run_embed(hword_text: str) -> dict:
    started = time.perf_counter()
    w = phi(parse_h_word(hword_text))
    return {
        "command": "embed",
        "input": hword_text,
        "verdict": True,
        "value": w.text(),
        "stats": asdict(OracleStats()),
        "bounds": [],
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def _write_json(report: dict, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathembed",
        description="Word problem and embedded-subgroup membership for the "
        "two-generator wreath-tower group over an oracle base group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, oracle=True):
        if oracle:
            p.add_argument("--oracle", default="free", metavar="NAME",
                           help="trivial | free-abelian | free | cyclic:<m> (default: free)")
        p.add_argument("--json", default=None, metavar="PATH", help="write a JSON run report")

    p = sub.add_parser("decide", help="decide triviality of a {c,s} word")
    p.add_argument("word", help="e.g. 's c s^-1 c^-1' (may be empty)")
    common(p)

    p = sub.add_parser("member", help="decide membership in the embedded base group")
    p.add_argument("word")
    common(p)

    p = sub.add_parser("embed", help="expand a base-group word into a {c,s} word")
    p.add_argument("hword", help="e.g. 'a1 a3^-2' (may be empty)")
    common(p, oracle=False)

    p = sub.add_parser("extract", help="extract the base-group preimage of a member word")
    p.add_argument("word")
    common(p)

    p = sub.add_parser("fuzz", help="differential run of both decision routes")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("bench", help="query-count scaling table with bound checks")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--delay", choices=sorted(DELAY_MODELS), default="const")
    p.add_argument("--seed", type=int, default=0)
    common(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decide":
            report = run_decide(args.word, args.oracle)
            print("trivial" if report["verdict"] else "nontrivial")
            ok = all(b["pass"] for b in report["bounds"])
        elif args.command == "member":
            report = run_member(args.word, args.oracle)
            print(f"member value: {report['value']}" if report["verdict"] else "not a member")
            ok = all(b["pass"] for b in report["bounds"])
        elif args.command == "embed":
            report = run_embed(args.hword)
            print(report["value"])
            ok = True
        elif args.command == "extract":
            report = run_member(args.word, args.oracle, command="extract")
            if report["verdict"]:
                print(report["value"])
            else:
                print("not a member", file=sys.stderr)
            ok = report["verdict"] and all(b["pass"] for b in report["bounds"])
        elif args.command == "fuzz":
            if args.count < 1:
                raise WordError("--count must be >= 1")
            report = fuzz_run(args.count, args.max_len, args.seed, args.oracle)
            print(
                f"agreements={report['agreements']} disagreements={report['disagreements']} "
                f"bound_violations={sum(b['observed'] for b in report['bounds'])}"
            )
            ok = report["verdict"]
        else:
            report = bench_run(args.max_n, args.oracle, args.delay, args.seed)
            for row in report["rows"]:
                print(
                    f"n={row['n']:>6} gamma0={row['gamma0']:>5} queries={row['query_count']:>8} "
                    f"limit={row['query_count_limit']:>10} max_code={row['max_code_length']:>6} "
                    f"cost={row['delay_cost']:>10} {'ok' if row['pass'] else 'VIOLATION'}"
                )
            ok = report["verdict"]
    except (WordError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_json(report, args.json)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
