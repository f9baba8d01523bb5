"""Exit criteria for the package. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (lines are also shown
without ``-s``; they bypass capture).
"""

import random
import statistics
import time

import pytest

from fntopo import (
    ChainKind,
    FiniteFunction,
    Mode,
    ReachedBase,
    RecurrenceSpec,
    Status,
    base_conditions_required,
    build_topology,
    canonical_code,
    classify_chain,
    classify_termination_symbolic,
    embeds_into,
    eval_accumulator,
    eval_naive,
    extract_ranking,
    is_ordinally_isomorphic,
    orbit,
    projected_topology,
    verify_ranking,
)
from fntopo.builtins import affine, collatz, integer_successor, predecessor, split, successor
from fntopo.recurrence import run_accumulator

from oracles import brute_embeds, brute_isomorphic, chain, random_permutation, random_table


@pytest.fixture
def verdict(capsys):
    def report(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'} {title}" + (f" -- {detail}" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"

    return report


def _timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def test_c01_figure1(verdict):
    f = FiniteFunction({0: 2, 1: 2, 2: 3, 3: 4, 4: 5, 5: 3})

    def run():
        t = build_topology(f)
        return t.base_elements(), t.generator_elements(), t.fixed_point_elements()

    run()  # warm-up
    timings = []
    for _ in range(5):
        (base, gens, fixed), dt = _timed(run)
        timings.append(dt)
    dt = statistics.median(timings)
    ok = base == {3, 4, 5} and gens == {0, 1} and fixed == frozenset() and dt < 1e-3
    verdict(1, "Figure 1 base {3,4,5}, generators {0,1}, no fixed points", ok, f"median {dt * 1e6:.0f} us")


def test_c02_forest_structure(verdict):
    rng = random.Random(2)

    def run():
        violations = 0
        for _ in range(1000):
            t = build_topology(random_table(rng, rng.randint(1, 100)))
            for c in t.classes:
                in_base = c.id in t.base_set
                if in_base and not c.is_cycle:
                    violations += 1
                if not in_base and len(c.members) != 1:
                    violations += 1
        return violations

    violations, dt = _timed(run)
    verdict(2, "non-base classes are singletons, base classes are cycles", violations == 0 and dt < 5,
            f"{violations} violations in {dt:.2f} s")


def _pool(rng, count, max_classes, max_domain):
    pool = []
    while len(pool) < count:
        f = random_table(rng, rng.randint(1, max_domain))
        if len(build_topology(f)) <= max_classes:
            pool.append(f)
    return pool


def test_c03_isomorphism_soundness(verdict):
    rng = random.Random(3)
    pool = _pool(rng, 100, 7, 9)

    def run():
        codes = [canonical_code(build_topology(f)) for f in pool]
        disagreements = yes = 0
        for i in range(len(pool)):
            for j in range(i, len(pool)):
                fast = codes[i] == codes[j]
                slow = brute_isomorphic(pool[i], pool[j])
                disagreements += fast != slow
                yes += slow
        return disagreements, yes

    (disagreements, yes), dt = _timed(run)
    pairs = len(pool) * (len(pool) + 1) // 2
    verdict(3, "canonical codes agree with brute-force bijection search", disagreements == 0 and dt < 30,
            f"{pairs} pairs, {yes} isomorphic, {disagreements} disagreements, {dt:.2f} s")


def test_c04_relabeling_invariance(verdict):
    rng = random.Random(4)
    failures = 0
    for _ in range(100):
        f = random_table(rng, rng.randint(1, 50))
        g = f.relabel(random_permutation(rng, f))
        for mode in Mode:
            failures += canonical_code(build_topology(f), mode) != canonical_code(build_topology(g), mode)
    verdict(4, "canonical codes invariant under relabeling (both modes)", failures == 0, f"{failures} failures")


def test_c05_embedding(verdict):
    chains = {k: build_topology(chain(k)) for k in range(1, 21)}
    chain_errors = sum(
        (embeds_into(chains[k], chains[m]) is not None) != (k <= m) for k in chains for m in chains
    )
    rng = random.Random(5)
    pool = _pool(rng, 60, 6, 8)
    mutual_errors = brute_errors = 0
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            f, g = pool[i], pool[j]
            fg, gf = embeds_into(f, g) is not None, embeds_into(g, f) is not None
            brute_errors += (fg != brute_embeds(f, g)) + (gf != brute_embeds(g, f))
            mutual_errors += (fg and gf) != (is_ordinally_isomorphic(f, g) is not None)
    ok = chain_errors == brute_errors == mutual_errors == 0
    verdict(5, "chain_k embeds in chain_m iff k <= m; mutual embedding iff isomorphic", ok,
            f"chain errors {chain_errors}, brute-force disagreements {brute_errors}, mutual/iso disagreements {mutual_errors}")


def test_c06_fibonacci(verdict):
    fib = RecurrenceSpec.fibonacci()

    def run():
        bad = 0
        for n in range(301):
            value, steps = run_accumulator(fib, n)
            bad += value != eval_naive(fib, n) or steps != max(0, n - 1)
        return bad

    bad, dt = _timed(run)
    verdict(6, "accumulator Fibonacci equals direct recursion, steps = max(0, n-1)", bad == 0 and dt < 1,
            f"{bad} mismatches for n <= 300 in {dt:.3f} s")


def test_c07_linear_recurrences(verdict):
    rng = random.Random(7)
    mismatches = base_errors = 0
    for _ in range(50):
        B = rng.randint(1, 5)
        coeffs = [rng.randint(-9, 9) for _ in range(B)]
        if coeffs[-1] == 0:
            coeffs[-1] = rng.randint(1, 9)
        spec = RecurrenceSpec(B, rng.randint(-9, 9), coeffs, [rng.randint(-9, 9) for _ in range(B)])
        mismatches += sum(eval_accumulator(spec, n) != eval_naive(spec, n) for n in range(41))
        horizon = rng.randint(B, 40)
        base_errors += base_conditions_required(projected_topology(spec, horizon)) != set(range(B))
    verdict(7, "random B <= 5 recurrences match oracle; base conditions = {0..B-1}",
            mismatches == 0 and base_errors == 0, f"{mismatches} value mismatches, {base_errors} base-set errors")


def test_c08_ranking(verdict):
    rng = random.Random(8)
    violations = 0
    for _ in range(200):
        f = random_table(rng, rng.randint(1, 100))
        t = build_topology(f)
        r = extract_ranking(t, f)
        base = t.base_elements()
        violations += sum(1 for x in f.domain if x not in base and r[f(x)] != r[x] - 1)
        violations += not verify_ranking(f, r)
    verdict(8, "extracted ranks decrement by one off the base set and verify", violations == 0,
            f"{violations} violations over 200 tables")


def test_c09_p_s_separation(verdict):
    pred, succ, sp = classify_chain(predecessor()), classify_chain(successor()), classify_chain(split(), (-8, 8))
    subjects = [predecessor(), successor(), split(), collatz(), integer_successor(), affine(2, 1), affine(1, 0), affine(0, 5)]
    rng = random.Random(9)
    finite = [random_table(rng, rng.randint(1, 30)) for _ in range(100)]
    both = 0
    contradictions = 0
    for s in subjects + finite:
        c = classify_chain(s)
        both += c.is_p_type and c.is_s_type
        if not isinstance(s, FiniteFunction):
            status = classify_termination_symbolic(s, [1], budget=100).status
            contradictions += (c.is_p_type and status is Status.NON_TERMINATING) or (
                c.is_s_type and status is Status.TERMINATING
            )
    ok = (
        pred.kind is ChainKind.DESCENDING_TO_BASE
        and succ.kind is ChainKind.ASCENDING_UNBOUNDED
        and sp.kind is ChainKind.NOT_A_CHAIN
        and "two chains, generators {0, -1}" in sp.evidence
        and both == 0
        and contradictions == 0
    )
    verdict(9, "predecessor is [P]-type, successor [S]-type, split = two chains from {0, -1}", ok,
            f"P={pred.kind.value}, S={succ.kind.value}, split='{sp.evidence.split(';')[0]}'")


def test_c10_collatz(verdict):
    m = collatz()

    def run():
        misses = 0
        for x in range(1, 10_001):
            r = orbit(m, x, 10_000)
            misses += not (isinstance(r.outcome, ReachedBase) and r.trace[-1] == 1)
        return misses, classify_termination_symbolic(m, range(1, 10_001), 10_000)

    (misses, v), dt = _timed(run)
    ok = misses == 0 and v.status is Status.UNKNOWN and dt < 10
    verdict(10, "Collatz 1..10000 reach 1 within 10000 steps; global verdict stays Unknown", ok,
            f"{misses} misses, verdict {v.status.value}, {dt:.2f} s")
