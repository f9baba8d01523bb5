import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fntopo import (
    BudgetExhausted,
    EnteredCycle,
    FiniteFunction,
    ReachedBase,
    functionally_equal,
    iterate,
    orbit,
    precedes,
)
from fntopo.builtins import affine, collatz, predecessor, split, successor
from fntopo.errors import ClosureError, DomainEscape, InvalidFunction, TerminalHit, UnknownElement
from fntopo.core import SymbolicMap

from conftest import tables
from oracles import brute_precedes


class TestFiniteFunction:
    def test_closure_checked(self):
        with pytest.raises(ClosureError):
            FiniteFunction({0: 1})

    def test_empty_rejected(self):
        with pytest.raises(InvalidFunction):
            FiniteFunction({})

    def test_negative_rejected(self):
        with pytest.raises(InvalidFunction):
            FiniteFunction({-1: -1})

    def test_immutable(self, fig1):
        with pytest.raises(AttributeError):
            fig1.foo = 1
        with pytest.raises(TypeError):
            fig1.table[0] = 0

    def test_relabel(self, fig1):
        g = fig1.relabel({0: 5, 1: 4, 2: 3, 3: 2, 4: 1, 5: 0})
        assert g(5) == 3 and g(2) == 1


def test_iterate_fig1(fig1):
    assert iterate(fig1, 0, 2) == 3


def test_iterate_zero_steps(fig1):
    for x in fig1.domain:
        assert iterate(fig1, x, 0) == x


def test_iterate_collatz():
    assert iterate(collatz(), 3, 2) == 8


def test_iterate_unknown(fig1):
    with pytest.raises(UnknownElement):
        iterate(fig1, 9, 1)


def test_iterate_terminal_hit():
    with pytest.raises(TerminalHit):
        iterate(collatz(), 4, 5)
    assert iterate(collatz(), 4, 2) == 1


def test_iterate_domain_escape():
    bad = SymbolicMap("down", lambda x: x - 1, lambda x: x >= 0)
    with pytest.raises(DomainEscape):
        iterate(bad, 1, 3)


def test_precedes_examples(fig1):
    assert precedes(fig1, 0, 4) == 3
    assert precedes(fig1, 2, 1) is None
    for x in fig1.domain:
        assert precedes(fig1, x, x) == 0
    with pytest.raises(UnknownElement):
        precedes(fig1, 0, 42)


def test_functionally_equal_examples(fig1):
    assert functionally_equal(fig1, 3, 5)
    assert functionally_equal(fig1, 1, 1)
    assert not functionally_equal(fig1, 0, 2)


@given(tables())
def test_precedes_reflexive_transitive_minimal(f):
    d = f.domain
    for x in d:
        assert precedes(f, x, x) == 0
        for y in d:
            n = precedes(f, x, y)
            assert n == brute_precedes(f, x, y)
            if n is not None:
                assert iterate(f, x, n) == y
                assert all(iterate(f, x, k) != y for k in range(n))
                for z in d:
                    if precedes(f, y, z) is not None:
                        assert precedes(f, x, z) is not None


def test_orbit_collatz_six():
    r = orbit(collatz(), 6, 100)
    assert r.trace == (6, 3, 5, 8, 4, 2, 1)
    assert r.outcome == ReachedBase(6)


def test_orbit_start_is_base():
    r = orbit(collatz(), 1)
    assert r.outcome == ReachedBase(0) and r.trace == (1,)


def test_orbit_successor_budget():
    r = orbit(successor(), 0, 50)
    assert r.outcome == BudgetExhausted(50)
    assert len(r.trace) == 51


def test_orbit_fig1_cycle(fig1):
    r = orbit(fig1, 0, 100)
    assert r.trace == (0, 2, 3, 4, 5)
    assert r.outcome == EnteredCycle((3, 4, 5), 2)


def test_orbit_big_integers():
    r = orbit(affine(3, 1), 1, 200)
    assert r.trace[-1] > 2**300  # exact, no overflow
    assert r.trace[5] == 3 * r.trace[4] + 1


def test_orbit_domain_escape():
    with pytest.raises(DomainEscape):
        orbit(predecessor(), -3)


def test_orbit_budget_validated():
    with pytest.raises(ValueError):
        orbit(split(), 0, 0)


@settings(max_examples=200)
@given(tables(max_size=15), st.integers(1, 30), st.data())
def test_orbit_trichotomy_on_tables(f, budget, data):
    x = data.draw(st.sampled_from(f.domain))
    r = orbit(f, x, budget)
    assert len(r.trace) <= budget + 1
    for a, b in zip(r.trace, r.trace[1:]):
        assert f(a) == b
    assert not isinstance(r.outcome, ReachedBase)
    if budget >= len(f):
        assert isinstance(r.outcome, EnteredCycle)
    if isinstance(r.outcome, EnteredCycle):
        cyc = r.outcome.cycle
        assert len(set(cyc)) == len(cyc)
        assert f(cyc[-1]) == cyc[0]
