"""Linear recurrences rewritten as a single recursive call.

``f(n) = c + a_1 f(n-1) + ... + a_B f(n-B)`` with ``f(i) = d_i`` for
``i < B`` is evaluated by carrying a window of the last ``B`` values and
the remaining index, so each step makes exactly one "call" and the index
drops by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from fntopo.core import FiniteFunction
from fntopo.errors import IndexBelowMemory
from fntopo.topology import Topology, build_topology


@dataclass(frozen=True)
class RecurrenceSpec:
    memory: int
    const: int
    coeffs: tuple[int, ...]
    bases: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "bases", tuple(self.bases))
        if self.memory < 1:
            raise ValueError("memory must be at least 1")
        if len(self.coeffs) != self.memory or len(self.bases) != self.memory:
            raise ValueError(f"need exactly {self.memory} coefficients and base values")
        if self.coeffs[-1] == 0:
            raise ValueError("deepest coefficient must be non-zero")

    @classmethod
    def fibonacci(cls) -> "RecurrenceSpec":
        return cls(2, 0, (1, 1), (0, 1))


@dataclass(frozen=True)
class AccumulatorState:
    window: tuple[int, ...]
    n: int


def accumulator_step(spec: RecurrenceSpec, s: AccumulatorState) -> AccumulatorState:
    """Shift the window left and append the next value; decrement the index.

    The oldest window entry pairs with the deepest coefficient ``a_B``.
    """
    B = spec.memory
    if s.n < B:
        raise IndexBelowMemory(s.n, B)
    if len(s.window) != B:
        raise ValueError(f"window must hold {B} values")
    nxt = spec.const + sum(spec.coeffs[B - i] * s.window[i - 1] for i in range(1, B + 1))
    return AccumulatorState(s.window[1:] + (nxt,), s.n - 1)


def run_accumulator(spec: RecurrenceSpec, n: int) -> tuple[int, int]:
    """Evaluate ``f(n)`` iteratively; return ``(value, steps taken)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    state = AccumulatorState(spec.bases, n)
    steps = 0
    while state.n >= spec.memory:
        state = accumulator_step(spec, state)
        steps += 1
    return state.window[state.n], steps


def eval_accumulator(spec: RecurrenceSpec, n: int) -> int:
    return run_accumulator(spec, n)[0]


def eval_naive(spec: RecurrenceSpec, n: int) -> int:
    """Reference evaluation: the recurrence as written, memoized."""
    if n < 0:
        raise ValueError("n must be non-negative")
    memo: dict[int, int] = dict(enumerate(spec.bases))

    def f(k: int) -> int:
        if k not in memo:
            memo[k] = spec.const + sum(a * f(k - i) for i, a in enumerate(spec.coeffs, start=1))
        return memo[k]

    # warm the memo bottom-up in strides so recursion depth stays bounded
    for k in range(spec.memory, n, 100):
        f(k)
    return f(n)


def step_count(spec: RecurrenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return max(0, n - spec.memory + 1)


def index_map(spec: RecurrenceSpec, horizon: int) -> FiniteFunction:
    """The index argument's transition ``n -> n-1`` on ``0..horizon``; indices below B are fixed."""
    if horizon < spec.memory:
        raise ValueError(f"horizon must be at least the memory {spec.memory}")
    B = spec.memory
    return FiniteFunction({n: (n - 1 if n >= B else n) for n in range(horizon + 1)})


def projected_topology(spec: RecurrenceSpec, horizon: int) -> Topology:
    return build_topology(index_map(spec, horizon))
