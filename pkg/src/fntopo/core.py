"""Functions as data, and the iteration / reachability primitives.

Two kinds of self-map are supported:

* :class:`FiniteFunction` -- an explicit table on a finite set of
  non-negative integers.
* :class:`SymbolicMap` -- a lazily evaluated rule on an unbounded integer
  domain, with a predicate for the declared domain and another for terminal
  (base) elements at which iteration stops.

Python integers are arbitrary precision, so symbolic iteration never
overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Union

from fntopo.errors import DomainEscape, InvalidFunction, TerminalHit, UnknownElement, ClosureError, DuplicateError

DEFAULT_BUDGET = 10_000


class FiniteFunction:
    """A total endofunction ``f: A -> A`` on a finite set ``A`` of naturals.

    Immutable once built. Elements are kept sorted so every derived
    structure is deterministic.
    """

    __slots__ = ("_table", "_domain")

    def __init__(self, table: Mapping[int, int]):
        if not table:
            raise InvalidFunction("domain must be non-empty")
        clean = {}
        for x, y in table.items():
            if not isinstance(x, int) or not isinstance(y, int) or x < 0 or y < 0:
                raise InvalidFunction(f"entries must be non-negative integers, got {x!r}->{y!r}")
            clean[x] = y
        for x, y in sorted(clean.items()):
            if y not in clean:
                raise ClosureError(x, y)
        object.__setattr__(self, "_table", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "_domain", tuple(sorted(clean)))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteFunction is immutable")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FiniteFunction":
        table: dict[int, int] = {}
        for x, y in pairs:
            if x in table:
                raise DuplicateError(x)
            table[x] = y
        return cls(table)

    @classmethod
    def from_list(cls, images: Iterable[int]) -> "FiniteFunction":
        """Build ``f`` on ``{0..n-1}`` with ``f(i) = images[i]``."""
        return cls(dict(enumerate(images)))

    @property
    def table(self) -> Mapping[int, int]:
        return self._table

    @property
    def domain(self) -> tuple[int, ...]:
        return self._domain

    def __call__(self, x: int) -> int:
        try:
            return self._table[x]
        except KeyError:
            raise UnknownElement(x) from None

    def __contains__(self, x) -> bool:
        return x in self._table

    def __len__(self) -> int:
        return len(self._domain)

    def __iter__(self):
        return iter(self._domain)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return self._table == other._table

    def __hash__(self) -> int:
        return hash(tuple(self._table.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {y}" for x, y in self._table.items())
        return f"FiniteFunction({{{body}}})"

    def relabel(self, sigma: Mapping[int, int]) -> "FiniteFunction":
        """Return ``sigma o f o sigma^-1`` for a bijection ``sigma`` on labels."""
        return FiniteFunction({sigma[x]: sigma[y] for x, y in self._table.items()})

    def as_symbolic(self, name: str = "table") -> "SymbolicMap":
        """View the table as a symbolic map with no terminal elements."""
        table = self._table
        return SymbolicMap(
            name=name,
            apply=table.__getitem__,
            domain_predicate=table.__contains__,
            base_predicate=lambda x: False,
        )


def _never(x: int) -> bool:
    return False


@dataclass(frozen=True)
class SymbolicMap:
    """A self-map on an unbounded integer domain.

    ``family`` and ``params`` tag the built-in analytic families; they are
    what termination and chain classification inspect to issue certificates.
    A user-supplied map leaves ``family`` as ``None`` and only ever gets
    exploration-based (never certified) verdicts. ``descending`` is the
    user's declaration that the map moves every value strictly towards the
    base set.
    """

    name: str
    apply: Callable[[int], int]
    domain_predicate: Callable[[int], bool]
    base_predicate: Callable[[int], bool] = _never
    family: str | None = None
    params: tuple = ()
    descending: bool = False

    def __call__(self, x: int) -> int:
        return self.apply(x)

    def admits(self, x: int) -> bool:
        return bool(self.domain_predicate(x) or self.base_predicate(x))


AnyMap = Union[FiniteFunction, SymbolicMap]


@dataclass(frozen=True)
class ReachedBase:
    steps: int


@dataclass(frozen=True)
class EnteredCycle:
    cycle: tuple[int, ...]
    tail_length: int


@dataclass(frozen=True)
class BudgetExhausted:
    budget: int


Outcome = Union[ReachedBase, EnteredCycle, BudgetExhausted]


@dataclass(frozen=True)
class OrbitResult:
    trace: tuple[int, ...]
    outcome: Outcome = field()

    @property
    def start(self) -> int:
        return self.trace[0]


def iterate(f: AnyMap, x: int, n: int) -> int:
    """Return ``f^(n)(x)``.

    Raises
    ------
    UnknownElement
        ``x`` is not in the domain of a finite table.
    DomainEscape
        An intermediate value of a symbolic map leaves its domain.
    TerminalHit
        A symbolic map reaches a terminal element with steps remaining.
    """
    if n < 0:
        raise ValueError("step count must be non-negative")
    if isinstance(f, FiniteFunction):
        if x not in f:
            raise UnknownElement(x)
        for _ in range(n):
            x = f.table[x]
        return x
    if not f.admits(x):
        raise DomainEscape(x, 0)
    for step in range(n):
        if f.base_predicate(x):
            raise TerminalHit(x, n - step)
        x = f.apply(x)
        if not f.admits(x):
            raise DomainEscape(x, step + 1)
    return x


def precedes(f: FiniteFunction, x: int, y: int) -> int | None:
    """Decide ``x`` is functionally less than ``y``: is ``y`` on the orbit of ``x``?

    Returns the minimal ``n`` with ``f^(n)(x) = y``, or ``None``. The walk
    stops after ``|A|`` applications since a finite orbit must repeat by
    then.
    """
    for v in (x, y):
        if v not in f:
            raise UnknownElement(v)
    cur = x
    for n in range(len(f)):
        if cur == y:
            return n
        cur = f.table[cur]
    return None


def functionally_equal(f: FiniteFunction, x: int, y: int) -> bool:
    if x == y:
        if x not in f:
            raise UnknownElement(x)
        return True
    return precedes(f, x, y) is not None and precedes(f, y, x) is not None


def orbit(m: AnyMap, x: int, budget: int = DEFAULT_BUDGET) -> OrbitResult:
    """Iterate from ``x`` until a terminal element, a repeat, or ``budget`` steps."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if isinstance(m, FiniteFunction):
        m = m.as_symbolic()
    if not m.admits(x):
        raise DomainEscape(x, 0)
    trace = [x]
    seen = {x: 0}
    cur = x
    steps = 0
    while True:
        if m.base_predicate(cur):
            return OrbitResult(tuple(trace), ReachedBase(steps))
        if steps == budget:
            return OrbitResult(tuple(trace), BudgetExhausted(budget))
        cur = m.apply(cur)
        steps += 1
        if not m.admits(cur):
            raise DomainEscape(cur, steps)
        if cur in seen:
            i = seen[cur]
            return OrbitResult(tuple(trace), EnteredCycle(tuple(trace[i:]), i))
        seen[cur] = len(trace)
        trace.append(cur)
