"""Built-in symbolic maps.

Each carries a ``family`` tag; termination and chain classification only
issue analytic certificates for these tags.
"""

from __future__ import annotations

from fntopo.core import SymbolicMap

BUILTIN_NAMES = ("collatz", "successor", "predecessor", "split", "affine")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def collatz() -> SymbolicMap:
    """Argument map of the 3x+1 recursion: halve evens, odd x -> (3x+1)/2, stop at 1."""

    def step(x: int) -> int:
        return x // 2 if x % 2 == 0 else (3 * x + 1) // 2

    return SymbolicMap(
        name="collatz",
        apply=step,
        domain_predicate=lambda x: _is_int(x) and x > 1,
        base_predicate=lambda x: x == 1,
        family="collatz",
    )


def successor() -> SymbolicMap:
    return SymbolicMap(
        name="successor",
        apply=lambda x: x + 1,
        domain_predicate=lambda x: _is_int(x) and x >= 0,
        family="successor",
    )


def predecessor() -> SymbolicMap:
    return SymbolicMap(
        name="predecessor",
        apply=lambda x: x - 1,
        domain_predicate=lambda x: _is_int(x) and x >= 1,
        base_predicate=lambda x: x == 0,
        family="predecessor",
        descending=True,
    )


def integer_successor() -> SymbolicMap:
    """``x -> x + 1`` on all of Z: a chain with neither a base nor a generator."""
    return SymbolicMap(
        name="integer_successor",
        apply=lambda x: x + 1,
        domain_predicate=_is_int,
        family="integer_successor",
    )


def split() -> SymbolicMap:
    """Z split at 0 into two upward chains: ``x+1`` for ``x >= 0``, ``x-1`` otherwise."""
    return SymbolicMap(
        name="split",
        apply=lambda x: x + 1 if x >= 0 else x - 1,
        domain_predicate=_is_int,
        family="split",
    )


def affine(a: int, b: int) -> SymbolicMap:
    if not (_is_int(a) and _is_int(b)):
        raise ValueError("affine parameters must be integers")
    if a < 0:
        raise ValueError(f"affine requires a >= 0, got a={a}")
    return SymbolicMap(
        name=f"affine(a={a},b={b})",
        apply=lambda x: a * x + b,
        domain_predicate=lambda x: _is_int(x) and x >= 0,
        family="affine",
        params=(a, b),
    )


def builtin(name: str, a: int | None = None, b: int | None = None) -> SymbolicMap:
    if name == "affine":
        if a is None or b is None:
            raise ValueError("affine requires both a and b")
        return affine(a, b)
    factories = {
        "collatz": collatz,
        "successor": successor,
        "predecessor": predecessor,
        "split": split,
        "integer_successor": integer_successor,
    }
    try:
        return factories[name]()
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
