"""Termination verdicts and ranking functions.

A finite table always terminates once its base set is given values, so
``classify_termination`` is total. Infinite (symbolic) maps only get a
definite verdict from an analytic certificate, never from exploration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from fntopo.core import DEFAULT_BUDGET, FiniteFunction, OrbitResult, ReachedBase, SymbolicMap, orbit
from fntopo.isomorphism import Mode, is_ordinally_isomorphic
from fntopo.topology import Topology, base_conditions_required, bfs_from_base, build_topology


class Status(str, enum.Enum):
    TERMINATING = "Terminating"
    NON_TERMINATING = "NonTerminating"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TermVerdict:
    status: Status
    certificate: str
    required_base_conditions: frozenset[int] | None = None
    probes: Mapping[int, OrbitResult] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.status is Status.TERMINATING and not self.required_base_conditions:
            raise ValueError("a Terminating verdict must name its base conditions")
        if self.status is not Status.TERMINATING and self.required_base_conditions is not None:
            raise ValueError("base conditions are only attached to Terminating verdicts")


@dataclass(frozen=True)
class RankMap:
    rank: Mapping[int, int]

    def __getitem__(self, x: int) -> int:
        return self.rank[x]

    def __iter__(self):
        return iter(self.rank)

    def items(self):
        return self.rank.items()


@dataclass(frozen=True)
class RankCheck:
    valid: bool
    violation: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def classify_termination(f: FiniteFunction) -> TermVerdict:
    t = build_topology(f)
    base = base_conditions_required(t)
    return TermVerdict(
        Status.TERMINATING,
        f"finite poset with enumerable base set: every orbit of the {len(f)} elements "
        f"reaches one of {len(t.base_set)} base class(es) within {len(f)} steps",
        base,
    )


def transfer_termination(g: FiniteFunction, reference: FiniteFunction, mode: Mode | str = Mode.CLASS_LEVEL) -> TermVerdict:
    """Inherit the verdict of a known-terminating ``reference`` through an ordinal isomorphism."""
    witness = is_ordinally_isomorphic(g, reference, mode)
    if witness is None:
        return TermVerdict(Status.UNKNOWN, "not ordinally isomorphic to the reference; nothing to inherit")
    ref = classify_termination(reference)
    t = build_topology(g)
    pairs = ", ".join(f"{a}->{b}" for a, b in sorted(witness.items()))
    return TermVerdict(
        Status.TERMINATING,
        f"ordinally isomorphic to a terminating reference ({ref.status.value}); class witness {pairs}",
        base_conditions_required(t),
    )


def classify_termination_symbolic(
    m: SymbolicMap,
    probe: Iterable[int],
    budget: int = DEFAULT_BUDGET,
) -> TermVerdict:
    """Verdict for a map on an unbounded domain.

    Built-in families with a closed-form argument get Terminating /
    NonTerminating. A user map declared ``descending`` whose probes all
    reach base gets Terminating. Everything else is Unknown, with the
    probe orbits attached.
    """
    probe = list(probe)
    if m.family == "predecessor":
        return TermVerdict(
            Status.TERMINATING,
            "analytic: predecessor strictly decreases on N and every orbit reaches base {0}",
            frozenset({0}),
        )
    if m.family in ("successor", "integer_successor", "split"):
        return TermVerdict(
            Status.NON_TERMINATING,
            f"analytic: {m.name} has no base set; every orbit grows without bound",
        )
    if m.family == "affine":
        a, b = m.params
        if a >= 1 and b >= 1:
            return TermVerdict(
                Status.NON_TERMINATING,
                f"analytic: x -> {a}x+{b} is strictly increasing on N with no base set",
            )

    results = {x: orbit(m, x, budget) for x in probe}
    reached = [r for r in results.values() if isinstance(r.outcome, ReachedBase)]
    all_reached = bool(results) and len(reached) == len(results)
    if m.descending and all_reached:
        base = frozenset(r.trace[-1] for r in reached)
        return TermVerdict(
            Status.TERMINATING,
            f"declared descending and all {len(results)} probes reached base within {budget} steps",
            base,
            MappingProxyType(results),
        )
    if all_reached:
        note = (
            f"all {len(results)} probes reached base within {budget} steps, "
            f"but no descent certificate exists for {m.name}"
        )
    else:
        note = f"{len(reached)}/{len(results)} probes reached base within {budget} steps"
    return TermVerdict(Status.UNKNOWN, note, None, MappingProxyType(results))


def extract_ranking(t: Topology, f: FiniteFunction) -> RankMap:
    """Rank = number of applications of ``f`` needed to reach a base-set class."""
    dist = bfs_from_base(t, f)
    return RankMap(MappingProxyType(dict(sorted(dist.items()))))


def verify_ranking(f: FiniteFunction, r: RankMap | Mapping[int, int]) -> RankCheck:
    """Check strict descent of ``r`` along ``f`` off the base set.

    A non-base element must have positive rank (nothing can descend from
    0) and its image must rank strictly lower. Base elements are exempt.
    The smallest violating element is reported.
    """
    rank = r.rank if isinstance(r, RankMap) else r
    base = build_topology(f).base_elements()
    for x in f.domain:
        if x in base:
            continue
        if rank[x] <= 0 or rank[f.table[x]] >= rank[x]:
            return RankCheck(False, x)
    return RankCheck(True)
