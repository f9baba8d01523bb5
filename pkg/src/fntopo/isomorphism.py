"""Ordinal isomorphism, order embedding and chain classification.

Two induced topologies are ordinally isomorphic when their Hasse forests
are isomorphic as rooted forests. That is decided here by comparing
canonical parenthesis codes: a leaf is ``()``, and an inner node wraps the
sorted concatenation of its children's codes.

By default a class is a point, whatever its size. In ``strict`` mode each
root code is prefixed with its cycle length, so a 3-cycle and a fixed point
stop being interchangeable.
"""

from __future__ import annotations

import enum
import os
import sys
from collections import defaultdict
from dataclasses import dataclass
from typing import Union

from fntopo.core import FiniteFunction, SymbolicMap
from fntopo.errors import SizeLimit
from fntopo.topology import Topology, build_topology

DEFAULT_EMBED_LIMIT = 200
EMBED_LIMIT_ENV = "FNTOPO_EMBED_LIMIT"


class Mode(str, enum.Enum):
    CLASS_LEVEL = "class"
    STRICT_CYCLE_LENGTH = "strict"


@dataclass(frozen=True)
class CanonicalCode:
    trees: tuple[str, ...]
    mode: Mode = Mode.CLASS_LEVEL

    def __str__(self) -> str:
        return " ".join(self.trees)


def _postorder(t: Topology) -> list[int]:
    order = []
    stack = list(t.roots)
    while stack:
        c = stack.pop()
        order.append(c)
        stack.extend(t.children(c))
    order.reverse()
    return order


def subtree_codes(t: Topology, mode: Mode | str = Mode.CLASS_LEVEL) -> list[str]:
    """Canonical code of the subtree under each class, indexed by class id."""
    mode = Mode(mode)
    codes = [""] * len(t)
    for c in _postorder(t):
        inner = "".join(sorted(codes[k] for k in t.children(c)))
        code = "(" + inner + ")"
        if mode is Mode.STRICT_CYCLE_LENGTH and c in t.base_set:
            code = str(len(t.classes[c].members)) + code
        codes[c] = code
    return codes


def canonical_code(t: Topology, mode: Mode | str = Mode.CLASS_LEVEL) -> CanonicalCode:
    mode = Mode(mode)
    codes = subtree_codes(t, mode)
    return CanonicalCode(tuple(sorted(codes[r] for r in t.roots)), mode)


def _topology(x: Union[Topology, FiniteFunction]) -> Topology:
    return x if isinstance(x, Topology) else build_topology(x)


def is_ordinally_isomorphic(
    f: Union[FiniteFunction, Topology],
    g: Union[FiniteFunction, Topology],
    mode: Mode | str = Mode.CLASS_LEVEL,
) -> dict[int, int] | None:
    """Return a class bijection witnessing the isomorphism, or ``None``.

    The witness maps class ids of ``f`` to class ids of ``g``. Siblings
    with equal codes are paired in order of their smallest member.
    """
    t1, t2 = _topology(f), _topology(g)
    if len(t1) != len(t2):
        return None
    c1, c2 = subtree_codes(t1, mode), subtree_codes(t2, mode)
    if sorted(c1[r] for r in t1.roots) != sorted(c2[r] for r in t2.roots):
        return None

    witness: dict[int, int] = {}
    pending = [(t1.roots, t2.roots)]
    while pending:
        xs, ys = pending.pop()
        by_code1, by_code2 = defaultdict(list), defaultdict(list)
        for x in xs:
            by_code1[c1[x]].append(x)
        for y in ys:
            by_code2[c2[y]].append(y)
        for code, group in by_code1.items():
            left = sorted(group, key=lambda k: t1.classes[k].smallest)
            right = sorted(by_code2[code], key=lambda k: t2.classes[k].smallest)
            for x, y in zip(left, right):
                witness[x] = y
                pending.append((t1.children(x), t2.children(y)))
    return witness


def embed_limit() -> int:
    raw = os.environ.get(EMBED_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_EMBED_LIMIT


class _Embedder:
    """Exact order-embedding search between two forests.

    ``place(A, B)`` asks whether the subtrees rooted at the classes ``A``
    of the source fit below pairwise-incomparable positions inside the
    subtrees rooted at ``B`` in the target. Taking the first target root
    ``b``, either some ``a`` maps exactly onto ``b`` (its children then go
    into ``b``'s children), or nothing maps onto ``b`` and ``b`` is replaced
    by its children.
    """

    def __init__(self, src: Topology, dst: Topology):
        self.src, self.dst = src, dst
        self.size1 = self._sizes(src)
        self.size2 = self._sizes(dst)
        self.height1 = self._heights(src)
        self.height2 = self._heights(dst)
        self.memo: dict = {}

    @staticmethod
    def _sizes(t: Topology) -> list[int]:
        size = [1] * len(t)
        for c in _postorder(t):
            size[c] += sum(size[k] for k in t.children(c))
        return size

    @staticmethod
    def _heights(t: Topology) -> list[int]:
        h = [0] * len(t)
        for c in _postorder(t):
            h[c] = 1 + max((h[k] for k in t.children(c)), default=-1)
        return h

    def place(self, A: frozenset, B: frozenset) -> dict[int, int] | None:
        if not A:
            return {}
        if not B:
            return None
        key = (A, B)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None
        result = self._place(A, B)
        self.memo[key] = result
        return result

    def _place(self, A: frozenset, B: frozenset) -> dict[int, int] | None:
        if sum(self.size1[a] for a in A) > sum(self.size2[b] for b in B):
            return None
        if max(self.height1[a] for a in A) > max(self.height2[b] for b in B):
            return None
        b = min(B, key=lambda k: (-self.size2[k], k))
        rest = B - {b}
        for a in sorted(A):
            if self.size1[a] > self.size2[b] or self.height1[a] > self.height2[b]:
                continue
            below = self.place(frozenset(self.src.children(a)), frozenset(self.dst.children(b)))
            if below is None:
                continue
            others = self.place(A - {a}, rest)
            if others is None:
                continue
            return {a: b, **below, **others}
        return self.place(A, rest | frozenset(self.dst.children(b)))


def embeds_into(
    t1: Union[Topology, FiniteFunction],
    t2: Union[Topology, FiniteFunction],
    limit: int | None = None,
) -> dict[int, int] | None:
    """Find an injective class map ``phi`` with ``C < D`` iff ``phi(C) < phi(D)``.

    Returns the map (class ids of ``t1`` to class ids of ``t2``) or ``None``.
    Embedding unordered forests is NP-complete, so the exact search is
    guarded by a class-count cutoff (``FNTOPO_EMBED_LIMIT``, default 200).

    Raises
    ------
    SizeLimit
        Either topology has more classes than the cutoff.
    """
    t1, t2 = _topology(t1), _topology(t2)
    limit = embed_limit() if limit is None else limit
    for t in (t1, t2):
        if len(t) > limit:
            raise SizeLimit(len(t), limit)
    if len(t1) > len(t2):
        return None
    needed = 4 * (len(t1) + len(t2)) + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    return _Embedder(t1, t2).place(frozenset(t1.roots), frozenset(t2.roots))


class ChainKind(str, enum.Enum):
    FINITE_CHAIN = "FiniteChain"
    DESCENDING_TO_BASE = "DescendingToBase"
    ASCENDING_UNBOUNDED = "AscendingUnbounded"
    DOUBLY_UNBOUNDED = "DoublyUnbounded"
    NOT_A_CHAIN = "NotAChain"
    UNKNOWN = "Unknown"


_P_KINDS = {ChainKind.DESCENDING_TO_BASE}
_S_KINDS = {ChainKind.ASCENDING_UNBOUNDED, ChainKind.DOUBLY_UNBOUNDED}


@dataclass(frozen=True)
class ChainClass:
    kind: ChainKind
    evidence: str
    length: int | None = None

    def __post_init__(self):
        if self.kind is ChainKind.FINITE_CHAIN and (self.length is None or self.length < 1):
            raise ValueError("FiniteChain needs a length >= 1")

    @property
    def is_p_type(self) -> bool:
        """Verdict places the subject with the predecessor function (surely terminating)."""
        return self.kind in _P_KINDS

    @property
    def is_s_type(self) -> bool:
        """Verdict places the subject with the successor function (surely non-terminating)."""
        return self.kind in _S_KINDS

    def __str__(self) -> str:
        head = self.kind.value if self.length is None else f"{self.kind.value}({self.length})"
        return f"{head}: {self.evidence}"


_WORDS = {1: "one", 2: "two", 3: "three", 4: "four", 5: "five", 6: "six", 7: "seven", 8: "eight", 9: "nine"}


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def explore_window(m: SymbolicMap, window: tuple[int, int]) -> dict:
    """Summarize the functional graph of ``m`` restricted to ``[lo, hi]``.

    Returns the admitted nodes, the number of weakly connected pieces,
    whether every piece is a path, and the in-window generators (nodes
    without an in-window preimage), ordered by distance from 0.
    """
    lo, hi = window
    nodes = [x for x in range(lo, hi + 1) if m.admits(x)]
    node_set = set(nodes)
    succ = {}
    indeg = dict.fromkeys(nodes, 0)
    for x in nodes:
        if m.base_predicate(x):
            continue
        y = m.apply(x)
        if y in node_set and y != x:
            succ[x] = y
            indeg[y] += 1

    # union-find over window edges
    root = {x: x for x in nodes}

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for x, y in succ.items():
        rx, ry = find(x), find(y)
        if rx != ry:
            root[rx] = ry
    pieces = {find(x) for x in nodes}
    is_paths = all(d <= 1 for d in indeg.values())
    generators = sorted((x for x in nodes if indeg[x] == 0), key=lambda v: (abs(v), v < 0))
    return {"nodes": nodes, "pieces": len(pieces), "paths": is_paths, "generators": generators}


def _window_text(summary: dict, window) -> str:
    n = summary["pieces"]
    noun = "chains" if summary["paths"] else "trees"
    if n == 1:
        noun = noun[:-1]
    count = _WORDS.get(n, str(n))
    return f"{count} {noun}, generators {_fmt_set(summary['generators'])} (window [{window[0]}, {window[1]}])"


def _classify_topology(t: Topology) -> ChainClass:
    is_chain = len(t.roots) == 1 and all(len(t.children(c)) <= 1 for c in range(len(t)))
    if is_chain:
        return ChainClass(ChainKind.FINITE_CHAIN, f"single tree of {len(t)} classes, each with at most one child", len(t))
    gens = sorted(x for c in t.generator_set for x in t.classes[c].members)
    return ChainClass(
        ChainKind.NOT_A_CHAIN,
        f"{len(t.roots)} tree(s), generators {_fmt_set(gens)}",
    )


def classify_chain(
    subject: Union[Topology, FiniteFunction, SymbolicMap],
    window: tuple[int, int] = (-8, 8),
) -> ChainClass:
    """Place a subject among finite chains, [P]-like and [S]-like chains.

    Finite subjects are classified exactly. Symbolic maps receive the
    descending or unbounded verdicts only for built-in families whose
    closed form proves it; anything else is explored over ``window`` and
    reported as ``Unknown``, since exploration alone never proves
    unboundedness.
    """
    if isinstance(subject, (Topology, FiniteFunction)):
        return _classify_topology(_topology(subject))

    m = subject
    summary = explore_window(m, window)
    seen = _window_text(summary, window)
    if m.family == "predecessor":
        return ChainClass(
            ChainKind.DESCENDING_TO_BASE,
            "analytic: x -> x-1 strictly decreases on N\\{0} and stops at base {0}; no generator",
        )
    if m.family == "successor":
        return ChainClass(
            ChainKind.ASCENDING_UNBOUNDED,
            "analytic: x -> x+1 strictly increases on N; generator {0}, no base",
        )
    if m.family == "integer_successor":
        return ChainClass(
            ChainKind.DOUBLY_UNBOUNDED,
            "analytic: x -> x+1 is a bijection on Z; neither base nor generator",
        )
    if m.family == "affine":
        a, b = m.params
        if a >= 1 and b >= 1:
            return ChainClass(
                ChainKind.ASCENDING_UNBOUNDED,
                f"analytic: x -> {a}x+{b} > x for all x >= 0 (a >= 1, b >= 1); generator {{0}}, no base",
            )
        return ChainClass(ChainKind.UNKNOWN, f"affine a={a}, b={b} outside certified region; explored {seen}")
    if m.family == "split":
        return ChainClass(
            ChainKind.NOT_A_CHAIN,
            f"{seen}; analytic: x >= 0 and x < 0 are each closed under the map, so the orbits never meet",
        )
    return ChainClass(ChainKind.UNKNOWN, f"no analytic certificate for {m.name}; explored {seen}")
