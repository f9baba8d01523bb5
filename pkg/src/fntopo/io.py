"""Function-table parsing, DOT rendering and JSON analysis reports.

Table grammar, one entry per line::

    line := int ws int | '#' comment | blank

The domain is the set of sources. Every destination must also appear as a
source.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from fntopo import __version__
from fntopo.core import FiniteFunction
from fntopo.errors import ClosureError, DuplicateError, ParseError
from fntopo.isomorphism import Mode, canonical_code
from fntopo.termination import classify_termination, extract_ranking
from fntopo.topology import Topology, build_topology

REPORT_VERSION = 1


def parse_function_table(text: str) -> FiniteFunction:
    table: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'source destination', got {raw.strip()!r}")
        try:
            x, y = (int(p) for p in parts)
        except ValueError:
            raise ParseError(lineno, f"non-integer entry in {raw.strip()!r}") from None
        if x < 0 or y < 0:
            raise ParseError(lineno, "entries must be non-negative")
        if x in table:
            raise DuplicateError(x, lineno)
        table[x] = y
    if not table:
        raise ParseError(0, "table has no entries")
    for x, y in table.items():
        if y not in table:
            raise ClosureError(x, y)
    return FiniteFunction(table)


def read_function_table(path) -> FiniteFunction:
    return parse_function_table(Path(path).read_text())


def render_table(f: FiniteFunction) -> str:
    return "".join(f"{x} {y}\n" for x, y in f.table.items())


def export_dot(t: Topology, name: str = "topology") -> str:
    """Hasse forest as a Graphviz digraph, edges pointing from child to parent."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for c in t.classes:
        style = ", shape=box, style=bold" if c.id in t.base_set else ""
        lines.append(f'  c{c.id} [label="{c.label()}"{style}];')
    for child, parent in sorted(t.parent.items()):
        lines.append(f"  c{child} -> c{parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class AnalysisReport:
    version: int
    tool_version: str
    input: str
    domain_size: int
    classes: list[dict]
    parent_edges: list[list[int]]
    base_set: dict
    generator_set: dict
    fixed_point_set: dict
    canonical_code: dict
    termination: dict
    rank: list[list[int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        out = [f"input: {self.input}", f"domain size: {self.domain_size}", "classes:"]
        for c in self.classes:
            tag = " (cycle)" if c["is_cycle"] else ""
            members = ",".join(map(str, c["members"]))
            out.append(f"  [{c['id']}] {{{members}}}{tag}")
        out.append("edges: " + (", ".join(f"{a}->{b}" for a, b in self.parent_edges) or "none"))
        for label, part in (("base", self.base_set), ("generator", self.generator_set), ("fixed point", self.fixed_point_set)):
            out.append(f"{label} set: {_braces(part['elements'])}")
        out.append(f"canonical code ({self.canonical_code['mode']}): {' '.join(self.canonical_code['trees'])}")
        out.append(f"termination: {self.termination['status']} ({self.termination['certificate']})")
        out.append("rank: " + " ".join(f"{x}:{r}" for x, r in self.rank))
        return "\n".join(out) + "\n"


def _braces(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def _set_view(t: Topology, ids) -> dict:
    ids = sorted(ids)
    return {"classes": ids, "elements": sorted(x for c in ids for x in t.classes[c].members)}


def analyze(f: FiniteFunction, source: str = "<table>", mode: Mode | str = Mode.CLASS_LEVEL) -> AnalysisReport:
    t = build_topology(f)
    code = canonical_code(t, mode)
    verdict = classify_termination(f)
    ranks = extract_ranking(t, f)
    return AnalysisReport(
        version=REPORT_VERSION,
        tool_version=__version__,
        input=source,
        domain_size=len(f),
        classes=[{"id": c.id, "members": list(c.members), "is_cycle": c.is_cycle} for c in t.classes],
        parent_edges=[[c, p] for c, p in sorted(t.parent.items())],
        base_set=_set_view(t, t.base_set),
        generator_set=_set_view(t, t.generator_set),
        fixed_point_set=_set_view(t, t.fixed_point_set),
        canonical_code={"mode": code.mode.value, "trees": list(code.trees)},
        termination={
            "status": verdict.status.value,
            "required_base_conditions": sorted(verdict.required_base_conditions or ()),
            "certificate": verdict.certificate,
        },
        rank=[[x, r] for x, r in ranks.items()],
    )
