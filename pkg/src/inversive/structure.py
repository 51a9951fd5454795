"""Component descriptors for functional-graph structures and their serial forms."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple, Union


class Verdict(enum.Enum):
    """Outcomes for which the analytic path makes no structural claim."""

    DELEGATED = "delegated"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class SelfLoop:
    count: int

    @property
    def size(self) -> int:
        return self.count

    def text(self) -> str:
        return f"self-loop×{self.count}"

    def to_dict(self) -> dict:
        return {"kind": "self-loop", "count": self.count}


@dataclass(frozen=True)
class CycleSet:
    length: int
    count: int

    @property
    def size(self) -> int:
        return self.length * self.count

    def text(self) -> str:
        return f"cycle({self.length})×{self.count}"

    def to_dict(self) -> dict:
        return {"kind": "cycle", "length": self.length, "count": self.count}


@dataclass(frozen=True)
class GComponent:
    """A cycle of length L whose one hub node receives n disjoint paths of length L."""

    L: int
    n: int

    @property
    def size(self) -> int:
        return self.L * (self.n + 1)

    def text(self) -> str:
        return f"G({self.L},{self.n})"

    def to_dict(self) -> dict:
        return {"kind": "G", "L": self.L, "n": self.n}


@dataclass(frozen=True)
class ConvergentTree:
    fixed_point: int
    depth_profile: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        prof = self.depth_profile
        if isinstance(prof, dict):
            prof = prof.items()
        object.__setattr__(
            self, "depth_profile", tuple(sorted((int(d), int(c)) for d, c in prof if c))
        )

    @property
    def size(self) -> int:
        return sum(c for _, c in self.depth_profile)

    @property
    def profile(self) -> Dict[int, int]:
        return dict(self.depth_profile)

    def text(self) -> str:
        prof = ", ".join(f"{d}:{c}" for d, c in self.depth_profile)
        return f"tree({self.fixed_point}; {prof})"

    def to_dict(self) -> dict:
        return {
            "kind": "tree",
            "fixed_point": self.fixed_point,
            "depth_profile": [[d, c] for d, c in self.depth_profile],
        }


@dataclass(frozen=True)
class OtherComponent:
    """A component matching none of the named shapes (enumerator output only)."""

    size: int
    cycle_length: int

    def text(self) -> str:
        return f"other(size={self.size}, cycle={self.cycle_length})"

    def to_dict(self) -> dict:
        return {"kind": "other", "size": self.size, "cycle_length": self.cycle_length}


Component = Union[SelfLoop, CycleSet, GComponent, ConvergentTree, OtherComponent]

_KIND_RANK = {ConvergentTree: 0, GComponent: 1, OtherComponent: 2, CycleSet: 3, SelfLoop: 4}


def _sort_key(c: Component):
    if isinstance(c, ConvergentTree):
        rest = (c.fixed_point, c.depth_profile)
    elif isinstance(c, GComponent):
        rest = (c.L, c.n)
    elif isinstance(c, OtherComponent):
        rest = (c.cycle_length, c.size)
    elif isinstance(c, CycleSet):
        rest = (c.length, c.count)
    else:
        rest = (c.count,)
    return (_KIND_RANK[type(c)], rest)


def component_from_dict(d: dict) -> Component:
    kind = d["kind"]
    if kind == "self-loop":
        return SelfLoop(int(d["count"]))
    if kind == "cycle":
        return CycleSet(int(d["length"]), int(d["count"]))
    if kind == "G":
        return GComponent(int(d["L"]), int(d["n"]))
    if kind == "tree":
        return ConvergentTree(int(d["fixed_point"]), tuple(map(tuple, d["depth_profile"])))
    if kind == "other":
        return OtherComponent(int(d["size"]), int(d["cycle_length"]))
    raise ValueError(f"unknown component kind {kind!r}")


@dataclass(frozen=True)
class GraphStructure:
    components: Tuple[Component, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def canonical(self) -> "GraphStructure":
        """Merge equal-length cycle sets, fold degenerate shapes, sort.

        CycleSet(1, c) is a group of self-loops and G(L, 0) is a bare cycle.
        """
        cycles: Counter = Counter()
        rest = []
        for c in self.components:
            if isinstance(c, GComponent) and c.n == 0:
                c = CycleSet(c.L, 1)
            if isinstance(c, SelfLoop):
                cycles[1] += c.count
            elif isinstance(c, CycleSet):
                cycles[c.length] += c.count
            else:
                rest.append(c)
        for length, count in cycles.items():
            if count == 0:
                continue
            rest.append(SelfLoop(count) if length == 1 else CycleSet(length, count))
        return GraphStructure(tuple(sorted(rest, key=_sort_key)))

    def text(self) -> str:
        return ", ".join(c.text() for c in self.canonical().components)

    def to_dict(self) -> dict:
        return {"status": "ok", "components": [c.to_dict() for c in self.canonical().components]}

    @classmethod
    def from_components(cls, comps: Iterable[Component]) -> "GraphStructure":
        return cls(tuple(comps))

    def __str__(self):
        return self.text()


StructureResult = Union[GraphStructure, Verdict]


def structure_to_dict(s: StructureResult) -> dict:
    if isinstance(s, Verdict):
        return {"status": s.value, "components": []}
    return s.to_dict()


def structure_from_dict(d: dict) -> StructureResult:
    status = d.get("status", "ok")
    if status != "ok":
        return Verdict(status)
    return GraphStructure(tuple(component_from_dict(c) for c in d["components"]))


def structure_text(s: StructureResult) -> str:
    if s is Verdict.DELEGATED:
        return "delegated (no closed form; structure available from enumeration)"
    if s is Verdict.UNSUPPORTED:
        return "unsupported (no analytic claim for this sub-case)"
    return s.text()
