"""Reconfiguration instances and rule definitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidInstanceError
from .graph import Graph
from .separators import State, check_state, is_separator

ReconfigSequence = list[State]


class Rule(enum.Enum):
    TS = "TS"
    TJ = "TJ"
    TAR = "TAR"

    @classmethod
    def parse(cls, text: str) -> "Rule":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise InvalidInstanceError(f"unknown rule {text!r}") from None


@dataclass(frozen=True)
class ReconfigInstance:
    """Graph + terminals + rule + endpoint states.

    Construction validates every invariant: distinct non-adjacent
    terminals, endpoint states that actually separate, TJ size equality
    and the TAR cardinality bound.
    """

    graph: Graph
    s: int
    t: int
    rule: Rule
    source: State
    target: State
    k: int | None = field(default=None)

    def __post_init__(self):
        g = self.graph
        if self.s == self.t:
            raise InvalidInstanceError("terminals must be distinct")
        g.check_vertex(self.s)
        g.check_vertex(self.t)
        if g.has_edge(self.s, self.t):
            raise InvalidInstanceError(
                "terminals are adjacent: no separator exists"
            )
        object.__setattr__(self, "source", check_state(g, self.s, self.t, self.source))
        object.__setattr__(self, "target", check_state(g, self.s, self.t, self.target))
        for name, st in (("source", self.source), ("target", self.target)):
            if not is_separator(g, self.s, self.t, st):
                raise InvalidInstanceError(f"{name} state is not an st-separator")
        if self.rule is Rule.TAR:
            if self.k is None or self.k < 1:
                raise InvalidInstanceError("TAR requires a positive bound k")
            if max(len(self.source), len(self.target)) > self.k:
                raise InvalidInstanceError("endpoint state exceeds the TAR bound")
        else:
            if self.k is not None:
                raise InvalidInstanceError(f"{self.rule.value} takes no bound k")
            if len(self.source) != len(self.target):
                raise InvalidInstanceError(
                    f"{self.rule.value} needs equal-size endpoint states"
                )

    def with_states(self, source: Iterable[int], target: Iterable[int]) -> "ReconfigInstance":
        return ReconfigInstance(
            self.graph, self.s, self.t, self.rule,
            frozenset(source), frozenset(target), self.k,
        )

    def describe(self) -> str:
        bound = f"(k={self.k})" if self.rule is Rule.TAR else ""
        return f"{self.rule.value}{bound} s={self.s} t={self.t}"


def states_adjacent(rule: Rule, a: State, b: State, graph: Graph, k: int | None = None) -> bool:
    """Rule adjacency between two states (separator-ness not included)."""
    if a == b:
        return False
    if rule is Rule.TAR:
        assert k is not None
        return len(a ^ b) == 1 and max(len(a), len(b)) <= k
    if len(a) != len(b) or len(a - b) != 1:
        return False
    if rule is Rule.TJ:
        return True
    (x,) = a - b
    (y,) = b - a
    return graph.has_edge(x, y)
