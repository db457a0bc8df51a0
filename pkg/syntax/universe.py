# syntax/universe.py - 动作全集 A
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable

from syntax.analysis import actions_of
from syntax.terms import IOTA


@dataclass(frozen=True)
class ActionUniverse:
    """有限动作集 A，恒含 iota"""

    actions: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "actions", frozenset(self.actions) | {IOTA})

    @classmethod
    def of(cls, *terms, extra: Iterable[str] = ()) -> "ActionUniverse":
        """由项中出现的动作（加上额外指定的动作）构造"""
        actions = set(extra)
        for term in terms:
            actions |= actions_of(term)
        return cls(frozenset(actions))

    def __contains__(self, action: str) -> bool:
        return action in self.actions

    def __iter__(self):
        return iter(sorted(self.actions))

    def covers(self, term) -> bool:
        return actions_of(term) <= self.actions
