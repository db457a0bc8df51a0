# model/timed.py - 标准模型 M(D,A) 的值：定时元组
"""
定时元组要么整体阻塞（所有时间片均为空集），要么每个时间片恰有一个转移映射。
后者用有限的映射序列表示，其后隐含无穷多个空映射；末尾的空映射总是被裁掉，
因此结构相等即模型相等。
"""

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from meadow import RationalField, format_rational


class TransferMap(Mapping):
    """
    一个时间片内的转移映射 动作 → 数量
    显式的 a ↦ 0 与缺省不同：a(0) 执行了动作 a，ε 没有
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        self._entries = dict(sorted(dict(entries).items()))

    def __getitem__(self, action: str) -> Fraction:
        return self._entries[action]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        inner = ", ".join(f"{a}: {v}" for a, v in self._entries.items())
        return f"TransferMap({{{inner}}})"

    def merge(self, other: "TransferMap") -> "TransferMap":
        """f ⊕ f′：定义域取并，交集上逐点相加"""
        merged = dict(self._entries)
        for action, value in other.items():
            merged[action] = merged[action] + value if action in merged else value
        return TransferMap(merged)

    def total(self) -> Fraction:
        """时间片内全部转移之和（q₀）"""
        return sum(self._entries.values(), Fraction(0))


EMPTY_MAP = TransferMap()


@dataclass(frozen=True)
class Blocked:
    def __repr__(self):
        return "Blocked"


@dataclass(frozen=True)
class Schedule:
    slices: Tuple[TransferMap, ...] = ()

    def __post_init__(self):
        slices = [s if isinstance(s, TransferMap) else TransferMap(s) for s in self.slices]
        while slices and not slices[-1]:
            slices.pop()
        object.__setattr__(self, "slices", tuple(slices))

    def at(self, index: int) -> TransferMap:
        """第 index 个时间片（超出有限部分为空映射）"""
        if index < len(self.slices):
            return self.slices[index]
        return EMPTY_MAP

    @property
    def horizon(self) -> int:
        return len(self.slices)

    def actions(self):
        return frozenset(a for s in self.slices for a in s)


TimedTuplix = Union[Blocked, Schedule]

BLOCKED = Blocked()
EPSILON = Schedule()


def schedule(*slices: Iterable) -> Schedule:
    """便捷构造：schedule({"a": 7}, {}, {"b": 2})"""
    return Schedule(tuple(TransferMap(s) for s in slices))


class ICapResult(BaseModel):
    """
    隐含资本：已定义时为非负数量，阻塞元组上未定义
    只有在数量子项中才用 −1 编码未定义
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    defined: bool
    amount: Optional[RationalField] = None

    @model_validator(mode="after")
    def _check_amount(self):
        if self.defined:
            if self.amount is None or self.amount < 0:
                raise ValueError("已定义的隐含资本必须为非负数")
        elif self.amount is not None:
            raise ValueError("未定义的隐含资本不带数额")
        return self

    @classmethod
    def of(cls, amount) -> "ICapResult":
        return cls(defined=True, amount=Fraction(amount))

    @classmethod
    def undefined(cls) -> "ICapResult":
        return cls(defined=False)

    def as_quantity(self) -> Fraction:
        """数量子项中的编码：未定义为 −1"""
        return self.amount if self.defined else Fraction(-1)

    def __str__(self):
        return format_rational(self.amount) if self.defined else "undefined"
