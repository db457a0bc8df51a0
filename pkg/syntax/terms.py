# syntax/terms.py - 两个排序（Quantity / Tuplix）的抽象语法树
"""
TTC 项的抽象语法

数量排序（Quantity）：草地表达式、变量、隐含资本子项 IC_u(x)
元组排序（Tuplix）：ε、阻塞元组、转移动作、零测试、合取、延迟、预抽象、计息封装

所有节点都是不可变的 frozen dataclass，结构相等即语法相等。
减法、除法、数字、幂、max/min、多重延迟和无利率封装都是派生形式，
由下面的构造函数展开为核心节点。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import FrozenSet, Iterable, Union

import config

IOTA = config.IOTA


# ---------- 数量排序 ----------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Num:
    """有理数字面量（0、1 和负数分别由 Zero、One、Neg 表示）"""
    value: Fraction

    def __post_init__(self):
        if self.value <= 0 or self.value == 1:
            raise ValueError(config.ERROR_MESSAGES["invalid_literal"].format(value=self.value))


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "QuantityTerm"
    right: "QuantityTerm"


@dataclass(frozen=True)
class Mul:
    left: "QuantityTerm"
    right: "QuantityTerm"


@dataclass(frozen=True)
class Neg:
    arg: "QuantityTerm"


@dataclass(frozen=True)
class Inv:
    arg: "QuantityTerm"


@dataclass(frozen=True)
class Sign:
    arg: "QuantityTerm"


@dataclass(frozen=True)
class ICap:
    """隐含资本 IC_rate(body)"""
    rate: "QuantityTerm"
    body: "TuplixTerm"


QuantityTerm = Union[Zero, One, Num, Var, Add, Mul, Neg, Inv, Sign, ICap]


# ---------- 元组排序 ----------

@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Block:
    pass


@dataclass(frozen=True)
class Transfer:
    action: str
    quantity: QuantityTerm


@dataclass(frozen=True)
class ZeroTest:
    quantity: QuantityTerm


@dataclass(frozen=True)
class Conj:
    left: "TuplixTerm"
    right: "TuplixTerm"


@dataclass(frozen=True)
class Delay:
    body: "TuplixTerm"


@dataclass(frozen=True)
class PreAbstr:
    actions: FrozenSet[str]
    body: "TuplixTerm"


@dataclass(frozen=True)
class IntEncap:
    """计息封装 ∂_H^rate(body)"""
    actions: FrozenSet[str]
    rate: QuantityTerm
    body: "TuplixTerm"


TuplixTerm = Union[Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap]

ZERO = Zero()
ONE = One()
EMPTY = Empty()
BLOCK = Block()


# ---------- 派生形式 ----------

def literal(value) -> QuantityTerm:
    """有理数 → 字面量项"""
    value = Fraction(value)
    if value == 0:
        return ZERO
    if value == 1:
        return ONE
    if value < 0:
        return Neg(literal(-value))
    return Num(value)


def sub(left: QuantityTerm, right: QuantityTerm) -> QuantityTerm:
    return Add(left, Neg(right))


def div(left: QuantityTerm, right: QuantityTerm) -> QuantityTerm:
    return Mul(left, Inv(right))


def power(base: QuantityTerm, n: int) -> QuantityTerm:
    """p⁰ = 1，pⁿ⁺¹ = pⁿ·p"""
    if n == 0:
        return ONE
    return reduce(Mul, [base] * n)


def max_(left: QuantityTerm, right: QuantityTerm) -> QuantityTerm:
    """max(u,v) = (sign(u − v) + 1)/2 · (u − v) + v"""
    diff = sub(left, right)
    half_step = div(Add(Sign(diff), ONE), literal(2))
    return Add(Mul(half_step, diff), right)


def min_(left: QuantityTerm, right: QuantityTerm) -> QuantityTerm:
    return Neg(max_(Neg(left), Neg(right)))


def delay_n(body: "TuplixTerm", n: int) -> "TuplixTerm":
    for _ in range(n):
        body = Delay(body)
    return body


def encap(actions: Iterable[str], body: "TuplixTerm") -> "TuplixTerm":
    """∂_H(t) 是 ∂_H^0(t) 的缩写"""
    return IntEncap(frozenset(actions), ZERO, body)


def conj_all(terms: Iterable["TuplixTerm"]) -> "TuplixTerm":
    """左结合合取；空序列为 ε"""
    terms = list(terms)
    if not terms:
        return EMPTY
    return reduce(Conj, terms)
