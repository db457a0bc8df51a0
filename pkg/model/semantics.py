# model/semantics.py - 标准模型中常量与运算符的解释
"""
标准模型 M(D,A) 的辅助函数：⊕ 合取、延迟、预抽象、清除、atotal、隐含资本

atotal 的贴现方向：第 i 个时间片按 (1+d)^{-i} 加权（而非 (1+d)^i）。
按 (1+d)^i 加权时 enc{a}@1(a(1) & delay(a(-2))) 会得到 1 + 2·(−2) ≠ 0 而阻塞，
但由计息封装的转移规则可推出它等于 ε；按 (1+d)^{-i} 加权得到 1 + (1/2)(−2) = 0，与推导一致。
"""

from fractions import Fraction
from typing import Iterable

from meadow import ZERO, ONE, add, mul, inv, max2, pow
from model.timed import (
    TransferMap, Blocked, Schedule, TimedTuplix, ICapResult,
    BLOCKED, EPSILON
)
from syntax.terms import IOTA
from utils.logger import get_logger

logger = get_logger(__name__)


# ---------- 常量与基本运算符 ----------

def transfer_model(action: str, value: Fraction) -> Schedule:
    return Schedule((TransferMap({action: value}),))


def ztest_model(value: Fraction) -> TimedTuplix:
    """γ(d)：d = 0 时为 ε，否则阻塞"""
    return EPSILON if value == ZERO else BLOCKED


def conj_model(left: TimedTuplix, right: TimedTuplix) -> TimedTuplix:
    """(T ⊓ T′)(i) = {f ⊕ f′}，任一方阻塞则阻塞"""
    if isinstance(left, Blocked) or isinstance(right, Blocked):
        return BLOCKED

    horizon = max(left.horizon, right.horizon)
    return Schedule(tuple(left.at(i).merge(right.at(i)) for i in range(horizon)))


def delay_model(timed: TimedTuplix) -> TimedTuplix:
    """时间片整体后移一位，第0片为空映射"""
    if isinstance(timed, Blocked):
        return BLOCKED
    return Schedule((TransferMap(),) + timed.slices)


def _pabstr_map(actions: frozenset, f: TransferMap) -> TransferMap:
    hit = [a for a in f if a in actions]
    if not hit:
        return f

    collapsed = sum((f[a] for a in hit), ZERO)
    # ι 已在定义域中且不属于 I 时，其值并入折叠后的 ι
    if IOTA in f and IOTA not in actions:
        collapsed += f[IOTA]

    entries = {a: v for a, v in f.items() if a not in actions and a != IOTA}
    entries[IOTA] = collapsed
    return TransferMap(entries)


def pabstr_model(actions: Iterable[str], timed: TimedTuplix) -> TimedTuplix:
    """π_I：I 中的动作改名为 ι，同一时间片内求和"""
    if isinstance(timed, Blocked):
        return BLOCKED

    actions = frozenset(actions)
    return Schedule(tuple(_pabstr_map(actions, f) for f in timed.slices))


def clear(actions: frozenset, f: TransferMap) -> TransferMap:
    """χ_H：从定义域中移除 H"""
    return TransferMap({a: v for a, v in f.items() if a not in actions})


def atotal(action: str, rate: Fraction, timed: TimedTuplix) -> Fraction:
    """
    动作 action 的全部转移按累积利率贴现到第0片后求和
    Σ_{i: a ∈ dom(T(i))} (1+d)^{-i} · T(i)(a)
    """
    if isinstance(timed, Blocked):
        raise ValueError("atotal 在阻塞元组上无定义")

    total = ZERO
    growth = add(ONE, rate)
    for index, f in enumerate(timed.slices):
        if action in f:
            total = add(total, mul(pow(growth, -index), f[action]))
    return total


def iencap_model(actions: Iterable[str], rate: Fraction, timed: TimedTuplix) -> TimedTuplix:
    """∂_H^d：H 中每个动作的贴现总额均为0时清除这些动作，否则阻塞"""
    if isinstance(timed, Blocked):
        return BLOCKED

    actions = frozenset(actions)
    for action in sorted(actions):
        total = atotal(action, rate, timed)
        if total != ZERO:
            logger.debug(f"封装 {action} 的贴现总额为 {total}，结果阻塞")
            return BLOCKED

    return Schedule(tuple(clear(actions, f) for f in timed.slices))


def q0(timed: Schedule) -> Fraction:
    return timed.at(0).total()


def shift(timed: Schedule) -> Schedule:
    """shift(T)(i) = T(i + 1)"""
    return Schedule(timed.slices[1:])


def aicap(rate: Fraction, timed: Schedule) -> Fraction:
    """
    非阻塞元组的隐含资本，从最后一个时间片向前递推：
        末片 max(q₀, 0)；其余 max(q₀ + 1/(1+d) · 后续, 0)
    q₀ 直接对时间片内所有转移求和，等价于先做 π_A
    """
    discount = inv(add(ONE, rate))
    slices = timed.slices or (TransferMap(),)

    capital = max2(slices[-1].total(), ZERO)
    for f in reversed(slices[:-1]):
        capital = max2(add(f.total(), mul(discount, capital)), ZERO)
    return capital


def icap_model(rate: Fraction, timed: TimedTuplix) -> ICapResult:
    if isinstance(timed, Blocked):
        return ICapResult.undefined()
    return ICapResult.of(aicap(rate, timed))


def equal_model(left: TimedTuplix, right: TimedTuplix) -> bool:
    """裁剪后的结构相等（闭项可推导相等的判定过程）"""
    return left == right
