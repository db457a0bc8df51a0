# rewrite/normalize.py - 公理驱动的规范化
"""
把元组闭项（可含自由数量变量）改写为规范形

改写步骤：
    合取：交换结合、单位元与吸收元、同名转移合并、守卫合并
    延迟：分配到各合取项，守卫不受延迟影响
    预抽象：把 I 中动作改名为 ι
    计息封装：把第 i 片的转移以 (1+r)^{-i} 为权重移到第0片，
             生成守卫 γ(Σ (1+r)^{-i}·vᵢ) 后清除该动作
    隐含资本（数量位置）：先规范化主体，再从末片向前折叠

闭守卫当场判定（为0则丢弃，非0则整体阻塞），开放守卫保留。
"""

from typing import Dict, List

from meadow import pow as meadow_pow
from rewrite.canonical import CanonicalTuplix
from rewrite.quantity import eval_quantity, simplify
from syntax.analysis import free_variables
from syntax.printer import print_term
from syntax.terms import (
    IOTA, ZERO, ONE,
    Add, Mul, Neg, Inv, Sign, ICap,
    Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap,
    literal, sub, div, power, max_
)
from utils.errors import UnresolvableGuard
from utils.logger import get_logger

logger = get_logger(__name__)


def normalize(term) -> CanonicalTuplix:
    """返回与 term 可推导相等的规范形"""
    result = _normalize(term)
    logger.debug(f"规范化 {print_term(term)} => {result}")
    return result


def _normalize(term) -> CanonicalTuplix:
    if isinstance(term, Empty):
        return CanonicalTuplix()
    if isinstance(term, Block):
        return CanonicalTuplix.blocked()
    if isinstance(term, Transfer):
        return CanonicalTuplix(slices=({term.action: resolve_quantity(term.quantity)},))
    if isinstance(term, ZeroTest):
        return _with_guards(CanonicalTuplix(), [resolve_quantity(term.quantity)])
    if isinstance(term, Conj):
        return _conjoin(_normalize(term.left), _normalize(term.right))
    if isinstance(term, Delay):
        return _delay(_normalize(term.body))
    if isinstance(term, PreAbstr):
        return _pre_abstract(term.actions, _normalize(term.body))
    if isinstance(term, IntEncap):
        return _encapsulate(term.actions, resolve_quantity(term.rate), _normalize(term.body))

    raise TypeError(f"不是元组项: {term!r}")


# ---------- 守卫 ----------

def _with_guards(canonical: CanonicalTuplix, new_guards) -> CanonicalTuplix:
    """追加守卫；闭守卫立即判定"""
    if canonical.is_blocked:
        return canonical

    guards = list(canonical.guards)
    for guard in new_guards:
        guard = simplify(guard)
        if not free_variables(guard):
            if eval_quantity(guard) != 0:
                return CanonicalTuplix.blocked()
            continue
        if guard not in guards:
            guards.append(guard)

    return CanonicalTuplix(guards=tuple(guards), slices=canonical.slices)


# ---------- 运算符 ----------

def _conjoin(left: CanonicalTuplix, right: CanonicalTuplix) -> CanonicalTuplix:
    if left.is_blocked or right.is_blocked:
        return CanonicalTuplix.blocked()

    horizon = max(left.horizon, right.horizon)
    rows: List[Dict] = []
    for index in range(horizon):
        row = dict(left.slices[index]) if index < left.horizon else {}
        if index < right.horizon:
            for action, quantity in right.slices[index]:
                # a(u) & a(v) = a(u + v)
                row[action] = simplify(Add(row[action], quantity)) if action in row else quantity
        rows.append(row)

    merged = CanonicalTuplix(guards=left.guards, slices=tuple(rows))
    return _with_guards(merged, right.guards)


def _delay(body: CanonicalTuplix) -> CanonicalTuplix:
    if body.is_blocked:
        return body
    if body.slices == ((),):
        return body
    return CanonicalTuplix(guards=body.guards, slices=((),) + body.slices)


def _pre_abstract(actions, body: CanonicalTuplix) -> CanonicalTuplix:
    if body.is_blocked:
        return body

    actions = frozenset(actions)
    rows = []
    for row in body.slices:
        hit = [quantity for action, quantity in row if action in actions]
        if not hit:
            rows.append(dict(row))
            continue

        # ι 已在行中且不属于 I 时并入折叠结果
        if IOTA not in actions:
            hit.extend(quantity for action, quantity in row if action == IOTA)

        collapsed = hit[0]
        for quantity in hit[1:]:
            collapsed = Add(collapsed, quantity)

        new_row = {a: q for a, q in row if a not in actions and a != IOTA}
        new_row[IOTA] = simplify(collapsed)
        rows.append(new_row)

    return CanonicalTuplix(guards=body.guards, slices=tuple(rows))


def _transposition_weight(rate, index: int):
    """把第 index 片的转移移到第0片时的权重 (1+r)^{-index}"""
    if not free_variables(rate):
        return literal(meadow_pow(1 + eval_quantity(rate), -index))
    return Inv(power(Add(ONE, rate), index))


def _rica_side_guard(rate):
    """γ(1 − (1+r)/(1+r))：r = −1 时阻塞"""
    growth = Add(ONE, rate)
    return sub(ONE, div(growth, growth))


def _encapsulate(actions, rate, body: CanonicalTuplix) -> CanonicalTuplix:
    if body.is_blocked:
        return body

    rate = simplify(rate)
    open_rate = bool(free_variables(rate))
    transposed = False
    guards = []

    for action in sorted(actions):
        total = None
        for index, row in enumerate(body.slices):
            entries = dict(row)
            if action not in entries:
                continue

            value = entries[action]
            if index > 0:
                value = Mul(value, _transposition_weight(rate, index))
                transposed = True
            total = value if total is None else Add(total, value)

        # 未出现的动作不产生守卫
        if total is not None:
            guards.append(total)

    if open_rate and transposed:
        guards.append(_rica_side_guard(rate))

    cleared = tuple(
        {a: q for a, q in row if a not in actions}
        for row in body.slices
    )
    return _with_guards(CanonicalTuplix(guards=body.guards, slices=cleared), guards)


# ---------- 数量位置的隐含资本 ----------

def resolve_quantity(q):
    """把数量项中的 ICap 子项改写为不含 ICap 的项"""
    if isinstance(q, ICap):
        return _resolve_icap(resolve_quantity(q.rate), q.body)
    if isinstance(q, Add):
        return Add(resolve_quantity(q.left), resolve_quantity(q.right))
    if isinstance(q, Mul):
        return Mul(resolve_quantity(q.left), resolve_quantity(q.right))
    if isinstance(q, Neg):
        return Neg(resolve_quantity(q.arg))
    if isinstance(q, Inv):
        return Inv(resolve_quantity(q.arg))
    if isinstance(q, Sign):
        return Sign(resolve_quantity(q.arg))
    return q


def _resolve_icap(rate, body):
    canonical = _normalize(body)
    guard = simplify(canonical.guard)

    if free_variables(guard):
        raise UnresolvableGuard(print_term(guard))
    if eval_quantity(guard) != 0:
        # 阻塞主体
        return literal(-1)

    # 每片先整体折叠为 ι，再从末片向前
    totals = []
    for row in canonical.slices:
        quantities = [quantity for _, quantity in row]
        total = quantities[0] if quantities else ZERO
        for quantity in quantities[1:]:
            total = Add(total, quantity)
        totals.append(total)

    discount = Inv(Add(ONE, rate))
    capital = max_(totals[-1], ZERO)
    for total in reversed(totals[:-1]):
        capital = max_(Add(total, Mul(discount, capital)), ZERO)

    return simplify(capital)
