# rewrite/quantity.py - 数量项的求值与化简
from fractions import Fraction
from typing import Dict, Mapping, Optional

import meadow
from syntax.analysis import free_variables
from syntax.terms import (
    ZERO, Zero, One, Num, Var, Add, Mul, Neg, Inv, Sign, ICap, literal
)
from utils.errors import UnboundVariable

Assignment = Dict[str, Fraction]


def eval_quantity(q, env: Optional[Mapping[str, Fraction]] = None) -> Fraction:
    """
    在 ℚ₀ 中对数量项求精确值
    ICap 子项交给标准模型计算，阻塞时得到 −1
    """
    env = env or {}

    if isinstance(q, Zero):
        return meadow.ZERO
    if isinstance(q, One):
        return meadow.ONE
    if isinstance(q, Num):
        return Fraction(q.value)
    if isinstance(q, Var):
        if q.name not in env:
            raise UnboundVariable(q.name)
        return Fraction(env[q.name])
    if isinstance(q, Add):
        return meadow.add(eval_quantity(q.left, env), eval_quantity(q.right, env))
    if isinstance(q, Mul):
        return meadow.mul(eval_quantity(q.left, env), eval_quantity(q.right, env))
    if isinstance(q, Neg):
        return meadow.neg(eval_quantity(q.arg, env))
    if isinstance(q, Inv):
        return meadow.inv(eval_quantity(q.arg, env))
    if isinstance(q, Sign):
        return meadow.sign(eval_quantity(q.arg, env))
    if isinstance(q, ICap):
        from model.evaluate import eval_model
        from model.semantics import icap_model

        rate = eval_quantity(q.rate, env)
        return icap_model(rate, eval_model(q.body, env)).as_quantity()

    raise TypeError(f"不是数量项: {q!r}")


def simplify(q):
    """
    化简数量项：闭子项折叠为字面量，并应用 x+0、x·1、x·0、−−x 等环恒等式
    这些等式在 ℚ₀ 中都成立，化简结果与原项在任何赋值下取值相同
    """
    if not free_variables(q):
        return literal(eval_quantity(q))

    if isinstance(q, Add):
        left, right = simplify(q.left), simplify(q.right)
        if left == ZERO:
            return right
        if right == ZERO:
            return left
        return Add(left, right)

    if isinstance(q, Mul):
        left, right = simplify(q.left), simplify(q.right)
        if left == ZERO or right == ZERO:
            return ZERO
        if isinstance(left, One):
            return right
        if isinstance(right, One):
            return left
        return Mul(left, right)

    if isinstance(q, Neg):
        arg = simplify(q.arg)
        if isinstance(arg, Neg):
            return arg.arg
        return Neg(arg)

    if isinstance(q, Inv):
        return Inv(simplify(q.arg))

    if isinstance(q, Sign):
        return Sign(simplify(q.arg))

    if isinstance(q, ICap):
        return ICap(simplify(q.rate), q.body)

    return q
