# syntax/printer.py - 规范文本输出
"""
AST → 具体语法文本，满足 parse(print(t)) == t（结构相等）

减法 Add(x, Neg(y)) 打印为 "x - y"，除法 Mul(x, Inv(y)) 打印为 "x / y"，
连续的 Delay 合并为 delay^n(...)。
"""

from meadow import format_rational
from syntax.terms import (
    Zero, One, Num, Var, Add, Mul, Neg, Inv, Sign, ICap,
    Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap
)


def print_term(term) -> str:
    """打印任一排序的项"""
    if isinstance(term, (Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap)):
        return _tuplix(term)
    return _sum(term)


# ---------- 数量 ----------

def _sum(q) -> str:
    if isinstance(q, Add):
        if isinstance(q.right, Neg):
            return f"{_sum(q.left)} - {_product(q.right.arg)}"
        return f"{_sum(q.left)} + {_product(q.right)}"
    return _product(q)


def _product(q) -> str:
    if isinstance(q, Mul):
        if isinstance(q.right, Inv):
            return f"{_product(q.left)} / {_unary(q.right.arg)}"
        return f"{_product(q.left)} * {_unary(q.right)}"
    return _unary(q)


def _unary(q) -> str:
    if isinstance(q, Neg):
        return f"-{_unary(q.arg)}"
    return _atom(q)


def _atom(q) -> str:
    if isinstance(q, (Zero, One, Num, Var)):
        return _qatom(q)
    if isinstance(q, Inv):
        return f"inv({_sum(q.arg)})"
    if isinstance(q, Sign):
        return f"sign({_sum(q.arg)})"
    if isinstance(q, ICap):
        return f"icap@{_qatom(q.rate)}({_tuplix(q.body)})"
    return f"({_sum(q)})"


def _qatom(q) -> str:
    if isinstance(q, Zero):
        return "0"
    if isinstance(q, One):
        return "1"
    if isinstance(q, Num):
        return format_rational(q.value)
    if isinstance(q, Var):
        return q.name
    return f"({_sum(q)})"


# ---------- 元组 ----------

def _tuplix(t) -> str:
    # 左结合的合取链沿左侧展开
    parts = []
    while isinstance(t, Conj):
        parts.append(_prim(t.right))
        t = t.left
    parts.append(_prim(t))
    return " & ".join(reversed(parts))


def _actions(actions) -> str:
    return ",".join(sorted(actions))


def _prim(t) -> str:
    if isinstance(t, Empty):
        return "eps"
    if isinstance(t, Block):
        return "bot"
    if isinstance(t, Transfer):
        return f"{t.action}({_sum(t.quantity)})"
    if isinstance(t, ZeroTest):
        return f"test({_sum(t.quantity)})"
    if isinstance(t, Delay):
        depth = 0
        while isinstance(t, Delay):
            depth += 1
            t = t.body
        prefix = "delay" if depth == 1 else f"delay^{depth}"
        return f"{prefix}({_tuplix(t)})"
    if isinstance(t, PreAbstr):
        return f"abs{{{_actions(t.actions)}}}({_tuplix(t.body)})"
    if isinstance(t, IntEncap):
        return f"enc{{{_actions(t.actions)}}}@{_qatom(t.rate)}({_tuplix(t.body)})"
    return f"({_tuplix(t)})"
