# rewrite/substitute.py - 变量代入
from fractions import Fraction
from typing import Mapping

from syntax.terms import (
    Var, Add, Mul, Neg, Inv, Sign, ICap,
    Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap, literal
)


def substitute(term, env: Mapping[str, Fraction]):
    """把 env 中绑定的变量替换为对应的有理数字面量，其余结构不变"""
    if not env:
        return term
    if isinstance(term, Var):
        return literal(env[term.name]) if term.name in env else term
    if isinstance(term, Add):
        return Add(substitute(term.left, env), substitute(term.right, env))
    if isinstance(term, Mul):
        return Mul(substitute(term.left, env), substitute(term.right, env))
    if isinstance(term, Neg):
        return Neg(substitute(term.arg, env))
    if isinstance(term, Inv):
        return Inv(substitute(term.arg, env))
    if isinstance(term, Sign):
        return Sign(substitute(term.arg, env))
    if isinstance(term, ICap):
        return ICap(substitute(term.rate, env), substitute(term.body, env))
    if isinstance(term, Transfer):
        return Transfer(term.action, substitute(term.quantity, env))
    if isinstance(term, ZeroTest):
        return ZeroTest(substitute(term.quantity, env))
    if isinstance(term, Conj):
        return Conj(substitute(term.left, env), substitute(term.right, env))
    if isinstance(term, Delay):
        return Delay(substitute(term.body, env))
    if isinstance(term, PreAbstr):
        return PreAbstr(term.actions, substitute(term.body, env))
    if isinstance(term, IntEncap):
        return IntEncap(term.actions, substitute(term.rate, env), substitute(term.body, env))
    return term
