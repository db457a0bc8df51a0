# meadow/rational.py - 零全化有理数域 ℚ₀ 上的精确运算
"""
带符号的消去草地（signed cancellation meadow）ℚ₀：
有理数加上全定义的乘法逆（0⁻¹ = 0）、符号函数和 max。

有理数直接使用 fractions.Fraction 表示：始终约分、分母为正、0 唯一表示为 0/1。
"""

import re
from fractions import Fraction
from typing import Annotated, Union

from pydantic import BeforeValidator, PlainSerializer

import config

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"\A\s*(?P<num>-?\d+)(?:/(?P<den>[1-9]\d*))?\s*\Z")
_DECIMAL_RE = re.compile(r"\A\s*-?\d+\.\d+\s*\Z")


def add(a: Rational, b: Rational) -> Rational:
    return a + b


def mul(a: Rational, b: Rational) -> Rational:
    return a * b


def neg(a: Rational) -> Rational:
    return -a


def inv(a: Rational) -> Rational:
    """全定义的乘法逆：inv(0) = 0"""
    if a == 0:
        return ZERO
    return 1 / a


def sub(a: Rational, b: Rational) -> Rational:
    return add(a, neg(b))


def div(a: Rational, b: Rational) -> Rational:
    return mul(a, inv(b))


def sign(a: Rational) -> Rational:
    if a > 0:
        return ONE
    if a < 0:
        return -ONE
    return ZERO


def max2(a: Rational, b: Rational) -> Rational:
    """max(u,v) = (sign(u − v) + 1)/2 · (u − v) + v"""
    d = sub(a, b)
    return add(mul(div(add(sign(d), ONE), Fraction(2)), d), b)


def pow(a: Rational, n: int) -> Rational:
    """p⁰ = 1，pⁿ⁺¹ = pⁿ·p；负指数经由 inv 全定义"""
    if n < 0:
        return pow(inv(a), -n)
    return a ** n


def leq(a: Rational, b: Rational) -> bool:
    """p ≤ q 当且仅当 max(p,q) = q"""
    return max2(a, b) == b


def parse_rational(text: Union[str, int, Fraction]) -> Rational:
    """
    解析有理数文本
    接受 `-?[0-9]+(/[1-9][0-9]*)?` 以及十进制小数（如 0.25 精确转换为 1/4）
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)

    match = _RATIONAL_RE.match(text)
    if match:
        den = int(match.group("den") or 1)
        return Fraction(int(match.group("num")), den)
    if _DECIMAL_RE.match(text):
        return Fraction(text.strip())

    raise ValueError(config.ERROR_MESSAGES["invalid_rational"].format(text=text))


def format_rational(value: Rational) -> str:
    """精确字符串表示："n/d"，整数为 "n" """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# pydantic字段类型：读入时接受字符串/整数，输出为精确字符串
RationalField = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str)
]
