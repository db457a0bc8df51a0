# meadow/__init__.py - 草地算术模块包
"""
零全化有理数 ℚ₀ 上的精确算术
"""

from .rational import (
    Rational, RationalField, ZERO, ONE,
    add, mul, neg, inv, sub, div, sign, max2, pow, leq,
    parse_rational, format_rational
)

__all__ = [
    'Rational',
    'RationalField',
    'ZERO',
    'ONE',
    'add',
    'mul',
    'neg',
    'inv',
    'sub',
    'div',
    'sign',
    'max2',
    'pow',
    'leq',
    'parse_rational',
    'format_rational'
]

__version__ = '1.0.0'
