# syntax/__init__.py - 语法模块包
"""
TTC 抽象语法、解析器和打印器
"""

from .terms import (
    IOTA, ZERO, ONE, EMPTY, BLOCK,
    Zero, One, Num, Var, Add, Mul, Neg, Inv, Sign, ICap,
    Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap,
    QuantityTerm, TuplixTerm,
    literal, sub, div, power, max_, min_, delay_n, encap, conj_all
)
from .analysis import actions_of, free_variables, is_closed, delay_depth
from .parser import parse_tuplix, parse_quantity, check_identifier
from .printer import print_term
from .universe import ActionUniverse

__all__ = [
    'IOTA', 'ZERO', 'ONE', 'EMPTY', 'BLOCK',
    'Zero', 'One', 'Num', 'Var', 'Add', 'Mul', 'Neg', 'Inv', 'Sign', 'ICap',
    'Empty', 'Block', 'Transfer', 'ZeroTest', 'Conj', 'Delay', 'PreAbstr', 'IntEncap',
    'QuantityTerm', 'TuplixTerm',
    'literal', 'sub', 'div', 'power', 'max_', 'min_', 'delay_n', 'encap', 'conj_all',
    'actions_of', 'free_variables', 'is_closed', 'delay_depth',
    'parse_tuplix', 'parse_quantity', 'check_identifier', 'print_term',
    'ActionUniverse'
]

__version__ = '1.0.0'
