# rewrite/__init__.py - 改写模块包
"""
规范化、代入、数量项求值与随机等价检验
"""

from .quantity import Assignment, eval_quantity, simplify
from .substitute import substitute
from .canonical import CanonicalTuplix
from .normalize import normalize, resolve_quantity
from .equality import (
    ProbablyEqual, Unequal, Verdict,
    sample_value, sample_assignment, check_equal_random
)

__all__ = [
    'Assignment',
    'eval_quantity',
    'simplify',
    'substitute',
    'CanonicalTuplix',
    'normalize',
    'resolve_quantity',
    'ProbablyEqual',
    'Unequal',
    'Verdict',
    'sample_value',
    'sample_assignment',
    'check_equal_random'
]

__version__ = '1.0.0'
