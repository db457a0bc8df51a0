# finance/__init__.py - 金融分析模块包
"""
纯金融产品、隐含资本与信贷产品合成
"""

from .reports import PurityReport, ProfitReport, ProductClassification
from .analysis import (
    is_pure, present_value, implicit_capital, capital_profile,
    profits_from, classify_product
)
from .synthesis import synthesize_pure_credit

__all__ = [
    'PurityReport',
    'ProfitReport',
    'ProductClassification',
    'is_pure',
    'present_value',
    'implicit_capital',
    'capital_profile',
    'profits_from',
    'classify_product',
    'synthesize_pure_credit'
]

__version__ = '1.0.0'
