# model/__init__.py - 标准模型模块包
"""
标准模型 M(D,A)：定时元组、运算符解释与隐含资本
"""

from .timed import (
    TransferMap, Blocked, Schedule, TimedTuplix, ICapResult,
    BLOCKED, EPSILON, EMPTY_MAP, schedule
)
from .semantics import (
    transfer_model, ztest_model, conj_model, delay_model, pabstr_model,
    clear, atotal, iencap_model, q0, shift, aicap, icap_model, equal_model
)
from .evaluate import eval_model
from .equality import check_tuplix_equal_random
from .serialize import to_json, from_json, timeline

__all__ = [
    'TransferMap', 'Blocked', 'Schedule', 'TimedTuplix', 'ICapResult',
    'BLOCKED', 'EPSILON', 'EMPTY_MAP', 'schedule',
    'transfer_model', 'ztest_model', 'conj_model', 'delay_model', 'pabstr_model',
    'clear', 'atotal', 'iencap_model', 'q0', 'shift', 'aicap', 'icap_model', 'equal_model',
    'eval_model', 'check_tuplix_equal_random',
    'to_json', 'from_json', 'timeline'
]

__version__ = '1.0.0'
