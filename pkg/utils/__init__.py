# utils/__init__.py - 工具模块包
"""
工具类模块
包含日志和领域异常等通用功能
"""

from .logger import LoggerManager, get_logger
from .errors import (
    TTCError, ParseError, NameClash, BadIdentifier, UnboundVariable,
    UnresolvableGuard, BlockedBehaviour, ActionClash
)

__all__ = [
    'LoggerManager',
    'get_logger',
    'TTCError',
    'ParseError',
    'NameClash',
    'BadIdentifier',
    'UnboundVariable',
    'UnresolvableGuard',
    'BlockedBehaviour',
    'ActionClash'
]

__version__ = '1.0.0'
