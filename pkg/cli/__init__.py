# cli/__init__.py - 命令行模块包
"""
命令行前端：fmt / normalize / eval / equal / icap / pure / profit / synth
"""

from .app import build_parser, main
from .options import RunConfig, parse_rate_spec
from .render import render_timeline

__all__ = [
    'build_parser',
    'main',
    'RunConfig',
    'parse_rate_spec',
    'render_timeline'
]

__version__ = '1.0.0'
