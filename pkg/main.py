#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
定时元组演算工具 - 主程序入口
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
sys.path.insert(0, str(Path(__file__).parent))

from cli import main
from utils.logger import LoggerManager


if __name__ == "__main__":
    try:
        sys.exit(main())
    finally:
        LoggerManager.cleanup()
