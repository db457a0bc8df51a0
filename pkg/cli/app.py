# cli/app.py - 命令行入口
import argparse
import sys
from typing import List, Optional

import config
from cli.commands import COMMANDS
from cli.options import RunConfig
from utils.errors import ParseError, TTCError
from utils.logger import LoggerManager, get_logger

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=config.APP_NAME,
        description="定时元组演算（TTC）工具：解析、规范化、求值与金融分析"
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="子命令")
    parser.add_argument("files", nargs="*", help="输入文件（每个文件一个项）")
    parser.add_argument("-e", "--expr", action="append", help="内联表达式（可重复）")
    parser.add_argument(
        "--rate", action="append",
        help="NAME=RAT 绑定数量变量；单独的 RAT 设置分析利率（可重复）"
    )
    parser.add_argument("--json", action="store_true", help="输出 JSON")
    parser.add_argument("--seed", type=int, default=config.RANDOM_CHECK["seed"], help="随机检验种子")
    parser.add_argument("--trials", type=int, default=config.RANDOM_CHECK["trials"], help="随机检验次数")
    parser.add_argument("--actions", help="额外的动作，逗号分隔（扩展动作全集）")
    parser.add_argument("--borrow", default=config.SYNTH_DEFAULTS["borrow"], help="合成产品的借入动作")
    parser.add_argument("--repay", default=config.SYNTH_DEFAULTS["repay"], help="合成产品的偿还动作")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """解析参数并执行命令，返回退出码"""
    args = build_parser().parse_args(argv)

    LoggerManager.setup()
    LoggerManager.set_level("DEBUG" if args.verbose else config.LOGGING["level"])

    try:
        run = RunConfig.from_args(args)
        logger.debug(f"执行命令 {run.command}，输入 {len(run.inputs)} 个")
        return COMMANDS[run.command](run)

    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_CODES["parse_error"]

    except TTCError as e:
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_CODES["semantic_error"]

    except (ValueError, OSError) as e:
        # 输入个数不符、非法有理数、文件无法读取
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_CODES["semantic_error"]

    except RecursionError:
        # 括号或数量子项嵌套极深时，递归实现的化简与打印仍可能越界
        logger.debug("递归深度越界", exc_info=True)
        print(f"error: {config.ERROR_MESSAGES['too_deep']}", file=sys.stderr)
        return config.EXIT_CODES["semantic_error"]
