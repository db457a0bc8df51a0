# cli/options.py - 命令行运行参数
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import config
from meadow import parse_rational
from syntax.parser import check_identifier
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class RunConfig:
    """一次命令执行所需的全部参数"""

    command: str
    inputs: List[str] = field(default_factory=list)
    bindings: Dict[str, Fraction] = field(default_factory=dict)
    analysis_rate: Optional[Fraction] = None
    json_output: bool = False
    seed: int = config.RANDOM_CHECK["seed"]
    trials: int = config.RANDOM_CHECK["trials"]
    actions: Tuple[str, ...] = ()
    borrow: str = config.SYNTH_DEFAULTS["borrow"]
    repay: str = config.SYNTH_DEFAULTS["repay"]

    @property
    def rate(self) -> Fraction:
        """
        分析利率：优先使用单独的 --rate RAT，
        否则取第一个 NAME=RAT 绑定的值，都没有时为0
        """
        if self.analysis_rate is not None:
            return self.analysis_rate
        if not self.bindings:
            return Fraction(0)

        name, value = next(iter(self.bindings.items()))
        if len(self.bindings) > 1:
            logger.warning(
                f"未给出单独的 --rate RAT，按第一个绑定 {name}={value} 作为分析利率"
                f"（共 {len(self.bindings)} 个绑定）"
            )
        return value

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        bindings: Dict[str, Fraction] = {}
        analysis_rate = None
        for spec in args.rate or []:
            name, value = parse_rate_spec(spec)
            if name is None:
                analysis_rate = value
            else:
                bindings[name] = value

        inputs = list(args.expr or [])
        for path in args.files or []:
            inputs.append(Path(path).read_text(encoding="utf-8"))

        actions = ()
        if args.actions:
            actions = tuple(
                check_identifier(a.strip()) for a in args.actions.split(",") if a.strip()
            )

        return cls(
            command=args.command,
            inputs=inputs,
            bindings=bindings,
            analysis_rate=analysis_rate,
            json_output=args.json,
            seed=args.seed,
            trials=args.trials,
            actions=actions,
            borrow=check_identifier(args.borrow),
            repay=check_identifier(args.repay)
        )


def parse_rate_spec(spec: str) -> Tuple[Optional[str], Fraction]:
    """'p=1/100' → ('p', 1/100)；'1/100' → (None, 1/100)"""
    if "=" in spec:
        name, _, value = spec.partition("=")
        return check_identifier(name.strip()), parse_rational(value)
    return None, parse_rational(spec)
