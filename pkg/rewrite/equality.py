# rewrite/equality.py - 数量项的随机等价检验
"""
开放数量项之间的等式没有符号判定过程，这里在随机赋值下比较取值：
找到反例时判定为不等（附带见证赋值）；否则判定为"很可能相等"。

抽样分布刻意提高 0 和 ±1 的概率，使 0⁻¹ = 0 的分支得到覆盖。
同一种子下结果确定。
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Union

import config
from rewrite.quantity import eval_quantity
from syntax.analysis import free_variables
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProbablyEqual:
    trials: int
    exact: bool = False

    def __bool__(self):
        return True

    def __str__(self):
        if self.exact:
            return "equal"
        return f"equal (probably, {self.trials} trials)"


@dataclass(frozen=True)
class Unequal:
    witness: Dict[str, Fraction] = field(default_factory=dict)

    def __bool__(self):
        return False

    def __str__(self):
        if not self.witness:
            return "unequal"
        binding = ", ".join(f"{name}={value}" for name, value in sorted(self.witness.items()))
        return f"unequal (witness: {binding})"


Verdict = Union[ProbablyEqual, Unequal]


def sample_value(rng: random.Random) -> Fraction:
    """从混合分布中抽取一个有理数：0、±1、小整数或随机分数"""
    settings = config.RANDOM_CHECK
    roll = rng.random()

    if roll < settings["zero_probability"]:
        return Fraction(0)
    roll -= settings["zero_probability"]

    if roll < settings["unit_probability"]:
        return Fraction(rng.choice((1, -1)))
    roll -= settings["unit_probability"]

    if roll < 0.3:
        bound = settings["small_int_range"]
        return Fraction(rng.randint(-bound, bound))

    numerator = rng.randint(-settings["max_numerator"], settings["max_numerator"])
    denominator = rng.randint(1, settings["max_denominator"])
    return Fraction(numerator, denominator)


def sample_assignment(names: Iterable[str], rng: random.Random) -> Dict[str, Fraction]:
    return {name: sample_value(rng) for name in sorted(names)}


def check_equal_random(left, right, trials: Optional[int] = None, seed: Optional[int] = None) -> Verdict:
    """
    在 trials 个随机赋值下比较两个数量项
    Unequal 是确定的结论；ProbablyEqual 只说明没有找到反例
    """
    trials = config.RANDOM_CHECK["trials"] if trials is None else trials
    seed = config.RANDOM_CHECK["seed"] if seed is None else seed
    if trials < 1:
        raise ValueError("trials 必须 ≥ 1")

    names = sorted(free_variables(left) | free_variables(right))
    if not names:
        if eval_quantity(left) == eval_quantity(right):
            return ProbablyEqual(trials=0, exact=True)
        return Unequal(witness={})

    rng = random.Random(seed)
    for _ in range(trials):
        env = sample_assignment(names, rng)
        if eval_quantity(left, env) != eval_quantity(right, env):
            logger.debug(f"数量项不等，见证赋值: {env}")
            return Unequal(witness=env)

    logger.debug(f"{trials} 次抽样未发现反例")
    return ProbablyEqual(trials=trials)
