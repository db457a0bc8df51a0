# model/equality.py - 元组项的模型等价判定
"""
闭项：直接比较模型值（判定过程）
含自由数量变量的项：在随机赋值下比较，找到反例即不等
"""

import random
from typing import Optional

import config
from model.evaluate import eval_model
from syntax.analysis import free_variables
from utils.logger import get_logger

logger = get_logger(__name__)


def check_tuplix_equal_random(left, right, trials: Optional[int] = None, seed: Optional[int] = None):
    """返回 rewrite.equality 中的 ProbablyEqual / Unequal 判定"""
    from rewrite.equality import ProbablyEqual, Unequal, sample_assignment

    trials = config.RANDOM_CHECK["trials"] if trials is None else trials
    seed = config.RANDOM_CHECK["seed"] if seed is None else seed
    if trials < 1:
        raise ValueError("trials 必须 ≥ 1")

    names = sorted(free_variables(left) | free_variables(right))
    if not names:
        if eval_model(left) == eval_model(right):
            return ProbablyEqual(trials=0, exact=True)
        return Unequal(witness={})

    rng = random.Random(seed)
    for _ in range(trials):
        env = sample_assignment(names, rng)
        if eval_model(left, env) != eval_model(right, env):
            logger.debug(f"找到反例赋值: {env}")
            return Unequal(witness=env)

    return ProbablyEqual(trials=trials)
