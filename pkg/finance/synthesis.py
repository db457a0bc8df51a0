# finance/synthesis.py - 纯信贷产品合成
"""
给定金融行为 t′ 和利率 r，构造纯信贷产品

    t = borrow(−C) & delay^n(repay((1+r)^n · C))

其中 C = IC_r(t′)，n 为 t′ 中延迟的最大嵌套深度。t 在利率 r 下是纯的，
自身隐含资本为0。r > −1 时组合 t & t′ 的隐含资本恰为 max(0, PV(t′))，
PV 为 t′ 的全部转移贴现到第0片之和；只有 PV ≤ 0 时组合才完全不需要资本。
"""

from fractions import Fraction
from typing import Optional

import config
from finance.analysis import implicit_capital, present_value
from meadow import ONE, pow
from syntax.analysis import actions_of, delay_depth
from syntax.parser import check_identifier
from syntax.terms import EMPTY, Conj, Transfer, literal, delay_n
from utils.errors import ActionClash, BlockedBehaviour
from utils.logger import get_logger

logger = get_logger(__name__)


def synthesize_pure_credit(
    behaviour,
    rate: Fraction,
    borrow: Optional[str] = None,
    repay: Optional[str] = None
):
    rate = Fraction(rate)
    borrow = check_identifier(borrow or config.SYNTH_DEFAULTS["borrow"])
    repay = check_identifier(repay or config.SYNTH_DEFAULTS["repay"])

    if rate == -1:
        raise ValueError("利率不能为 −1")

    clash = {borrow, repay} & actions_of(behaviour)
    if clash:
        raise ActionClash(clash)

    capital = implicit_capital(behaviour, rate)
    if not capital.defined:
        raise BlockedBehaviour()
    if capital.amount == 0:
        return EMPTY

    pv = present_value(behaviour, rate)
    if pv > 0:
        logger.warning(f"行为的现值为 {pv} > 0，组合后仍需隐含资本 {pv}")

    depth = delay_depth(behaviour)
    repayment = pow(ONE + rate, depth) * capital.amount
    logger.debug(f"合成信贷: C={capital.amount}, n={depth}, 偿还 {repayment}")

    return Conj(
        Transfer(borrow, literal(-capital.amount)),
        delay_n(Transfer(repay, literal(repayment)), depth)
    )
