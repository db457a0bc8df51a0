# finance/analysis.py - 纯度、隐含资本与收益比较
"""
纯度判定：∂_{ι}^{r}(π_A(x)) = ε，
即所有转移按利率 r 贴现到第0片后总和为0。
"""

from fractions import Fraction
from typing import List, Optional

from finance.reports import PurityReport, ProfitReport, ProductClassification
from meadow import ZERO, ONE, add, mul, inv
from model.evaluate import eval_model
from model.semantics import pabstr_model, atotal, iencap_model, icap_model
from model.timed import Blocked, ICapResult, EPSILON
from syntax.analysis import actions_of
from syntax.terms import IOTA, Conj
from syntax.universe import ActionUniverse
from utils.errors import BlockedBehaviour
from utils.logger import get_logger

logger = get_logger(__name__)


def _abstract_all(term, universe: Optional[ActionUniverse] = None):
    """
    π_A 作用在 term 的模型值上
    A 默认取项中出现的全部动作；显式给出的全集必须覆盖这些动作，否则抛出 ValueError
    """
    if universe is None:
        universe = ActionUniverse.of(term)
    elif not universe.covers(term):
        missing = sorted(actions_of(term) - universe.actions)
        raise ValueError(f"动作全集未覆盖项中的动作: {', '.join(missing)}")

    timed = eval_model(term)
    if isinstance(timed, Blocked):
        return timed
    return pabstr_model(universe.actions | timed.actions(), timed)


def is_pure(term, rate: Fraction, universe: Optional[ActionUniverse] = None) -> PurityReport:
    rate = Fraction(rate)
    abstracted = _abstract_all(term, universe)

    if isinstance(abstracted, Blocked):
        return PurityReport(pure=False, rate=rate, residual=ZERO, blocked=True)

    residual = atotal(IOTA, rate, abstracted)
    pure = iencap_model({IOTA}, rate, abstracted) == EPSILON
    logger.debug(f"纯度检验 rate={rate}: 残差 {residual}")
    return PurityReport(pure=pure, rate=rate, residual=residual, blocked=False)


def present_value(term, rate: Fraction, universe: Optional[ActionUniverse] = None) -> Fraction:
    """全部转移贴现到第0片的总和"""
    abstracted = _abstract_all(term, universe)
    if isinstance(abstracted, Blocked):
        raise BlockedBehaviour()
    return atotal(IOTA, Fraction(rate), abstracted)


def implicit_capital(term, rate: Fraction) -> ICapResult:
    return icap_model(Fraction(rate), eval_model(term))


def capital_profile(term, rate: Fraction) -> List[Fraction]:
    """
    贴现累计和 S_k = Σ_{i≤k} (1+r)^{-i}·q_i
    r > −1 时隐含资本等于 max(0, max_k S_k)
    """
    timed = eval_model(term)
    if isinstance(timed, Blocked):
        raise BlockedBehaviour()

    discount = inv(add(ONE, Fraction(rate)))
    weight = ONE
    running = ZERO
    profile = []
    for f in timed.slices:
        running = add(running, mul(weight, f.total()))
        profile.append(running)
        weight = mul(weight, discount)
    return profile


def profits_from(product, behaviour, savings_rate: Fraction) -> ProfitReport:
    """组合纯金融产品后所需隐含资本是否严格下降"""
    savings_rate = Fraction(savings_rate)
    alone = implicit_capital(behaviour, savings_rate)
    combined = implicit_capital(Conj(product, behaviour), savings_rate)

    profits = alone.defined and combined.defined and combined.amount < alone.amount
    return ProfitReport(
        savings_rate=savings_rate,
        icap_behaviour=alone,
        icap_combined=combined,
        profits=profits
    )


def classify_product(term, rate: Fraction) -> ProductClassification:
    purity = is_pure(term, rate)
    icap = implicit_capital(term, rate)

    if purity.blocked:
        kind = "blocked"
    elif not purity.pure:
        kind = "impure"
    elif icap.amount == 0:
        kind = "credit"
    else:
        kind = "savings"

    return ProductClassification(kind=kind, purity=purity, icap=icap)
