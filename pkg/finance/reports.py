# finance/reports.py - 金融分析结果的数据模型
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from meadow import RationalField
from model.timed import ICapResult


class PurityReport(BaseModel):
    """纯度检验结果：pure ⟺ 未阻塞且残差为0"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pure: bool
    rate: RationalField
    residual: RationalField
    blocked: bool

    @model_validator(mode="after")
    def _check_consistency(self):
        if self.pure != (not self.blocked and self.residual == 0):
            raise ValueError("pure 与 blocked/residual 不一致")
        return self


class ProfitReport(BaseModel):
    """组合前后的隐含资本比较"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    savings_rate: RationalField
    icap_behaviour: ICapResult
    icap_combined: ICapResult
    profits: bool

    @model_validator(mode="after")
    def _check_consistency(self):
        expected = (
            self.icap_behaviour.defined
            and self.icap_combined.defined
            and self.icap_combined.amount < self.icap_behaviour.amount
        )
        if self.profits != expected:
            raise ValueError("profits 与隐含资本不一致")
        return self


class ProductClassification(BaseModel):
    """
    credit：纯且隐含资本为0
    savings：纯且隐含资本大于0
    impure / blocked：不是纯金融产品
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["credit", "savings", "impure", "blocked"]
    purity: PurityReport
    icap: ICapResult
