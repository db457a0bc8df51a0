# tests/conftest.py - 公共夹具
import logging
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

import config
from syntax import parse_tuplix

settings.register_profile(
    "ttc",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large]
)
settings.load_profile("ttc")

P = Fraction(1, 100)
Q = Fraction(1, 10)

# 储蓄产品 t 与想要的金融行为 t′
PRODUCT_TEXT = "b(-5) & delay^2(b'((1+1/10)^2*5))"
BEHAVIOUR_TEXT = "a(7) & delay(a'(-8))"


@pytest.fixture
def product():
    return parse_tuplix(PRODUCT_TEXT)


@pytest.fixture
def behaviour():
    return parse_tuplix(BEHAVIOUR_TEXT)


@pytest.fixture
def ttc_log(caplog):
    """工具根日志器不向上传播，需要单独挂上 caplog 的处理器"""
    root = logging.getLogger(config.APP_NAME)
    root.addHandler(caplog.handler)
    caplog.set_level(logging.DEBUG, logger=config.APP_NAME)
    yield caplog
    root.removeHandler(caplog.handler)
