# tests/test_axioms.py - 公理在标准模型中的可靠性
"""
每条公理的两边用随机闭子项实例化后，在标准模型中取值必须相同。
带利率移动转移与延迟交换两条规则只在利率不为 −1 时检验（rates 策略只生成大于 −1 的利率）；
延迟上的隐含资本规则两边带有 (1+IC)/(1+IC) 因子，阻塞主体时两边都为0。
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from model import EPSILON, eval_model, schedule
from rewrite import eval_quantity
from syntax import (
    IOTA, ZERO, ONE, EMPTY, BLOCK,
    Add, Mul, ICap, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap,
    literal, sub, div, max_, encap, actions_of
)
from tests.strategies import action_sets, actions, quantity_terms, rates, tuplix_terms

N = 1_000

terms = tuplix_terms(max_leaves=5)
quantities = quantity_terms()
rate_terms = rates.map(literal)
any_rate_terms = st.one_of(rate_terms, st.just(literal(-1)))


def assert_same(lhs, rhs):
    assert eval_model(lhs) == eval_model(rhs)


def assert_same_quantity(lhs, rhs):
    assert eval_quantity(lhs) == eval_quantity(rhs)


# ---------- 合取与零测试 ----------

class TestConjunctionAxioms:

    @settings(max_examples=N)
    @given(terms, terms)
    def test_conj_is_commutative(self, x, y):
        assert_same(Conj(x, y), Conj(y, x))

    @settings(max_examples=N)
    @given(terms, terms, terms)
    def test_conj_is_associative(self, x, y, z):
        assert_same(Conj(Conj(x, y), z), Conj(x, Conj(y, z)))

    @settings(max_examples=N)
    @given(terms)
    def test_eps_is_unit(self, x):
        assert_same(Conj(x, EMPTY), x)

    @settings(max_examples=N)
    @given(terms)
    def test_bot_absorbs(self, x):
        assert_same(Conj(x, BLOCK), BLOCK)

    @settings(max_examples=N)
    @given(actions, quantities, quantities)
    def test_same_action_transfers_merge(self, a, u, v):
        assert_same(Conj(Transfer(a, u), Transfer(a, v)), Transfer(a, Add(u, v)))

    @settings(max_examples=N)
    @given(quantities)
    def test_zero_test_of_normalized_quantity(self, u):
        assert_same(ZeroTest(u), ZeroTest(div(u, u)))

    def test_closed_zero_tests(self):
        assert_same(ZeroTest(ZERO), EMPTY)
        assert_same(ZeroTest(ONE), BLOCK)

    @settings(max_examples=N)
    @given(quantities, quantities)
    def test_zero_tests_combine(self, u, v):
        assert_same(Conj(ZeroTest(u), ZeroTest(v)), ZeroTest(Add(div(u, u), div(v, v))))

    @settings(max_examples=N)
    @given(actions, quantities, quantities)
    def test_guarded_replacement(self, a, u, v):
        guard = ZeroTest(sub(u, v))
        assert_same(Conj(guard, Transfer(a, u)), Conj(guard, Transfer(a, v)))


# ---------- 封装 ----------

class TestEncapsulationAxioms:

    @settings(max_examples=N)
    @given(action_sets)
    def test_encap_of_constants(self, h):
        assert_same(encap(h, EMPTY), EMPTY)
        assert_same(encap(h, BLOCK), BLOCK)

    @settings(max_examples=N)
    @given(action_sets, quantities)
    def test_encap_keeps_zero_test(self, h, u):
        assert_same(encap(h, ZeroTest(u)), ZeroTest(u))

    @settings(max_examples=N)
    @given(action_sets, actions, quantities)
    def test_encap_of_transfer(self, h, a, u):
        if a in h:
            assert_same(encap(h, Transfer(a, u)), ZeroTest(u))
        else:
            assert_same(encap(h, Transfer(a, u)), Transfer(a, u))

    @settings(max_examples=N)
    @given(action_sets, terms, terms)
    def test_encap_distributes_over_encapsulated_conjunct(self, h, x, y):
        assert_same(encap(h, Conj(x, encap(h, y))), Conj(encap(h, x), encap(h, y)))

    @settings(max_examples=N)
    @given(action_sets, action_sets, terms)
    def test_encap_composes(self, h, h2, x):
        assert_same(encap(h | h2, x), encap(h, encap(h2, x)))


# ---------- 延迟 ----------

class TestDelayAxioms:

    def test_delay_of_constants(self):
        assert_same(Delay(EMPTY), EMPTY)
        assert_same(Delay(BLOCK), BLOCK)

    @settings(max_examples=N)
    @given(quantities)
    def test_delay_keeps_zero_test(self, u):
        assert_same(Delay(ZeroTest(u)), ZeroTest(u))

    @settings(max_examples=N)
    @given(terms, terms)
    def test_delay_distributes(self, x, y):
        assert_same(Delay(Conj(x, y)), Conj(Delay(x), Delay(y)))


# ---------- 预抽象 ----------

class TestPreAbstractionAxioms:

    @settings(max_examples=N)
    @given(action_sets, quantities)
    def test_pabstr_of_constants_and_tests(self, i, u):
        assert_same(PreAbstr(i, EMPTY), EMPTY)
        assert_same(PreAbstr(i, BLOCK), BLOCK)
        assert_same(PreAbstr(i, ZeroTest(u)), ZeroTest(u))

    @settings(max_examples=N)
    @given(action_sets, actions, quantities)
    def test_pabstr_of_transfer(self, i, a, u):
        if a in i:
            assert_same(PreAbstr(i, Transfer(a, u)), Transfer(IOTA, u))
        else:
            assert_same(PreAbstr(i, Transfer(a, u)), Transfer(a, u))

    @settings(max_examples=N)
    @given(action_sets, terms, terms)
    def test_pabstr_distributes(self, i, x, y):
        assert_same(PreAbstr(i, Conj(x, y)), Conj(PreAbstr(i, x), PreAbstr(i, y)))

    @settings(max_examples=N)
    @given(action_sets, terms)
    def test_pabstr_commutes_with_delay(self, i, x):
        assert_same(PreAbstr(i, Delay(x)), Delay(PreAbstr(i, x)))

    @settings(max_examples=N)
    @given(action_sets, action_sets, terms)
    def test_pabstr_composes(self, i, i2, x):
        assert_same(PreAbstr(i | i2, x), PreAbstr(i, PreAbstr(i2, x)))


# ---------- 计息封装 ----------

class TestInterestEncapsulationAxioms:

    @settings(max_examples=N)
    @given(actions, rate_terms, quantities, terms)
    def test_transfer_moves_one_slice_with_interest(self, a, u, v, x):
        growth = Add(ONE, u)
        guard = ZeroTest(sub(ONE, div(growth, growth)))
        h = frozenset({a})
        lhs = Conj(guard, IntEncap(h, u, Conj(Transfer(a, v), x)))
        rhs = Conj(guard, IntEncap(h, u, Conj(Delay(Transfer(a, Mul(growth, v))), x)))
        assert_same(lhs, rhs)

    @settings(max_examples=N)
    @given(action_sets, any_rate_terms, quantities)
    def test_iencap_of_constants_and_tests(self, h, u, v):
        assert_same(IntEncap(h, u, EMPTY), EMPTY)
        assert_same(IntEncap(h, u, BLOCK), BLOCK)
        assert_same(IntEncap(h, u, ZeroTest(v)), ZeroTest(v))

    @settings(max_examples=N)
    @given(action_sets, any_rate_terms, actions, quantities)
    def test_iencap_of_transfer(self, h, u, a, v):
        if a in h:
            assert_same(IntEncap(h, u, Transfer(a, v)), ZeroTest(v))
        else:
            assert_same(IntEncap(h, u, Transfer(a, v)), Transfer(a, v))

    @settings(max_examples=N)
    @given(action_sets, any_rate_terms, terms, terms)
    def test_iencap_distributes_over_encapsulated_conjunct(self, h, u, x, y):
        lhs = IntEncap(h, u, Conj(x, IntEncap(h, u, y)))
        rhs = Conj(IntEncap(h, u, x), IntEncap(h, u, y))
        assert_same(lhs, rhs)

    @settings(max_examples=N)
    @given(action_sets, rate_terms, terms)
    def test_iencap_commutes_with_delay(self, h, u, x):
        assert_same(IntEncap(h, u, Delay(x)), Delay(IntEncap(h, u, x)))

    @settings(max_examples=N)
    @given(action_sets, action_sets, any_rate_terms, terms)
    def test_iencap_composes(self, h, h2, u, x):
        assert_same(IntEncap(h | h2, u, x), IntEncap(h, u, IntEncap(h2, u, x)))

    def test_growing_weights_would_block_a_derivable_eps(self):
        # 第 i 片按 (1+d)^i 加权会让这个可推导为 ε 的项阻塞
        timed = schedule({"a": 1}, {"a": -2})
        growing = sum(Fraction(2) ** i * f["a"] for i, f in enumerate(timed.slices))
        assert growing != 0
        assert eval_model(IntEncap(frozenset({"a"}), ONE, Conj(Transfer("a", ONE), Delay(Transfer("a", literal(-2)))))) == EPSILON


# ---------- 隐含资本 ----------

class TestImplicitCapitalAxioms:

    @settings(max_examples=N)
    @given(any_rate_terms, terms)
    def test_icap_ignores_action_names(self, u, x):
        assert_same_quantity(ICap(u, x), ICap(u, PreAbstr(actions_of(x), x)))

    @settings(max_examples=N)
    @given(any_rate_terms)
    def test_icap_of_constants(self, u):
        assert eval_quantity(ICap(u, EMPTY)) == 0
        assert eval_quantity(ICap(u, BLOCK)) == -1

    @settings(max_examples=N)
    @given(any_rate_terms, quantities)
    def test_icap_of_single_transfer(self, u, v):
        assert_same_quantity(ICap(u, Transfer(IOTA, v)), max_(v, ZERO))

    @settings(max_examples=N)
    @given(any_rate_terms, terms)
    def test_icap_of_delay(self, u, x):
        capital = ICap(u, x)
        defined = div(Add(ONE, capital), Add(ONE, capital))
        lhs = Mul(defined, ICap(u, Delay(x)))
        rhs = Mul(defined, max_(Mul(div(ONE, Add(ONE, u)), capital), ZERO))
        assert_same_quantity(lhs, rhs)

    @settings(max_examples=N)
    @given(any_rate_terms, quantities, terms)
    def test_icap_of_transfer_then_delay(self, u, v, x):
        capital = ICap(u, x)
        defined = div(Add(ONE, capital), Add(ONE, capital))
        lhs = Mul(defined, ICap(u, Conj(Transfer(IOTA, v), Delay(x))))
        rhs = Mul(defined, max_(Add(v, Mul(div(ONE, Add(ONE, u)), capital)), ZERO))
        assert_same_quantity(lhs, rhs)
