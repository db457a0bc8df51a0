# tests/strategies.py - hypothesis 数据生成策略
from fractions import Fraction

from hypothesis import strategies as st

from model.timed import BLOCKED, Schedule, TransferMap
from syntax.terms import (
    EMPTY, BLOCK, ZERO,
    Var, Add, Mul, Neg, Inv, Sign,
    Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap,
    literal
)

ACTIONS = ("a", "b", "c", "iota")
VARIABLES = ("u", "v", "p")

rationals = st.one_of(
    st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2)]),
    st.fractions(min_value=-50, max_value=50, max_denominator=20)
)

# 大于 −1 的利率
rates = st.one_of(
    st.sampled_from([Fraction(0), Fraction(1, 100), Fraction(1, 10), Fraction(1), Fraction(-1, 2)]),
    st.fractions(min_value=Fraction(-9, 10), max_value=3, max_denominator=100)
)

actions = st.sampled_from(ACTIONS)
action_sets = st.frozensets(actions, max_size=3)


def quantity_terms(variables=()):
    leaves = rationals.map(literal)
    if variables:
        leaves = st.one_of(leaves, st.sampled_from([Var(name) for name in variables]))

    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Add, children, children),
            st.builds(Mul, children, children),
            st.builds(Neg, children),
            st.builds(Inv, children),
            st.builds(Sign, children)
        ),
        max_leaves=5
    )


def tuplix_terms(variables=(), max_leaves=8):
    """
    元组项；变量只出现在数量位置
    封装利率取闭字面量或变量 p
    """
    quantities = quantity_terms(variables)
    rate_terms = rates.map(literal)
    if "p" in variables:
        rate_terms = st.one_of(rate_terms, st.just(Var("p")))

    leaves = st.one_of(
        st.builds(Transfer, actions, quantities),
        st.builds(Transfer, actions, quantities),
        st.builds(Transfer, actions, quantities),
        st.just(EMPTY),
        st.just(BLOCK),
        st.builds(ZeroTest, st.one_of(st.just(ZERO), quantities))
    )

    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Conj, children, children),
            st.builds(Conj, children, children),
            st.builds(Delay, children),
            st.builds(PreAbstr, action_sets, children),
            st.builds(IntEncap, action_sets, rate_terms, children)
        ),
        max_leaves=max_leaves
    )


closed_tuplix_terms = tuplix_terms()

transfer_maps = st.dictionaries(actions, rationals, max_size=3).map(TransferMap)

schedules = st.lists(transfer_maps, max_size=4).map(lambda slices: Schedule(tuple(slices)))

timed_tuplices = st.one_of(st.just(BLOCKED), schedules, schedules)


def assignments(names=VARIABLES):
    return st.fixed_dictionaries({name: rationals for name in names})
