# syntax/analysis.py - 项的语法遍历工具
"""
遍历都用显式栈完成，解析器产生的长合取链和深层延迟不会触发 RecursionError
"""

from typing import FrozenSet, Iterator, Set, Tuple

from syntax.terms import (
    IOTA, Var, Add, Mul, Neg, Inv, Sign, ICap,
    Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap
)


def _children(term) -> Tuple:
    """直接子项（两个排序）"""
    if isinstance(term, (Add, Mul, Conj)):
        return (term.left, term.right)
    if isinstance(term, (Neg, Inv, Sign)):
        return (term.arg,)
    if isinstance(term, (Transfer, ZeroTest)):
        return (term.quantity,)
    if isinstance(term, (ICap, IntEncap)):
        return (term.rate, term.body)
    if isinstance(term, (Delay, PreAbstr)):
        return (term.body,)
    return ()


def _walk(term) -> Iterator:
    stack = [term]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(_children(node))


def actions_of(term) -> FrozenSet[str]:
    """
    项中出现的全部动作
    包括转移位置的动作、I/H 集合中的动作（以及数量子项中 ICap 体内的动作），恒含 iota
    """
    found: Set[str] = {IOTA}
    for node in _walk(term):
        if isinstance(node, Transfer):
            found.add(node.action)
        elif isinstance(node, (PreAbstr, IntEncap)):
            found.update(node.actions)
    return frozenset(found)


def free_variables(term) -> FrozenSet[str]:
    """项（任一排序）中出现的数量变量"""
    return frozenset(node.name for node in _walk(term) if isinstance(node, Var))


def is_closed(term) -> bool:
    return not free_variables(term)


def delay_depth(term) -> int:
    """σ 的最大嵌套深度（只看元组结构，数量子项中的 ICap 体不计入）"""
    deepest = 0
    stack = [(term, 0)]
    while stack:
        node, depth = stack.pop()
        deepest = max(deepest, depth)
        if isinstance(node, Delay):
            stack.append((node.body, depth + 1))
        elif isinstance(node, Conj):
            stack.append((node.left, depth))
            stack.append((node.right, depth))
        elif isinstance(node, (PreAbstr, IntEncap)):
            stack.append((node.body, depth))
    return deepest
