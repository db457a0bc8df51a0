# model/evaluate.py - 闭项在标准模型中的解释
from fractions import Fraction
from typing import List, Mapping, Optional

from model.semantics import (
    transfer_model, ztest_model, conj_model, delay_model,
    pabstr_model, iencap_model
)
from model.timed import TimedTuplix, BLOCKED, EPSILON
from syntax.terms import (
    Empty, Block, Transfer, ZeroTest, Conj, Delay, PreAbstr, IntEncap
)
from utils.logger import get_logger

logger = get_logger(__name__)


def eval_model(term, env: Optional[Mapping[str, Fraction]] = None) -> TimedTuplix:
    """
    按标准模型的解释表对元组项求值
    数量子项在 env 下求值；env 为空时要求项是闭项，否则抛出 UnboundVariable

    后序遍历用显式栈完成，上千个合取项或延迟的嵌套深度不受递归深度限制
    """
    from rewrite.quantity import eval_quantity

    env = env or {}
    results: List[TimedTuplix] = []
    stack = [(term, False)]

    while stack:
        node, expanded = stack.pop()

        if isinstance(node, Empty):
            results.append(EPSILON)
        elif isinstance(node, Block):
            results.append(BLOCKED)
        elif isinstance(node, Transfer):
            results.append(transfer_model(node.action, eval_quantity(node.quantity, env)))
        elif isinstance(node, ZeroTest):
            results.append(ztest_model(eval_quantity(node.quantity, env)))

        elif isinstance(node, Conj):
            if not expanded:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))
            else:
                right = results.pop()
                left = results.pop()
                results.append(conj_model(left, right))

        elif isinstance(node, (Delay, PreAbstr, IntEncap)):
            if not expanded:
                stack.append((node, True))
                stack.append((node.body, False))
            else:
                results.append(_apply_unary(node, results.pop(), env, eval_quantity))

        else:
            raise TypeError(f"不是元组项: {node!r}")

    return results.pop()


def _apply_unary(node, body: TimedTuplix, env, eval_quantity) -> TimedTuplix:
    if isinstance(node, Delay):
        return delay_model(body)
    if isinstance(node, PreAbstr):
        return pabstr_model(node.actions, body)
    return iencap_model(node.actions, eval_quantity(node.rate, env), body)
