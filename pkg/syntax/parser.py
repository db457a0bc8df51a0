# syntax/parser.py - TTC 具体语法解析器
"""
基于 lark 的 LALR 解析器，同时提供数量和元组两个入口。

具体语法（ASCII）：
    eps / bot / a(q) / test(q) / t & t' / delay(t) / delay^n(t)
    abs{a,b}(t) / enc{a,b}@q(t) / enc{a}(t)（利率为0的封装）
    数量：+ - * / ^ 一元负号，sign(q) inv(q) max(q,q) min(q,q) icap@q(t)
运算优先级：一元负号 > ^ > * / > + -（2/3^2 读作 2 / 3^2）
"""

import re

from lark import Lark, Transformer, Token, Tree
from lark.exceptions import UnexpectedInput, UnexpectedEOF, VisitError

import config
from meadow import parse_rational
from syntax.analysis import actions_of, free_variables
from syntax.terms import (
    IOTA, EMPTY, BLOCK, ZERO,
    Var, Add, Mul, Neg, Inv, Sign, ICap,
    Transfer, ZeroTest, PreAbstr, IntEncap,
    literal, sub, div, power, max_, min_, delay_n, conj_all
)
from utils.errors import ParseError, NameClash, BadIdentifier
from utils.logger import get_logger

logger = get_logger(__name__)

GRAMMAR = r"""
?tuplix: prim ("&" prim)*

?prim: "eps"                                            -> empty
     | "bot"                                            -> block
     | "test" "(" qty ")"                               -> zero_test
     | "delay" ["^" INT] "(" tuplix ")"                 -> delay
     | "abs" "{" [actlist] "}" "(" tuplix ")"           -> pre_abstr
     | "enc" "{" [actlist] "}" ["@" qatom] "(" tuplix ")" -> int_encap
     | NAME "(" qty ")"                                 -> transfer
     | "(" tuplix ")"

actlist: NAME ("," NAME)*

?qty: product
    | qty "+" product                                   -> add
    | qty "-" product                                   -> sub

?product: factor
        | product "*" factor                            -> mul
        | product "/" factor                            -> div

?factor: unary
       | unary "^" INT                                  -> pow

?unary: atom
      | "-" unary                                       -> neg

?atom: qatom
     | "sign" "(" qty ")"                               -> sign
     | "inv" "(" qty ")"                                -> inv
     | "max" "(" qty "," qty ")"                        -> max
     | "min" "(" qty "," qty ")"                        -> min
     | "icap" "@" qatom "(" tuplix ")"                  -> icap

?qatom: NUMBER                                          -> number
      | NAME                                            -> var
      | "(" qty ")"                                     -> group

NUMBER: /\d+(\.\d+|\/[1-9]\d*)?/
INT: /\d+/
NAME: /""" + config.IDENTIFIER_PATTERN + r"""/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_PARSER = Lark(GRAMMAR, parser="lalr", start=["tuplix", "qty"], propagate_positions=False)
_IDENTIFIER = re.compile(config.IDENTIFIER_PATTERN)


def check_identifier(name: str) -> str:
    """语法之外给出的名称（借贷动作、--actions、绑定变量）按同一词法校验"""
    if not _IDENTIFIER.fullmatch(name) or name in config.RESERVED_WORDS:
        raise BadIdentifier(name)
    return name


def _identifier(token: Token) -> str:
    name = str(token)
    if name in config.RESERVED_WORDS:
        raise ParseError(token.line, token.column, ["NAME"])
    return name


class TermBuilder(Transformer):
    """语法树 → AST，同时展开派生形式"""

    # ---------- 元组 ----------

    def tuplix(self, items):
        return conj_all(items)

    def empty(self, _):
        return EMPTY

    def block(self, _):
        return BLOCK

    def zero_test(self, items):
        return ZeroTest(items[0])

    def delay(self, items):
        count, body = items
        return delay_n(body, 1 if count is None else int(count))

    def pre_abstr(self, items):
        actions, body = items
        actions = actions or frozenset()
        if IOTA in actions:
            logger.debug("预抽象集合中包含 iota，按普通成员处理")
        return PreAbstr(actions, body)

    def int_encap(self, items):
        actions, rate, body = items
        return IntEncap(actions or frozenset(), ZERO if rate is None else rate, body)

    def transfer(self, items):
        name, quantity = items
        return Transfer(_identifier(name), quantity)

    def actlist(self, items):
        return frozenset(_identifier(token) for token in items)

    # ---------- 数量 ----------

    def add(self, items):
        return Add(items[0], items[1])

    def sub(self, items):
        return sub(items[0], items[1])

    def mul(self, items):
        return Mul(items[0], items[1])

    def div(self, items):
        return div(items[0], items[1])

    def pow(self, items):
        base, exponent = items
        return power(base, int(exponent))

    def neg(self, items):
        return Neg(items[0])

    def sign(self, items):
        return Sign(items[0])

    def inv(self, items):
        return Inv(items[0])

    def max(self, items):
        return max_(items[0], items[1])

    def min(self, items):
        return min_(items[0], items[1])

    def icap(self, items):
        return ICap(items[0], items[1])

    def group(self, items):
        return items[0]

    def number(self, items):
        return literal(parse_rational(str(items[0])))

    def var(self, items):
        return Var(_identifier(items[0]))


_BUILDER = TermBuilder()


def _error_position(text: str, error: UnexpectedInput):
    """UnexpectedEOF 不带位置信息，此时定位到输入末尾"""
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if isinstance(error, UnexpectedEOF) or line is None or line < 0:
        lines = text.split("\n")
        return len(lines), len(lines[-1]) + 1
    return line, column


def _expected(error: UnexpectedInput):
    expected = getattr(error, "expected", None) or getattr(error, "allowed", None) or ()
    return [str(name) for name in expected]


def _split_rational_powers(tree: Tree):
    """
    记号 2/3 是一个 NUMBER，但 2/3^2 应当读作 2 / 3^2
    把底数为分数字面量（可带一元负号）的 pow 节点改写为 div(分子, pow(分母, n))，
    带括号的 (2/3)^2 是 group 节点，不受影响
    """
    for node in tree.iter_subtrees():
        if node.data != "pow":
            continue
        base, exponent = node.children
        inner = base
        while isinstance(inner, Tree) and inner.data == "neg":
            inner = inner.children[0]
        if not (isinstance(inner, Tree) and inner.data == "number"):
            continue
        token = inner.children[0]
        if "/" not in token:
            continue
        numerator, denominator = str(token).split("/")
        inner.children = [Token("NUMBER", numerator)]
        node.data = "div"
        node.children = [base, Tree("pow", [Tree("number", [Token("NUMBER", denominator)]), exponent])]


def _parse(text: str, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
        _split_rational_powers(tree)
        term = _BUILDER.transform(tree)
    except UnexpectedInput as e:
        line, column = _error_position(text, e)
        raise ParseError(line, column, _expected(e)) from None
    except VisitError as e:
        if isinstance(e.orig_exc, (ParseError, RecursionError)):
            raise e.orig_exc from None
        raise

    # 同一名称不能既作动作又作变量
    clash = (actions_of(term) & free_variables(term))
    if clash:
        raise NameClash(clash)

    return term


def parse_tuplix(text: str):
    """解析元组项"""
    return _parse(text, "tuplix")


def parse_quantity(text: str):
    """解析数量项"""
    return _parse(text, "qty")
