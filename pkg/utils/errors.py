# utils/errors.py - 领域异常
from typing import Iterable, Tuple

import config


class TTCError(Exception):
    """所有领域错误的基类"""

    message_key = None

    def __init__(self, **details):
        self.details = details
        template = config.ERROR_MESSAGES.get(self.message_key, self.message_key or "")
        super().__init__(template.format(**details))


class ParseError(TTCError):
    """语法错误，携带位置和期望的记号集合"""

    message_key = "parse_error"

    def __init__(self, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        super().__init__(
            line=line,
            column=column,
            expected=", ".join(self.expected) or "?"
        )


class NameClash(ParseError):
    """同一名称既作动作又作数量变量"""

    message_key = "name_clash"

    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        self.line = 0
        self.column = 0
        self.expected = ()
        TTCError.__init__(self, names=", ".join(self.names))


class BadIdentifier(TTCError):
    """命令行或 API 给出的动作名、变量名不是合法标识符，或是保留字"""

    message_key = "bad_identifier"

    def __init__(self, name: str):
        self.name = name
        super().__init__(name=repr(name))


class UnboundVariable(TTCError):
    message_key = "unbound_variable"

    def __init__(self, name: str):
        self.name = name
        super().__init__(name=name)


class UnresolvableGuard(TTCError):
    """守卫依赖开放变量，无法判定阻塞与否"""

    message_key = "unresolvable_guard"

    def __init__(self, guard: str):
        self.guard = guard
        super().__init__(guard=guard)


class BlockedBehaviour(TTCError):
    message_key = "blocked_behaviour"


class ActionClash(TTCError):
    message_key = "action_clash"

    def __init__(self, actions: Iterable[str]):
        self.actions = tuple(sorted(actions))
        super().__init__(actions=", ".join(self.actions))
