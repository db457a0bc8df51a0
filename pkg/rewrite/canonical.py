# rewrite/canonical.py - 规范形
"""
元组闭项的规范形：一组守卫（零测试的参数）加上逐时间片的符号转移行

    test(g₁) & test(g₂) & a₁(p₁) & … & delay(b₁(q₁) & … & delay(…))

同一时间片内每个动作至多出现一次；行内按动作名排序，守卫按首次出现排序。
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from syntax.printer import print_term
from syntax.terms import (
    ZERO, ONE, Add, Transfer, ZeroTest, Delay, div, conj_all
)

Row = Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class CanonicalTuplix:
    guards: Tuple[object, ...] = ()
    slices: Tuple[Row, ...] = ((),)

    def __post_init__(self):
        slices = [tuple(sorted(dict(row).items())) for row in self.slices]
        while len(slices) > 1 and not slices[-1]:
            slices.pop()
        object.__setattr__(self, "guards", tuple(self.guards))
        object.__setattr__(self, "slices", tuple(slices) or ((),))

    @classmethod
    def blocked(cls) -> "CanonicalTuplix":
        """γ(1) = bot"""
        return cls(guards=(ONE,))

    @property
    def is_blocked(self) -> bool:
        return self.guards == (ONE,)

    @property
    def guard(self):
        """合并后的守卫：无守卫为 0，单个守卫原样返回，否则为 Σ g/g"""
        if not self.guards:
            return ZERO
        if len(self.guards) == 1:
            return self.guards[0]

        parts = [div(g, g) for g in self.guards]
        total = parts[0]
        for part in parts[1:]:
            total = Add(total, part)
        return total

    @property
    def horizon(self) -> int:
        return len(self.slices)

    def rows(self) -> List[Dict[str, object]]:
        return [dict(row) for row in self.slices]

    def reify(self):
        """重建为元组项"""
        body = None
        for row in reversed(self.slices):
            parts = [Transfer(action, quantity) for action, quantity in row]
            if body is not None:
                parts.append(Delay(body))
            body = conj_all(parts)

        tests = [ZeroTest(g) for g in self.guards]
        if body is None or body == conj_all([]):
            return conj_all(tests)
        return conj_all(tests + [body])

    def to_json(self) -> dict:
        return {
            "guard": print_term(self.guard),
            "guards": [print_term(g) for g in self.guards],
            "slices": [
                {action: print_term(quantity) for action, quantity in row}
                for row in self.slices
            ]
        }

    def __str__(self):
        return print_term(self.reify())
