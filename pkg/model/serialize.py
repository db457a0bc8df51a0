# model/serialize.py - 定时元组的 JSON 表示与时间线
"""
JSON 形式：
    {"blocked": true}
    {"slices": [{"a": "7", "a'": "-8"}, ...]}
有理数一律写成精确字符串 "n" 或 "n/d"
"""

from typing import List, Tuple

from meadow import Rational, format_rational, parse_rational
from model.timed import Blocked, Schedule, TimedTuplix, BLOCKED


def to_json(timed: TimedTuplix) -> dict:
    if isinstance(timed, Blocked):
        return {"blocked": True}
    return {
        "slices": [
            {action: format_rational(value) for action, value in f.items()}
            for f in timed.slices
        ]
    }


def from_json(obj: dict) -> TimedTuplix:
    if obj.get("blocked"):
        return BLOCKED

    slices = obj.get("slices")
    if not isinstance(slices, list):
        raise ValueError("缺少 slices 字段")

    return Schedule(tuple(
        {action: parse_rational(value) for action, value in f.items()}
        for f in slices
    ))


def timeline(timed: TimedTuplix) -> List[Tuple[int, str, Rational]]:
    """按 (时间片, 动作, 数量) 展开为行；阻塞元组没有行"""
    if isinstance(timed, Blocked):
        return []
    return [
        (index, action, value)
        for index, f in enumerate(timed.slices)
        for action, value in f.items()
    ]
