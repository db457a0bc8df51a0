# cli/render.py - 结果的文本渲染
from meadow import format_rational
from model.serialize import timeline
from model.timed import Blocked, TimedTuplix


def render_timeline(timed: TimedTuplix) -> str:
    """
    时间线表格：行为时间片，列为动作
    阻塞元组渲染为 BLOCKED，ε 渲染为 eps
    """
    if isinstance(timed, Blocked):
        return "BLOCKED"

    rows = timeline(timed)
    if not rows:
        return "eps"

    actions = sorted({action for _, action, _ in rows})
    cells = {(index, action): format_rational(value) for index, action, value in rows}

    header = ["slice"] + actions
    table = [header]
    for index in range(timed.horizon):
        table.append([str(index)] + [cells.get((index, a), "") for a in actions])

    widths = [max(len(row[col]) for row in table) for col in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines)
