# cli/commands.py - 各子命令的实现
"""
每个命令接收 RunConfig，把结果打印到标准输出并返回退出码
"""

import json

import config
from cli.options import RunConfig
from cli.render import render_timeline
from finance import is_pure, implicit_capital, profits_from, synthesize_pure_credit
from model import eval_model, equal_model, check_tuplix_equal_random, to_json
from rewrite import normalize, substitute
from syntax import ActionUniverse, free_variables, parse_tuplix, print_term
from utils.logger import get_logger

logger = get_logger(__name__)

OK = config.EXIT_CODES["ok"]
FALSE = config.EXIT_CODES["false"]


def _expect_inputs(run: RunConfig, count: int):
    if len(run.inputs) != count:
        raise ValueError(f"{run.command} 需要 {count} 个输入，实际为 {len(run.inputs)}")


def _closed_term(run: RunConfig, text: str):
    """解析并代入绑定变量"""
    return substitute(parse_tuplix(text), run.bindings)


def _emit(run: RunConfig, text: str, payload: dict):
    if run.json_output:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def cmd_fmt(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    text = print_term(parse_tuplix(run.inputs[0]))
    _emit(run, text, {"term": text})
    return OK


def cmd_normalize(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    canonical = normalize(_closed_term(run, run.inputs[0]))
    _emit(run, str(canonical), canonical.to_json())
    return OK


def cmd_eval(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    timed = eval_model(parse_tuplix(run.inputs[0]), run.bindings)
    _emit(run, render_timeline(timed), to_json(timed))
    return OK


def cmd_equal(run: RunConfig) -> int:
    _expect_inputs(run, 2)
    left, right = (_closed_term(run, text) for text in run.inputs)

    if not (free_variables(left) | free_variables(right)):
        equal = equal_model(eval_model(left), eval_model(right))
        verdict_text = "equal" if equal else "unequal"
        _emit(run, verdict_text, {"equal": equal, "exact": True})
        return OK if equal else FALSE

    verdict = check_tuplix_equal_random(left, right, trials=run.trials, seed=run.seed)
    payload = {"equal": bool(verdict), "exact": False}
    if not verdict:
        payload["witness"] = {name: str(value) for name, value in verdict.witness.items()}
    _emit(run, str(verdict), payload)
    return OK if verdict else FALSE


def cmd_icap(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    result = implicit_capital(_closed_term(run, run.inputs[0]), run.rate)
    _emit(run, str(result), result.model_dump(mode="json"))
    return OK


def cmd_pure(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    term = _closed_term(run, run.inputs[0])
    universe = ActionUniverse.of(term, extra=run.actions)
    report = is_pure(term, run.rate, universe)

    text = f"pure: {str(report.pure).lower()}"
    if report.blocked:
        text += " (blocked)"
    elif not report.pure:
        text += f" (residual {report.model_dump(mode='json')['residual']})"
    _emit(run, text, report.model_dump(mode="json"))
    return OK if report.pure else FALSE


def cmd_profit(run: RunConfig) -> int:
    _expect_inputs(run, 2)
    product, behaviour = (_closed_term(run, text) for text in run.inputs)
    report = profits_from(product, behaviour, run.rate)

    text = (
        f"profits: {str(report.profits).lower()} "
        f"(icap behaviour {report.icap_behaviour}, combined {report.icap_combined})"
    )
    _emit(run, text, report.model_dump(mode="json"))
    return OK if report.profits else FALSE


def cmd_synth(run: RunConfig) -> int:
    _expect_inputs(run, 1)
    product = synthesize_pure_credit(
        _closed_term(run, run.inputs[0]), run.rate, run.borrow, run.repay
    )
    text = print_term(product)
    _emit(run, text, {"product": text})
    return OK


COMMANDS = {
    "fmt": cmd_fmt,
    "normalize": cmd_normalize,
    "eval": cmd_eval,
    "equal": cmd_equal,
    "icap": cmd_icap,
    "pure": cmd_pure,
    "profit": cmd_profit,
    "synth": cmd_synth
}
