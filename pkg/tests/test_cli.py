# tests/test_cli.py - 命令行入口
import json
import logging
from fractions import Fraction

import pytest

from cli import main
from cli.options import RunConfig, parse_rate_spec
from cli.render import render_timeline
from model import BLOCKED, EPSILON, schedule
from tests.conftest import BEHAVIOUR_TEXT, PRODUCT_TEXT, P, Q

FOUR_TRANSFERS = f"{BEHAVIOUR_TEXT} & {PRODUCT_TEXT}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


class TestRender:

    def test_timeline_table(self):
        lines = render_timeline(schedule({"a": 7}, {"a'": -8})).splitlines()
        assert lines[0].split() == ["slice", "a", "a'"]
        assert lines[1].split() == ["0", "7"]
        assert lines[2].split() == ["1", "-8"]
        assert all(line == line.rstrip() for line in lines)

    def test_special_values(self):
        assert render_timeline(BLOCKED) == "BLOCKED"
        assert render_timeline(EPSILON) == "eps"

    def test_rate_spec(self):
        assert parse_rate_spec("p=1/100") == ("p", Fraction(1, 100))
        assert parse_rate_spec("1/10")[0] is None


class TestRunConfig:

    def test_bare_rate_wins(self, ttc_log):
        options = RunConfig("pure", bindings={"q": Q, "p": P}, analysis_rate=Fraction(1, 2))
        assert options.rate == Fraction(1, 2)
        assert not [r for r in ttc_log.records if r.levelno >= logging.WARNING]

    def test_single_binding_is_quiet(self, ttc_log):
        assert RunConfig("pure", bindings={"q": Q}).rate == Q
        assert not [r for r in ttc_log.records if r.levelno >= logging.WARNING]

    def test_first_of_several_bindings_is_reported(self, ttc_log):
        assert RunConfig("pure", bindings={"q": Q, "p": P}).rate == Q
        warnings = [r for r in ttc_log.records if r.levelno == logging.WARNING]
        assert len(warnings) == 1
        assert "q=1/10" in warnings[0].getMessage()

    def test_no_rate_is_zero(self):
        assert RunConfig("pure").rate == 0


class TestCommands:

    def test_eval(self, capsys):
        code, out, _ = run(capsys, "eval", "-e", BEHAVIOUR_TEXT)
        assert code == 0
        assert out.splitlines()[0].split() == ["slice", "a", "a'"]

    def test_eval_blocked(self, capsys):
        assert run(capsys, "eval", "-e", "a(1) & test(1)")[1] == "BLOCKED"

    def test_eval_with_binding(self, capsys):
        code, out, _ = run(capsys, "eval", "--rate", "u=3", "--json", "-e", "a(u) & delay(b(u - 7))")
        assert code == 0
        assert json.loads(out) == {"slices": [{"a": "3"}, {"b": "-4"}]}

    def test_eval_reads_files(self, capsys, tmp_path):
        path = tmp_path / "behaviour.ttc"
        path.write_text("a(7)  # 第0片\n& delay(a'(-8))\n", encoding="utf-8")
        code, out, _ = run(capsys, "eval", "--json", str(path))
        assert code == 0
        assert json.loads(out) == {"slices": [{"a": "7"}, {"a'": "-8"}]}

    def test_fmt_is_idempotent(self, capsys):
        _, first, _ = run(capsys, "fmt", "-e", "a(u)&delay(a(5))&delay^2(b(u-7))")
        assert first == "a(u) & delay(a(5)) & delay^2(b(u - 7))"
        _, second, _ = run(capsys, "fmt", "-e", first)
        assert second == first

    def test_normalize(self, capsys):
        assert run(capsys, "normalize", "-e", "a(2) & b(1) & a(3)")[1] == "a(5) & b(1)"
        assert run(capsys, "normalize", "--rate", "p=1", "-e", "enc{a}@p(a(1) & delay(a(-2)))")[1] == "eps"

    def test_normalize_json(self, capsys):
        code, out, _ = run(capsys, "normalize", "--json", "-e", "test(u) & a(u - 7)")
        assert code == 0
        assert json.loads(out)["guards"] == ["u"]

    def test_equal_closed(self, capsys):
        assert run(capsys, "equal", "-e", "a(1) & a(2)", "-e", "a(3)")[:2] == (0, "equal")
        assert run(capsys, "equal", "-e", "a(1)", "-e", "a(2)")[:2] == (1, "unequal")

    def test_equal_open(self, capsys):
        code, out, _ = run(capsys, "equal", "-e", "a(u) & a(-u)", "-e", "a(0)")
        assert code == 0
        assert out == "equal (probably, 200 trials)"

        code, out, _ = run(capsys, "equal", "--json", "-e", "a(u)", "-e", "a(1)")
        assert code == 1
        payload = json.loads(out)
        assert payload["equal"] is False
        assert payload["witness"]["u"] != "1"

    def test_icap(self, capsys):
        assert run(capsys, "icap", "--rate", "1/100", "-e", FOUR_TRANSFERS)[:2] == (0, "2")
        assert run(capsys, "icap", "--rate", "1/100", "-e", "bot")[1] == "undefined"

    def test_icap_json(self, capsys):
        _, out, _ = run(capsys, "icap", "--rate", "1/100", "--json", "-e", BEHAVIOUR_TEXT)
        assert json.loads(out) == {"defined": True, "amount": "7"}

    def test_pure(self, capsys):
        assert run(capsys, "pure", "--rate", "1/10", "-e", PRODUCT_TEXT)[:2] == (0, "pure: true")
        code, out, _ = run(capsys, "pure", "--rate", "1/100", "-e", PRODUCT_TEXT)
        assert code == 1
        assert out.startswith("pure: false")

    def test_rate_from_first_binding(self, capsys):
        code, out, _ = run(capsys, "pure", "--rate", "q=1/10", "-e", "b(-5) & delay^2(b'((1+q)^2*5))")
        assert (code, out) == (0, "pure: true")

    def test_several_bindings_without_a_bare_rate_warn(self, capsys, ttc_log):
        code, out, _ = run(
            capsys, "pure", "--rate", "q=1/10", "--rate", "p=1/100",
            "-e", "b(-5) & delay^2(b'((1+q)^2*5))"
        )
        assert (code, out) == (0, "pure: true")
        assert [r for r in ttc_log.records if r.levelno == logging.WARNING]

        run(capsys, "pure", "--rate", "1/10", "--rate", "q=1/10", "--rate", "p=1/100",
            "-e", "b(-5) & delay^2(b'((1+q)^2*5))")
        assert len([r for r in ttc_log.records if r.levelno == logging.WARNING]) == 1

    def test_profit(self, capsys):
        code, out, _ = run(capsys, "profit", "--rate", "1/100", "-e", PRODUCT_TEXT, "-e", BEHAVIOUR_TEXT)
        assert code == 0
        assert out.startswith("profits: true")
        assert run(capsys, "profit", "--rate", "1/100", "-e", "eps", "-e", BEHAVIOUR_TEXT)[0] == 1

    def test_synth(self, capsys):
        code, out, _ = run(capsys, "synth", "--rate", "1/100", "-e", BEHAVIOUR_TEXT)
        assert (code, out) == (0, "loan(-7) & delay(repay(707/100))")

        _, out, _ = run(capsys, "synth", "--rate", "1/100", "--borrow", "x", "--repay", "y", "-e", BEHAVIOUR_TEXT)
        assert out == "x(-7) & delay(y(707/100))"

    def test_synth_output_parses_back(self, capsys):
        _, product, _ = run(capsys, "synth", "--rate", "1/100", "--borrow", "x'", "-e", BEHAVIOUR_TEXT)
        assert run(capsys, "fmt", "-e", product)[:2] == (0, product)

    def test_long_conjunction_file(self, capsys, tmp_path):
        path = tmp_path / "long.ttc"
        path.write_text(" &\n".join(["a(1)"] * 2_000), encoding="utf-8")
        code, out, _ = run(capsys, "eval", "--json", str(path))
        assert code == 0
        assert json.loads(out) == {"slices": [{"a": "2000"}]}
        assert run(capsys, "icap", "--rate", "1/100", str(path))[:2] == (0, "2000")


class TestExitCodes:

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "eval", "-e", "a(1) & & b(2)")
        assert code == 2
        assert err.startswith("error:")

    def test_name_clash_is_a_parse_error(self, capsys):
        assert run(capsys, "fmt", "-e", "a(1) & b(a)")[0] == 2

    def test_unbound_variable(self, capsys):
        code, _, err = run(capsys, "eval", "-e", "a(u)")
        assert code == 3
        assert "u" in err

    def test_wrong_number_of_inputs(self, capsys):
        assert run(capsys, "equal", "-e", "a(1)")[0] == 3

    def test_synth_of_blocked_behaviour(self, capsys):
        assert run(capsys, "synth", "--rate", "1/100", "-e", "bot")[0] == 3

    def test_bad_rate(self, capsys):
        assert run(capsys, "icap", "--rate", "abc", "-e", "eps")[0] == 3

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "eval", str(tmp_path / "missing.ttc"))[0] == 3

    @pytest.mark.parametrize("option, name", [
        ("--borrow", "eps"),
        ("--borrow", "1x"),
        ("--borrow", "a b"),
        ("--repay", "delay"),
        ("--repay", "x(1) & y"),
        ("--repay", ""),
    ])
    def test_bad_synth_action_name(self, capsys, option, name):
        code, out, err = run(capsys, "synth", "--rate", "1/100", option, name, "-e", BEHAVIOUR_TEXT)
        assert code == 3
        assert out == ""
        assert err.startswith("error:")

    @pytest.mark.parametrize("actions", ["a,eps", "a,1x", "a, b c"])
    def test_bad_extra_actions(self, capsys, actions):
        assert run(capsys, "pure", "--rate", "1/10", "--actions", actions, "-e", PRODUCT_TEXT)[0] == 3

    def test_extra_actions(self, capsys):
        code, out, _ = run(capsys, "pure", "--rate", "1/10", "--actions", "z, w", "-e", PRODUCT_TEXT)
        assert (code, out) == (0, "pure: true")

    def test_bad_binding_name(self, capsys):
        assert run(capsys, "eval", "--rate", "eps=1", "-e", "a(1)")[0] == 3

    def test_excessive_nesting(self, capsys):
        text = "a(" + "(" * 3_000 + "1" + ")" * 3_000 + ")"
        code, _, err = run(capsys, "normalize", "-e", text)
        assert code == 3
        assert err.startswith("error:")
