import io
import json

import pytest

import fermat27.formula as formula
from fermat27.cli import main
from fermat27.ring import Eisenstein
from fermat27.series import Series


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_fermat_lines_text():
    code, text = run("fermat-lines")
    assert code == 0
    assert text.splitlines()[0].startswith(" 0 (m,n,l)=(1,2,3)")
    assert "L1: (1 + 0*w)*x0 + (0 + -1*w)*x1" in text


def test_fermat_lines_json():
    code, doc = run_json("fermat-lines")
    assert doc["schema"] == 1
    assert len(doc["lines"]) == 27
    assert [e["label"]["index"] for e in doc["lines"]] == list(range(27))
    assert set(doc["lines"][0]) == {"label", "L1", "L2"}
    assert doc["lines"][0]["L1"] == ["1 + 0*w", "0 + -1*w", "0 + 0*w", "0 + 0*w"]


def test_expand_order_zero():
    code, doc = run_json("expand", "--label", "0", "--order", "0")
    assert code == 0
    (entry,) = doc["labels"]
    assert entry["triple"] == [1, 2, 3] and entry["zeta1"] == 1 and entry["zeta2"] == 1
    L1 = [Series.from_json(s, 0).constant_term() for s in entry["L1"]]
    w = Eisenstein(0, 1)
    # L1 = -z2*(x0 - z1*x1)
    assert L1 == [-w, w * w, 0, 0]


def test_expand_all_deterministic():
    a = run("expand", "--all", "--order", "2", "--format", "json")
    b = run("expand", "--all", "--order", "2", "--format", "json")
    assert a == b
    assert len(json.loads(a[1])["labels"]) == 27


def test_expand_single_parameter():
    code, doc = run_json("expand", "--label", "0", "--order", "1", "--active", "10")
    for s in doc["labels"][0]["L1"] + doc["labels"][0]["L2"]:
        for term in s:
            assert sum(term["exponents"]) <= 1
            assert all(e == 0 for p, e in enumerate(term["exponents"]) if p != 10)


def test_active_by_vector():
    assert run("expand", "--label", "3", "--order", "1", "--active", "0300") == run(
        "expand", "--label", "3", "--order", "1", "--active", "10"
    )


def test_expand_text():
    code, text = run("expand", "--label", "0", "--order", "1", "--active", "10")
    assert "L1[x0] = " in text and "t[10]" in text


def test_expand_normalized():
    code, doc = run_json("expand", "--label", "5", "--order", "1", "--active", "3", "--normalize")
    assert doc["normalized"] is True
    k = formula.all_labels()[5]
    assert doc["labels"][0]["L2"][k.l] == [{"exponents": [0] * 20, "a": "1", "b": "0"}]


@pytest.mark.parametrize(
    "argv",
    [
        ("expand", "--active", "20"),
        ("expand", "--active", "1111"),
        ("expand", "--active", "x"),
        ("expand", "--label", "27"),
        ("expand", "--order", "-1"),
        ("expand", "--label", "0", "--all"),
        ("frobnicate",),
        ("eval", "--label", "0", "--order", "2", "--active", "10", "--t", "3=0.01"),
        ("eval", "--label", "0", "--order", "2", "--active", "10", "--t", "10"),
        ("eval", "--label", "0", "--order", "2", "--active", "10", "--t", "10=abc"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(list(argv), out=io.StringIO())
    assert exc.value.code == 2


def test_verify_order_two_passes():
    code, doc = run_json("verify", "--all", "--order", "2")
    assert code == 0
    assert doc["passed"] and doc["fermat_limit"]["passed"]
    assert len(doc["labels"]) == 27


def test_verify_order_zero_text():
    code, text = run("verify", "--all", "--order", "0")
    assert code == 0
    assert text.strip().splitlines()[-1].startswith("PASS")


def test_verify_injected_bug(monkeypatch):
    original = formula.term_coefficient

    def broken(a, beta, label):
        c = original(a, beta, label)
        return c + 1 if sum(a) == 1 else c

    monkeypatch.setattr(formula, "term_coefficient", broken)
    code, text = run("verify", "--label", "0", "--order", "1", "--active", "5")
    assert code == 1
    assert "on_surface FAIL" in text
    assert "t[5]" in text


def test_eval_report():
    code, doc = run_json("eval", "--label", "0", "--order", "4", "--active", "10", "--t", "10=0.01")
    assert code == 0
    (entry,) = doc["labels"]
    assert entry["residual"] < 1e-8
    s = entry["scaling"]
    assert s["passed"] and 0.5 * 2**-5 <= s["ratio"] <= 2 * 2**-5


def test_eval_zero_assignment():
    code, doc = run_json("eval", "--all", "--order", "2")
    assert all(e["residual"] <= 1e-14 for e in doc["labels"])
    assert all("scaling" not in e for e in doc["labels"])


def test_expand_json_round_trips_into_eval(tmp_path):
    code, text = run("expand", "--all", "--order", "3", "--active", "10,5", "--format", "json")
    path = tmp_path / "pencils.json"
    path.write_text(text)
    _, from_file = run_json("eval", "--from-json", str(path), "--t", "10=0.01", "--t", "5=-0.005")
    _, direct = run_json("eval", "--all", "--order", "3", "--active", "10,5", "--t", "10=0.01", "--t", "5=-0.005")
    assert from_file == direct


def test_thread_override_same_output(monkeypatch):
    serial = run("verify", "--all", "--order", "1", "--format", "json")
    monkeypatch.setenv("FERMAT27_THREADS", "3")
    parallel = run("verify", "--all", "--order", "1", "--format", "json")
    assert serial == parallel
