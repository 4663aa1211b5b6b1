import json

import pytest

from equivalg.action import WeakAction
from equivalg.cli import dispatch, main
from equivalg.corpus import CORPUS_DIR, build_corpus, dumps


def run(*argv):
    return dispatch(list(argv))


def test_corpus_files_match_their_generator():
    built = build_corpus()
    on_disk = {p.name: p.read_text() for p in CORPUS_DIR.glob("*.json")}
    assert set(built) == set(on_disk)
    for name, obj in built.items():
        assert dumps(obj) == on_disk[name], name


@pytest.mark.parametrize("argv,code", [
    (["validate-action", "--in", "swap_c2.json"], 0),
    (["crossed-product", "--in", "swap_c2.json"], 0),
    (["equivariantize", "--in", "twisted_c2.json"], 0),
    (["dualize", "--in", "shift_c3.json"], 0),
    (["verify-duality", "--in", "trivial_kc2.json"], 0),
    (["cyclic-classify", "--in", "shift_c3.json"], 0),
    (["d-compatible", "--in", "scaling_d2_f13.json"], 0),
    (["d-compatible", "--in", "scaling_d2_fails_f13.json"], 1),
    (["obstruction", "--in", "proj_comm_f5.json"], 0),
    (["obstruction", "--in", "central_twist_f5.json", "--kernel-check"], 0),
    (["obstruction", "--in", "proj_comm_f5.json", "--kernel-check"], 1),
    (["k0-action", "--in", "swap_c2.json"], 0),
    (["orbit-census", "--in", "trivial_kc2.json"], 0),
    (["tubular", "--type", "3,3,3", "--bound", "4"], 0),
    (["appendix-a-suite", "--bound", "3"], 0),
])
def test_exit_codes(argv, code):
    got, report = run(*argv)
    assert got == code
    assert report["ok"] == (code == 0)


def test_crossed_product_report():
    _, report = run("crossed-product", "--in", "swap_c2.json")
    assert report["data"] == {"center_dim": 1, "dim": 4, "simple_dims": [2]}


def test_obstruction_report_data():
    _, report = run("obstruction", "--in", "proj_comm_f5.json")
    assert report["data"]["class"] == "nontrivial class"
    names = [r["title"] for r in report["reports"]]
    assert "exhaustive-coboundary-search" in names


def test_k0_report():
    _, report = run("k0-action", "--in", "swap_c2.json")
    assert report["data"]["permutations"] == {"1": [[0, 1], [1, 0]]}


@pytest.mark.parametrize("argv", [
    ["validate-action", "--in", "no_such_file.json"],
    ["validate-action"],
    ["crossed-product", "--in", "swap_c2.json", "--field", "prime:5"],
    ["crossed-product", "--in", "swap_c2.json", "--field", "prime:12"],
    ["tubular", "--type", "5,5"],
    ["tubular", "--type", "2,2,2,2", "--lambda", "1"],
    ["tubular", "--type", "3,3,3", "--field", "prime:7", "--check-table1"],
    ["d-compatible", "--in", "swap_c2.json"],
])
def test_input_errors_exit_2(argv, capsys):
    code, report = run(*argv)
    assert code == 2 and report is None
    assert "equiv-alg: error:" in capsys.readouterr().err


def test_unknown_command_exits_2():
    code, _ = run("no-such-command")
    assert code == 2


def test_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("validate-action", "--in", str(bad))[0] == 2
    bad.write_text(json.dumps({"group": [2]}))
    assert run("validate-action", "--in", str(bad))[0] == 2


def test_output_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        assert main(["equivariantize", "--in", "swap_c2.json", "--seed", "7"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["command"] == "equivariantize"


def test_cyclic_pair_round_trip(tmp_path):
    pair_file = tmp_path / "pair.json"
    action_file = tmp_path / "action.json"
    assert run("cyclic-classify", "--in", "twisted_c2.json", "--out", str(pair_file))[0] == 0
    assert run("cyclic-classify", "--in", str(pair_file), "--out", str(action_file))[0] == 0
    w = WeakAction.from_json(json.loads(action_file.read_text()))
    assert w.validate().ok
    assert run("validate-action", "--in", str(action_file))[0] == 0


def test_dual_action_file_is_a_valid_action(tmp_path):
    out = tmp_path / "dual.json"
    assert run("dualize", "--in", "swap_c2.json", "--out", str(out))[0] == 0
    assert run("validate-action", "--in", str(out))[0] == 0


def test_d_compatible_emits_cyclic_action(tmp_path):
    out = tmp_path / "c2.json"
    code, report = run("d-compatible", "--in", "scaling_d2_f13.json", "--out", str(out))
    assert code == 0 and report["outputs"] == [str(out)]
    assert WeakAction.from_json(json.loads(out.read_text())).validate().ok


def test_tubular_table_emits_actions(tmp_path):
    code, report = run("tubular", "--type", "2,2,2,2", "--check-table1", "--out", str(tmp_path))
    assert code == 0
    assert report["data"]["grading_group"]["omega_order"] == 2
    assert {k: report["data"]["table1"][k]["order"] for k in ("g1", "g2", "g3")} == {"g1": 2, "g2": 3, "g3": 2}
    for name in ("g1", "g2", "g3"):
        w = WeakAction.from_json(json.loads((tmp_path / f"{name}.json").read_text()))
        assert w.validate().ok


def test_regular_probe_set():
    # the regular module of k x k is already a progenerator, so density still holds
    code, report = run("verify-duality", "--in", "swap_c2.json", "--probe-set", "regular")
    assert code == 0
    theta = next(r for r in report["reports"] if r["title"] == "theta-equivalence")
    # the regular module and its swap twist
    assert theta["data"]["probes"] == 2
