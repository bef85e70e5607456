import json
import subprocess
import sys

import pytest

from padic_fixvec.cli import (
    EXIT_INPUT,
    EXIT_OK,
    SpecError,
    load_spec,
    main,
    parse_spec,
    spec_to_dict,
)

PS_00 = '{"field": {"p": 3}, "rep": {"type": "principal-series", "c1": 0, "c2": 0}}'
SC_33 = (
    '{"field": {"p": 3},'
    ' "rep": {"type": "supercuspidal", "minimal_conductor": 3}}'
)
INDUCED_2_1 = (
    '{"field": {"p": 5}, "rep": {"type": "induced",'
    ' "blocks": [{"n": 2, "conductor": 3}, {"n": 1, "conductor": 1}]}}'
)
BOREL3 = (
    '{"field": {"p": 2}, "rep": {"type": "induced", "blocks":'
    ' [{"n": 1, "conductor": 0}, {"n": 1, "conductor": 0},'
    ' {"n": 1, "conductor": 0}]}}'
)


def run_ok(capsys, argv):
    assert main(argv) == EXIT_OK
    return capsys.readouterr().out


def run_json(capsys, argv):
    return json.loads(run_ok(capsys, argv + ["--json"]))


def run_err(capsys, argv):
    assert main(argv) == EXIT_INPUT
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    return err


def test_dim_principal_series(capsys):
    payload = run_json(capsys, ["dim", PS_00, "--level", "1"])
    assert payload == {
        "branch": "principal series closed form",
        "dimension": 4,
        "level": 1,
        "q": 3,
    }


def test_dim_supercuspidal(capsys):
    payload = run_json(capsys, ["dim", SC_33, "--level", "2"])
    assert payload["dimension"] == 8
    assert payload["branch"] == "supercuspidal closed form"
    below = (
        '{"field": {"p": 3},'
        ' "rep": {"type": "supercuspidal", "minimal_conductor": 4}}'
    )
    assert run_json(capsys, ["dim", below, "--level", "1"])["dimension"] == 0


def test_dim_steinberg(capsys):
    spec = '{"field": {"p": 2}, "rep": {"type": "steinberg-twist", "c_chi": 0}}'
    payload = run_json(capsys, ["dim", spec, "--level", "2"])
    assert payload["dimension"] == 5


def test_dim_induced_borel(capsys):
    payload = run_json(capsys, ["dim", BOREL3, "--level", "1"])
    assert payload["dimension"] == 21
    assert payload["branch"] == (
        "induced from characters: coset index times indicators"
    )


def test_dim_human_output(capsys):
    out = run_ok(capsys, ["dim", PS_00, "--level", "1"])
    assert "dimension" in out
    assert " 4" in out


def test_dim_rejects_large_blocks(capsys):
    err = run_err(capsys, ["dim", INDUCED_2_1, "--level", "1"])
    assert "rep.blocks[0]" in err


def test_has_fixed(capsys):
    spec = (
        '{"field": {"p": 7}, "rep": {"type": "induced",'
        ' "blocks": [{"n": 1, "conductor": 0}]}}'
    )
    payload = run_json(capsys, ["has-fixed", spec, "--level", "0"])
    assert payload == {"has_fixed_vector": True, "level": 0, "q": 7}
    out = run_ok(capsys, ["has-fixed", spec, "--level", "0"])
    assert "true" in out

    payload = run_json(capsys, ["has-fixed", SC_33, "--level", "1"])
    assert payload["has_fixed_vector"] is False


def test_min_level(capsys):
    payload = run_json(capsys, ["min-level", INDUCED_2_1])
    assert payload["min_level"] == 2
    assert run_json(capsys, ["min-level", SC_33])["min_level"] == 2
    assert run_json(capsys, ["min-level", PS_00])["min_level"] == 0


def test_conductor(capsys):
    spec = (
        '{"field": {"p": 5}, "rep": {"type": "induced",'
        ' "blocks": [{"n": 2, "conductor": 3}, {"n": 1, "conductor": 0}]}}'
    )
    payload = run_json(capsys, ["conductor", spec])
    assert payload["conductor"] == 3
    assert payload["convention"] == "sum of block conductors"

    sc = (
        '{"field": {"p": 3}, "rep": {"type": "supercuspidal",'
        ' "minimal_conductor": 3, "twist_conductor": 4}}'
    )
    assert run_json(capsys, ["conductor", sc])["conductor"] == 8

    st = '{"field": {"p": 3}, "rep": {"type": "steinberg-twist", "c_chi": 1}}'
    run_err(capsys, ["conductor", st])


def test_depth(capsys):
    spec = (
        '{"field": {"p": 3}, "rep": {"type": "induced",'
        ' "blocks": [{"n": 2, "conductor": 5}]}}'
    )
    payload = run_json(capsys, ["depth", spec])
    assert payload == {"depth": "3/2"}
    assert run_json(capsys, ["depth", SC_33]) == {"depth": "1/2"}
    run_err(capsys, ["depth", INDUCED_2_1])  # two blocks
    run_err(capsys, ["depth", PS_00])


def test_global_bounds(capsys):
    payload = run_json(capsys, ["global-bounds", "--n", "2", "--level-N", "12"])
    assert payload == {
        "N": 12,
        "factorization": [[2, 2], [3, 1]],
        "local_windows": [
            {"p": 2, "e": 2, "lo": 1, "hi": 4},
            {"p": 3, "e": 1, "lo": 1, "hi": 2},
        ],
        "lower": 6,
        "n": 2,
        "upper": 144,
    }
    out = run_ok(capsys, ["global-bounds", "--n", "3", "--level-N", "8"])
    assert "2^3" in out
    assert "512" in out
    trivial = run_json(capsys, ["global-bounds", "--n", "2", "--level-N", "1"])
    assert (trivial["lower"], trivial["upper"]) == (1, 1)
    assert trivial["factorization"] == []
    run_err(capsys, ["global-bounds", "--n", "0", "--level-N", "8"])


def test_kirillov_basis(capsys):
    spec = (
        '{"field": {"p": 2}, "rep": {"type": "supercuspidal",'
        ' "minimal_conductor": 2}}'
    )
    payload = run_json(capsys, ["kirillov-basis", spec, "--level", "2"])
    assert payload["dimension"] == 4
    assert payload["c_psi"] == 0
    assert [g["count"] for g in payload["groups"]] == [3, 1]
    assert payload["groups"][0] == {
        "twist_conductor": 0,
        "num_classes": 1,
        "support_min": 0,
        "support_max": 2,
        "count": 3,
    }
    shifted = run_json(
        capsys, ["kirillov-basis", spec, "--level", "2", "--c-psi", "1"]
    )
    assert shifted["dimension"] == 4
    assert shifted["groups"][0]["support_min"] == 1

    run_err(capsys, ["kirillov-basis", PS_00, "--level", "2"])
    twisted = (
        '{"field": {"p": 2}, "rep": {"type": "supercuspidal",'
        ' "minimal_conductor": 2, "twist_conductor": 3}}'
    )
    run_err(capsys, ["kirillov-basis", twisted, "--level", "2"])


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "characters"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[characters] passed" in out
    assert "FAIL" not in out


def test_verify_json_under_budget(capsys):
    payload = run_json(
        capsys, ["verify", "--suite", "cosets", "--budget", "1000"]
    )
    (report,) = payload
    assert report["suite"] == "cosets"
    assert report["passed"] is True
    assert report["notes"]


def test_verify_rejects_bad_budget(capsys):
    run_err(capsys, ["verify", "--suite", "characters", "--budget", "lots"])


def test_spec_from_file(tmp_path, capsys):
    path = tmp_path / "rep.json"
    path.write_text(INDUCED_2_1, encoding="utf-8")
    payload = run_json(capsys, ["min-level", str(path)])
    assert payload["min_level"] == 2


def test_emit_spec_round_trip(capsys):
    for spec in (PS_00, SC_33, INDUCED_2_1, BOREL3):
        out = run_ok(capsys, ["conductor" if "induced" in spec else "min-level",
                              spec, "--emit-spec"])
        emitted = json.loads(out)
        assert parse_spec(emitted) == load_spec(spec)
        assert spec_to_dict(parse_spec(emitted)) == spec_to_dict(load_spec(spec))


def test_emit_spec_fills_defaults(capsys):
    out = run_ok(capsys, ["min-level", SC_33, "--emit-spec"])
    emitted = json.loads(out)
    assert emitted["field"]["f"] == 1
    assert emitted["rep"]["twist_conductor"] == 0


def test_json_output_is_deterministic(capsys):
    first = run_ok(capsys, ["dim", PS_00, "--level", "2", "--json"])
    second = run_ok(capsys, ["dim", PS_00, "--level", "2", "--json"])
    assert first == second
    assert first.index("{") == 0
    keys = list(json.loads(first))
    assert keys == sorted(keys)


@pytest.mark.parametrize("spec,fragment", [
    ('{"field": {"p": 4}, "rep": {"type": "steinberg-twist", "c_chi": 0}}',
     "field.p"),
    ('{"field": {"p": 3}, "rep": {"type": "nonsense"}}', "rep.type"),
    ('{"field": {"p": 3}, "rep": {"type": "induced", "blocks": []}}',
     "rep.blocks"),
    ('{"field": {"p": 3}, "rep": {"type": "principal-series", "c1": -1,'
     ' "c2": 0}}', "rep.c1"),
    ('{"field": {"p": 3}, "rep": {"type": "supercuspidal",'
     ' "minimal_conductor": 1}}', "rep.minimal_conductor"),
    ('{"field": {"p": 3}, "extra": 1, "rep": {"type": "steinberg-twist",'
     ' "c_chi": 0}}', "unexpected key"),
    ('{"field": {"p": 3}, "rep": {"type": "induced", "blocks":'
     ' [{"n": 1, "conductor": 0, "q": 9}]}}', "rep.blocks[0]"),
    ('{"field": {"p": 3}, "rep": {"type": "principal-series", "c1": true,'
     ' "c2": 0}}', "rep.c1"),
    ("{not json", "invalid JSON"),
    ("/no/such/file.json", "neither an existing file nor inline JSON"),
])
def test_input_errors(capsys, spec, fragment):
    err = run_err(capsys, ["min-level", spec])
    assert fragment in err


def test_missing_level_flag_exits_one(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["dim", PS_00])
    assert excinfo.value.code == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_exits_one():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == EXIT_INPUT


def test_parse_spec_rejects_non_object():
    with pytest.raises(SpecError):
        parse_spec([1, 2, 3])


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "padic_fixvec.cli",
         "dim", PS_00, "--level", "1", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(result.stdout)["dimension"] == 4
