import json

import pytest

from tpalgebra import cli
from tpalgebra.constructions import tp_pair_from_derivation
from tpalgebra.models import named_algebra, named_derivation
from tpalgebra.poly import DerivationSpec, Polynomial


@pytest.fixture
def sl2_file(tmp_path):
    p = tmp_path / "sl2.json"
    p.write_text(json.dumps(named_algebra("sl2").to_dict("bracket")))
    return str(p)


@pytest.fixture
def trunc3_file(tmp_path):
    p = tmp_path / "trunc3.json"
    p.write_text(json.dumps(named_algebra("poly-trunc-3").to_dict("product")))
    return str(p)


@pytest.fixture
def pair_file(tmp_path):
    pair = tp_pair_from_derivation(
        named_algebra("poly-trunc-3"), named_derivation("poly-trunc-3")
    )
    p = tmp_path / "pair.json"
    p.write_text(json.dumps(pair.to_dict()))
    return str(p)


@pytest.fixture
def euler_file(tmp_path):
    p = tmp_path / "euler.json"
    p.write_text(json.dumps(named_derivation("poly-trunc-3").to_json()))
    return str(p)


@pytest.fixture
def ddt_file(tmp_path):
    der = DerivationSpec([Polynomial.const(1, 1)])
    p = tmp_path / "ddt.json"
    p.write_text(json.dumps(der.to_json()))
    return str(p)


def _run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = cli.main(args + ["--out", str(out)])
    return code, out.read_text() if out.exists() else ""


# ---------------------------------------------------------------------------
# exit codes

def test_check_holds_exit_zero(sl2_file, tmp_path):
    code, text = _run(["check", "jacobi", "--algebra", sl2_file], tmp_path)
    assert code == 0
    rep = json.loads(text)
    assert rep["verdict"] == "holds" and rep["schema_version"] == 1


def test_check_fails_exit_one(pair_file, tmp_path):
    code, text = _run(
        ["check", "poisson-leibniz", "--algebra", pair_file], tmp_path
    )
    assert code == 1
    rep = json.loads(text)
    assert rep["verdict"] == "fails" and "witness" in rep


def test_unknown_identity_exit_two(sl2_file, tmp_path, capsys):
    assert cli.main(["check", "nope", "--algebra", sl2_file]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exit_two(tmp_path):
    assert cli.main(["check", "jacobi", "--algebra", "/no/such.json"]) == 2


def test_bad_usage_exit_two():
    assert cli.main(["derive"]) == 2  # missing required args
    assert cli.main(["no-such-command"]) == 2


def test_capacity_exit_three(sl2_file, tmp_path, monkeypatch):
    monkeypatch.setenv("TPA_CAPACITY", "1")
    assert cli.main(["derive", "--algebra", sl2_file, "--delta", "1/2"]) == 3


# ---------------------------------------------------------------------------
# report contents and determinism

def test_reports_are_byte_identical(sl2_file, tmp_path):
    _, a = _run(["derive", "--algebra", sl2_file, "--delta", "1/2"], tmp_path, "a")
    _, b = _run(["derive", "--algebra", sl2_file, "--delta", "1/2"], tmp_path, "b")
    assert a == b and a


def test_report_carries_input_hashes(sl2_file, tmp_path):
    import hashlib

    _, text = _run(["check", "jacobi", "--algebra", sl2_file], tmp_path)
    rep = json.loads(text)
    digest = hashlib.sha256(open(sl2_file, "rb").read()).hexdigest()
    assert rep["inputs"] == {sl2_file: digest}
    assert rep["command"] == "check"


def test_human_format(sl2_file, tmp_path):
    code, text = _run(
        ["check", "jacobi", "--algebra", sl2_file, "--format", "human"], tmp_path
    )
    assert code == 0
    assert any(line.startswith("verdict: ") for line in text.splitlines())


def test_stdout_default(sl2_file, capsys):
    assert cli.main(["check", "jacobi", "--algebra", sl2_file]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] == "holds"


# ---------------------------------------------------------------------------
# solvers

def test_tpspace_on_sl2(sl2_file, tmp_path):
    code, text = _run(["tpspace", "--algebra", sl2_file], tmp_path)
    assert code == 0 and json.loads(text)["dimension"] == 0


def test_derive_dimensions(sl2_file, tmp_path):
    _, text = _run(["derive", "--algebra", sl2_file, "--delta", "1/2"], tmp_path)
    assert json.loads(text)["dimension"] == 1


def test_biderive_and_homlie(trunc3_file, tmp_path):
    code, text = _run(
        ["biderive", "--algebra", trunc3_file, "--delta", "1"], tmp_path
    )
    assert code == 0 and json.loads(text)["kind"] == "bilinear"
    code, text = _run(["homlie", "--algebra", trunc3_file], tmp_path)
    assert code == 0 and json.loads(text)["kind"] == "linear"


# ---------------------------------------------------------------------------
# checks needing extra bindings

def test_check_with_map(sl2_file, tmp_path):
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]))
    code, text = _run(
        ["check", "hom-lie", "--algebra", sl2_file, "--map", str(ident)], tmp_path
    )
    assert code == 0


def test_check_with_elem(pair_file, tmp_path):
    elem = tmp_path / "h.json"
    elem.write_text(json.dumps(["1", "0", "0"]))
    code, _ = _run(
        ["check", "quasi-auto", "--algebra", pair_file, "--elem", str(elem)],
        tmp_path,
    )
    assert code == 0


def test_check_pair_identities(pair_file, tmp_path):
    for ident in ("tp-compat", "gen-poisson"):
        code, _ = _run(["check", ident, "--algebra", pair_file], tmp_path)
        assert code == 0, ident


def test_check_farkas_with_derivation(pair_file, euler_file, tmp_path):
    code, _ = _run(
        ["check", "farkas-relation", "--algebra", pair_file, "--map", euler_file],
        tmp_path,
    )
    assert code == 0


# ---------------------------------------------------------------------------
# constructions

def test_construct_bracket(trunc3_file, euler_file, tmp_path):
    code, text = _run(
        ["construct", "bracket", "--algebra", trunc3_file, "--map", euler_file],
        tmp_path,
    )
    assert code == 0
    rep = json.loads(text)
    assert set(rep["algebra"]["products"]) == {"product", "bracket"}
    assert rep["algebra"]["provenance"]["constructed_by"] == "bracket"


def test_construct_kantor(pair_file, tmp_path):
    code, text = _run(["construct", "kantor", "--algebra", pair_file], tmp_path)
    assert code == 0
    rep = json.loads(text)
    assert rep["algebra"]["dim"] == 6
    assert rep["algebra"]["verification"]["verdict"] == "holds"


def test_construct_three_lie(tmp_path):
    pair = tp_pair_from_derivation(
        named_algebra("poly-trunc-4"), named_derivation("poly-trunc-4")
    )
    pf = tmp_path / "pair4.json"
    pf.write_text(json.dumps(pair.to_dict()))
    mf = tmp_path / "euler4.json"
    mf.write_text(json.dumps(named_derivation("poly-trunc-4").to_json()))
    code, text = _run(
        ["construct", "three-lie", "--algebra", str(pf), "--map", str(mf)],
        tmp_path,
    )
    assert code == 0
    assert json.loads(text)["algebra"]["arity"] == 3


def test_construct_nilpotent_nlie(tmp_path):
    from tpalgebra.core import NAryAlgebra
    from tpalgebra.models import named_algebra as na

    nary = NAryAlgebra(3, 2, dict(na("heis3").table))
    f = tmp_path / "h3.json"
    f.write_text(json.dumps(nary.to_dict()))
    code, text = _run(
        ["construct", "nilpotent-nlie", "--algebra", str(f), "--witness", "0,1;2"],
        tmp_path,
    )
    assert code == 0
    rep = json.loads(text)
    assert rep["algebra"]["provenance"]["constructed_by"] == "nilpotent-nlie"


def test_construct_bad_witness_exit_two(tmp_path):
    from tpalgebra.core import NAryAlgebra

    nary = NAryAlgebra(3, 2, dict(named_algebra("heis3").table))
    f = tmp_path / "h3.json"
    f.write_text(json.dumps(nary.to_dict()))
    assert (
        cli.main(
            ["construct", "nilpotent-nlie", "--algebra", str(f), "--witness", "0,2;2"]
        )
        == 2
    )


# ---------------------------------------------------------------------------
# models, graded and field subcommands

def test_oscillator_bracket_only(tmp_path):
    code, text = _run(["oscillator", "--lam", "1,2", "--generic"], tmp_path)
    assert code == 0
    assert json.loads(text)["algebra"]["dim"] == 6


def test_oscillator_tp_pair(tmp_path):
    code, text = _run(
        ["oscillator", "--lam", "1", "--gamma", "2", "--alpha", "1", "--beta", "0"],
        tmp_path,
    )
    assert code == 0
    rep = json.loads(text)
    assert set(rep["algebra"]["products"]) == {"product", "bracket"}


def test_oscillator_bad_lambda_exit_two():
    assert cli.main(["oscillator", "--lam", "2,1"]) == 2


def test_witt1_window(tmp_path):
    code, text = _run(
        ["witt1", "--alpha", "1=1,3=5", "--window=-1:4"], tmp_path
    )
    assert code == 0
    rep = json.loads(text)
    assert rep["verdict"] == "holds" and rep["family"] == "witt1"
    assert rep["window"] == [-1, 4]


def test_witt1_full_witt(tmp_path):
    code, text = _run(
        ["witt1", "--alpha", "1=1", "--window=-3:3", "--full-witt"], tmp_path
    )
    assert code == 0 and json.loads(text)["family"] == "witt"


def test_witt1_bad_alpha_exit_two():
    assert cli.main(["witt1", "--alpha", "0=1", "--window=-1:3"]) == 2


def test_field_check(ddt_file, tmp_path):
    code, text = _run(
        [
            "field-check", "--vars", "1", "--samples", "5", "--seed", "7",
            "--derivation", ddt_file,
        ],
        tmp_path,
    )
    assert code == 0
    rep = json.loads(text)
    assert rep["verdict"] == "holds" and rep["seed"] == 7


def test_field_check_corrupt_exit_one(ddt_file, tmp_path):
    code, text = _run(
        [
            "field-check", "--vars", "1", "--samples", "5",
            "--derivation", ddt_file, "--corrupt-sign",
        ],
        tmp_path,
    )
    assert code == 1 and json.loads(text)["verdict"] == "fails"


def test_field_check_vars_mismatch(ddt_file):
    assert (
        cli.main(["field-check", "--vars", "2", "--derivation", ddt_file]) == 2
    )


def test_console_script_installed():
    import shutil
    import subprocess

    exe = shutil.which("tpa")
    assert exe, "console script should be installed"
    out = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "transposed" in out.stdout
