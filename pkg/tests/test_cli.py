import json

import pytest

from skewcyc.cli import main

F8 = ["--q", "2", "--m", "3", "--r", "1", "--n", "3"]
EXAMPLE_GEN = "X^[2]+a^4*X^[1]+a^6*X"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == "skewcyc/1"
    return data


def test_tower_info(capsys):
    data = run_json(capsys, "tower", "info", *F8)
    assert data["tower"] == "q=2^1; m=3; r=1; n=3; base_poly=0,1; ext_poly=1,1,0,1"
    assert data["order"] == 8 and data["zeta"]["power"] == "a"


def test_example_generator(capsys):
    data = run_json(capsys, "code", "from-gen", *F8, "--gen", EXAMPLE_GEN)
    assert data["code"]["k"] == 1
    assert data["code"]["H_text"] == "X^[1] + a*X^[0]"
    assert data["code"]["root_space"]["dim"] == 2


def test_output_is_deterministic(capsys):
    argv = ["code", "analyze", *F8, "--gen", EXAMPLE_GEN]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)


def test_analyze_reports_matrices_and_idempotent(capsys):
    data = run_json(capsys, "code", "analyze", *F8, "--gen", EXAMPLE_GEN)
    assert data["generator_matrix"] == [["a^6", "a^4", "1"]]
    assert data["idempotent"]["complement"]["k"] == 2
    other = run_json(capsys, "code", "analyze", *F8, "--gen", "X^[1]+a^6*X")
    assert other["idempotent"]["error"] == "NotCoprimeBothSides"


def test_other_constructions(capsys):
    f16 = ["--q", "2", "--m", "4", "--r", "1", "--n", "4"]
    assert run_json(capsys, "code", "bch", *f16, "--delta", "3")["code"]["k"] == 2
    assert run_json(capsys, "code", "gabidulin", *f16, "--k", "2")["code"]["k"] == 2
    assert run_json(capsys, "code", "from-cyclic", *F8, "--g", "1,1")["code"]["k"] == 2
    assert run_json(capsys, "code", "from-roots", *F8, "--roots", "a,a^2")["code"]["k"] == 1


def test_bounds_and_certificate_round_trip(capsys, tmp_path):
    data = run_json(capsys, "bounds", *F8, "--gen", EXAMPLE_GEN, "--true-distance")
    assert data["bch"]["value"] <= data["ht"]["value"] <= data["shift"]["value"] <= data["true_distance"]
    assert data["true_distance"] == 3
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(data))
    again = run_json(capsys, "bounds", *F8, "--gen", EXAMPLE_GEN, "--verify-cert", str(path))
    assert again["verify_cert"] == {"bch": True, "ht": True, "shift": True}


def test_tampered_certificate_exits_one(capsys, tmp_path):
    data = run_json(capsys, "bounds", *F8, "--gen", EXAMPLE_GEN, "--bch")
    data["bch"]["certificate"]["delta"] = 4
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(data))
    code, out, err = run(capsys, "bounds", *F8, "--gen", EXAMPLE_GEN, "--bch", "--verify-cert", str(path))
    assert code == 1
    assert json.loads(out)["verify_cert"]["bch"] is False
    assert "verification failed" in err


def test_lattice_commands(capsys):
    data = run_json(capsys, "lattice", "enumerate", *F8)
    assert len(data["codes"]) == 16 and len(data["meet"]) == 16
    data = run_json(capsys, "lattice", "complement", *F8, "--gen", EXAMPLE_GEN)
    assert data["complement"]["k"] == 2
    data = run_json(capsys, "lattice", "join", *F8, "--gen", EXAMPLE_GEN, "--other", "X^[1]+a*X")
    assert data["complementary"] is True and data["result"]["k"] == 3
    data = run_json(capsys, "lattice", "meet", *F8, "--gen", EXAMPLE_GEN, "--other", "X^[1]+a*X")
    assert data["result"]["k"] == 0


@pytest.mark.parametrize("argv", [
    ["tower", "info", "--q", "6", "--m", "2", "--r", "1", "--n", "2"],
    ["lattice", "enumerate", *F8, "--max-size", "4"],
    ["code", "from-gen", *F8, "--gen", "X^2"],
    ["lattice", "meet", *F8, "--gen", EXAMPLE_GEN],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "skewcyc: error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["code", "from-gen", *F8])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["lattice", "meet", *F8])
    assert exc.value.code == 2


@pytest.mark.parametrize("name", ["idempotent-example", "bridge-example", "ht-example"])
def test_reproduce(capsys, name):
    data = run_json(capsys, "reproduce", name)
    assert data["verified"] is True
