import json
import os
import subprocess

import pytest

import crepant


def test_cyclotomic_arithmetic():
    z = crepant.CycNum("zeta3")
    assert str(z * z + z + crepant.CycNum("1")) == "0"
    assert z.conj() == crepant.CycNum("zeta3^2")
    assert abs(z.to_complex() - complex(-0.5, 3 ** 0.5 / 2)) < 1e-12
    with pytest.raises(crepant.ValidationError):
        crepant.CycNum("0.5")
    with pytest.raises(crepant.DivisionByZero):
        crepant.CycNum("0").inv()


def test_cartan_and_age():
    assert crepant.cartan_matrix(2) == [[-2, 1], [1, -2]]
    assert crepant.cartan_inverse(2) == [["-2/3", "-1/3"], ["-1/3", "-2/3"]]
    assert crepant.age(3, [1, 2]) == "1"


def test_r_poly_and_atoms():
    assert crepant.r_poly(1, 1, 1, 2) == "-8*d(1,1) - d(1,2) + d(2,2)"
    assert crepant.evaluate_atom(1, 2, "-1,-1") is None
    assert str(crepant.evaluate_atom(1, 1, "-1")) == "-1/2"


def test_solve_a2():
    sols = crepant.solve_a2()
    assert [(o, p) for o, p, _, _ in sols] == [(3, 1), (3, 2)]
    _, _, a, b = sols[0]
    assert str(a) == "2 + zeta3"
    assert a * b == crepant.CycNum("-3")
    assert crepant.solve_a2(12, "1") == []


def test_command_reports():
    report = crepant.command("verify-a1", scalar="i/2")
    assert report["pass"] is True
    assert report["conventions"]["twist"] == "-1/(n+1)"
    config = {
        "n": 2,
        "base": {"model": "projective_space", "dim": 1},
        "classes": {"l": 1, "m": 2, "k": 1},
    }
    assoc = crepant.command("check-assoc", config=config, ring="quantum", q="zeta3,zeta3")
    assert assoc["pass"] is True
    with pytest.raises(crepant.CommandError) as err:
        crepant.command("qc-table", config=config, q="-1,-1")
    assert err.value.code == 3


def test_run_matches_executable():
    exe = os.environ.get("CREPANT_CLI")
    if not exe:
        pytest.skip("CLI executable not built")
    code, out, _ = crepant.run(["mckay", "--group", "E8"])
    proc = subprocess.run([exe, "mckay", "--group", "E8"], capture_output=True, text=True, check=True)
    assert code == 0
    assert out == proc.stdout
    assert json.loads(out)["dynkin"] == "E~8"
