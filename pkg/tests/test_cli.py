import json
from fractions import Fraction

import pytest

from krawtchouk import ExactMatrix, SiteDistribution, kac_matrix, krawtchouk_matrix, symmetric_krawtchouk
from krawtchouk import serialization as ser
from krawtchouk.cli import CHECKS, main
from krawtchouk.multivariate import gk_table

from tables import TABLE_S

ORDER = 4
ZERO_SITE = SiteDistribution((0, 1), (Fraction(1, 2), Fraction(1, 2)))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def corrupt(m):
    rows = [list(r) for r in m.tolist()]
    rows[1][2] += 2  # even offset keeps every halving exact, so failures come from the identity itself
    return type(m)(rows)


def corrupted_fixture(check):
    if check in ("condense", "recursion-s"):
        return corrupt(symmetric_krawtchouk(ORDER))
    if check == "so21":
        return corrupt(kac_matrix(ORDER))
    if check == "ortho-multinomial":
        return corrupt(gk_table(ORDER, SiteDistribution.binary_symmetric()))
    if check == "lauricella":
        return corrupt(gk_table(ORDER, ZERO_SITE))
    return corrupt(krawtchouk_matrix(ORDER))


def test_gen_example(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "k", "--order", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1,1,1", "2,0,-2", "1,-1,1"]


def test_condense_example(capsys):
    code, out, _ = run(capsys, "condense", "--order", "4", "--format", "json")
    assert code == 0
    assert ser.matrix_from_json(out).tolist() == TABLE_S[4]


def test_condense_sign_path_parallel(capsys):
    code, out, _ = run(capsys, "condense", "-N", "7", "--method", "sign", "--jobs", "2", "-f", "csv")
    assert code == 0 and ser.parse_matrix(out) == symmetric_krawtchouk(7)


@pytest.mark.parametrize("kind", ["a", "abar", "b", "h", "hbar", "k", "lambda", "s", "urn", "xf", "xg"])
def test_gen_every_kind_parses(capsys, kind):
    code, out, _ = run(capsys, "gen", "--kind", kind, "--order", "3")
    assert code == 0
    assert ser.parse_matrix(out).rows >= 4


@pytest.mark.parametrize("check", CHECKS)
def test_verify_healthy(capsys, check):
    code, out, _ = run(capsys, "verify", "--check", check, "--order", str(ORDER))
    record = json.loads(out)
    assert code == 0
    assert record["passed"] is True and record["counterexample"] is None


def test_verify_square_example(capsys):
    assert run(capsys, "verify", "--check", "square", "--order", "5")[0] == 0


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--check", "all", "--order", "3")
    assert code == 0
    assert [json.loads(line)["check"] for line in out.splitlines()] == list(CHECKS)


@pytest.mark.parametrize("check", CHECKS)
def test_verify_corrupted_fixture(capsys, tmp_path, check):
    path = tmp_path / "bad.json"
    path.write_text(ser.matrix_to_json(corrupted_fixture(check)))
    code, out, _ = run(capsys, "verify", "--check", check, "--order", str(ORDER), "--input", str(path))
    record = json.loads(out.splitlines()[-1])
    assert code == 1
    assert record["passed"] is False
    assert record["counterexample"]


def test_verify_healthy_input_file_passes(capsys, tmp_path):
    path = tmp_path / "k.csv"
    path.write_text(ser.matrix_to_csv(krawtchouk_matrix(ORDER)))
    assert run(capsys, "verify", "-c", "spectral", "-N", str(ORDER), "-i", str(path))[0] == 0


def test_verify_multinomial_with_dist_file(capsys, tmp_path):
    dist = SiteDistribution((0, 1, 2), (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)))
    path = tmp_path / "dist.json"
    path.write_text(ser.site_distribution_to_json(dist))
    for check in ("ortho-multinomial", "lauricella"):
        assert run(capsys, "verify", "-c", check, "-N", "3", "--dist", str(path))[0] == 0


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--kind", "nope", "--order", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--order", "2"])
    assert exc.value.code == 2
    code, out, err = run(capsys, "gen", "--kind", "h", "--order", "30")
    assert code == 2 and out == "" and "cap" in err
    code, _, err = run(capsys, "gen", "--kind", "k", "--order", "-1")
    assert code == 2 and err


def test_bad_input_file_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "verify", "-c", "square", "-N", "2", "-i", str(path))
    assert code == 2 and err
    code, _, err = run(capsys, "verify", "-c", "square", "-N", "2", "-i", str(tmp_path / "missing.json"))
    assert code == 2 and err


def test_out_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "k.json"
    code, out, _ = run(capsys, "gen", "-k", "k", "-N", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert ser.parse_matrix(path.read_text()) == krawtchouk_matrix(3)


def test_urn_subcommand(capsys):
    code, out, _ = run(capsys, "urn", "-N", "5", "--steps", "200", "--seed", "42")
    assert code == 0
    traj = ser.trajectory_from_csv(out, 5, 42)
    assert traj.steps == 200
    assert run(capsys, "urn", "-N", "5", "--steps", "200", "--seed", "42")[1] == out
    code, out, _ = run(capsys, "urn", "-N", "3", "--steps", "2", "--exact")
    third = Fraction(1, 3)
    assert code == 0 and ser.rational_vector_from_json(out) == (third, 0, 2 * third, 0)


def test_transform_subcommand(capsys):
    code, out, _ = run(capsys, "transform", "-N", "2", "--vector", "1,1,1", "-f", "csv")
    assert code == 0 and out.strip() == "3,0,1"
    code, out, _ = run(capsys, "transform", "-N", "2", "--vector", "3,0,1", "--inverse", "-f", "csv")
    assert out.strip() == "1,1,1"
    code, _, err = run(capsys, "transform", "-N", "2", "--vector", "1,2")
    assert code == 2 and err
    code, _, err = run(capsys, "transform", "-N", "2", "--vector", "1,x,2")
    assert code == 2


def test_ortho_subcommand(capsys):
    code, out, _ = run(capsys, "ortho", "-N", "2", "-f", "csv")
    assert code == 0
    assert ser.parse_matrix(out) == ExactMatrix.diagonal([4, 8, 4])


def test_help_lists_checks(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--help"])
    assert exc.value.code == 0
    help_text = capsys.readouterr().out
    assert all(c in help_text for c in CHECKS)
