import json

import pytest

from zerocycles.cli import run
from zerocycles.geometry import CubicForm


@pytest.fixture
def fermat_path(tmp_path):
    path = tmp_path / "fermat.json"
    path.write_text(json.dumps(CubicForm.fermat().to_json()))
    return str(path)


def run_cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestGeom:
    def test_third_point(self, capsys, fermat_path):
        code, out = run_cli(
            capsys,
            "geom",
            "third-point",
            "--surface",
            fermat_path,
            "--x",
            '["1","-1","0","0"]',
            "--y",
            '["0","1","-1","0"]',
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["point"] == ["-1", "0", "1", "0"]

    def test_delta_split(self, capsys, fermat_path):
        code, out = run_cli(
            capsys,
            "geom",
            "delta",
            "--surface",
            fermat_path,
            "--line",
            '[["1","-1","0","0"],["0","1","-1","0"]]',
        )
        assert code == 0
        scheme = json.loads(out)["scheme"]
        assert scheme["degree"] == 3 and scheme["fully_split"]

    def test_psi(self, capsys, fermat_path):
        code, out = run_cli(
            capsys,
            "geom",
            "psi",
            "--surface",
            fermat_path,
            "--axis",
            '[["1","1","1","1"],["1","2","4","8"]]',
            "--line",
            '[["1","-1","0","0"],["0","1","-1","0"]]',
        )
        assert code == 0
        assert json.loads(out)["scheme"]["degree"] == 3

    def test_domain_error_is_structured(self, capsys, fermat_path):
        code, out = run_cli(
            capsys,
            "geom",
            "delta",
            "--surface",
            fermat_path,
            "--line",
            '[["1","-1","0","0"],["0","0","1","-1"]]',
        )
        assert code == 1
        payload = json.loads(out)  # single well-formed JSON document
        assert payload["error"]["kind"] == "LineInSurface"

    def test_tangent_residual(self, capsys, tmp_path):
        # y^2 z = x^3 - x z^2 section: residual of the tangent at (-1,0,1)
        surface = CubicForm(
            {(0, 2, 1, 0): 1, (3, 0, 0, 0): -1, (1, 0, 2, 0): 1, (0, 0, 0, 3): 1}
        )
        path = tmp_path / "w.json"
        path.write_text(json.dumps(surface.to_json()))
        code, out = run_cli(
            capsys,
            "geom",
            "tangent-residual",
            "--surface",
            str(path),
            "--axis",
            '[["0","1","0","0"],["0","0","1","0"]]',
            "--point",
            '["-1","0","1","0"]',
        )
        assert code == 0
        assert json.loads(out)["point"] == ["0", "1", "0", "0"]

    def test_check_smooth(self, capsys, fermat_path):
        code, out = run_cli(
            capsys, "geom", "check-smooth", "--surface", fermat_path, "--height", "1"
        )
        assert code == 0
        assert json.loads(out)["smooth_on_sample"] is True

    def test_check_smooth_flags_singular_point(self, capsys, tmp_path):
        # cone-like form: singular at (0,0,0,1), which lies on the surface
        surface = CubicForm({(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1})
        path = tmp_path / "cone.json"
        path.write_text(json.dumps(surface.to_json()))
        code, out = run_cli(
            capsys, "geom", "check-smooth", "--surface", str(path), "--height", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["smooth_on_sample"] is False
        assert ["0", "0", "0", "1"] in payload["singular_points"]

    def test_usage_error_exit_2(self, fermat_path):
        with pytest.raises(SystemExit) as info:
            run(["geom", "third-point", "--surface", fermat_path])
        assert info.value.code == 2


class TestChow:
    def test_report_values(self, capsys):
        code, out = run_cli(capsys, "chow", "report")
        assert code == 0
        payload = json.loads(out)
        assert payload["deg_D2"] == 216
        assert payload["deg_D2_prime"] == 72
        assert payload["strict_inequality"] is True

    def test_pencil_sampling(self, capsys):
        code, out = run_cli(capsys, "chow", "pencil", "--samples", "25", "--seed", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["diagonal_rank_counts"] == {"2": 25}
        assert payload["off_diagonal_rank_counts"] == {"3": 25}


class TestDescent:
    def test_certify_verify_roundtrip(self, capsys, tmp_path):
        cert_path = tmp_path / "cert.json"
        code, _ = run_cli(
            capsys,
            "descent",
            "certify",
            "--dS",
            "3",
            "--degree",
            "10",
            "--goal",
            "coray",
            "--out",
            str(cert_path),
        )
        assert code == 0
        code, out = run_cli(capsys, "descent", "verify", str(cert_path))
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_suite_rows(self, capsys):
        code, out = run_cli(capsys, "descent", "suite", "--dS", "2", "--ceiling", "40")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_verified"] and payload["max_final_degree"] <= 13
        assert len(payload["rows"]) == 40

    def test_threshold(self, capsys):
        code, out = run_cli(
            capsys,
            "descent",
            "threshold",
            "--dS",
            "1",
            "--threshold",
            "15",
            "--ceiling",
            "40",
        )
        assert code == 0
        assert json.loads(out)["all_effective"] is True

    def test_not_found_is_domain_error(self, capsys):
        code, out = run_cli(
            capsys, "descent", "certify", "--dS", "3", "--degree", "3", "--goal", "coray"
        )
        assert code == 1
        assert json.loads(out)["error"]["kind"] == "CertificateNotFound"


class TestPoints:
    def test_enum(self, capsys, fermat_path):
        code, out = run_cli(
            capsys, "points", "enum", "--surface", fermat_path, "--height", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 9

    def test_saturate(self, capsys, fermat_path):
        code, out = run_cli(
            capsys,
            "points",
            "saturate",
            "--surface",
            fermat_path,
            "--seeds",
            '[["1","-1","0","0"],["0","1","-1","0"]]',
            "--rounds",
            "1",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] >= 3


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys, fermat_path):
        argv = [
            "geom",
            "psi",
            "--surface",
            fermat_path,
            "--axis",
            '[["1","1","1","1"],["1","2","4","8"]]',
            "--line",
            '[["1","-1","0","0"],["0","1","-1","0"]]',
        ]
        _, first = run_cli(capsys, *argv)
        _, second = run_cli(capsys, *argv)
        assert first == second
        code, suite_one = run_cli(capsys, "descent", "suite", "--dS", "1", "--ceiling", "25")
        assert code == 0
        _, suite_two = run_cli(capsys, "descent", "suite", "--dS", "1", "--ceiling", "25")
        assert suite_one == suite_two
