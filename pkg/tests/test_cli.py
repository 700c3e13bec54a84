import csv
import io
import json

import pytest

from calogero.cli import main
from calogero.exactpoly import Poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExpand:
    def test_nonsym(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "A", "--N", "2", "--mu", "1,0", "--a", "3/7", "--omega", "1/2")
        assert code == 0
        data = json.loads(out)
        assert data["text"] == "x1 + 3/10*x2"
        assert data["label"] == [1, 0]
        assert data["eigenvalues"] == ["10/7", "0"]
        # signed leading coefficient of the raising operator output
        assert data["provenance"]["c_mu_plus"] == "-10/7"
        assert str(Poly.from_dict(data)) == "x1 + 3/10*x2"

    def test_sym(self, capsys):
        code, out, _ = run(capsys, "expand", "--family", "A", "--N", "2", "--mu", "1,0", "--sym", "+", "--format", "pretty")
        assert (code, out.strip()) == (0, "x1 + x2")
        code, out, _ = run(capsys, "expand", "--mu", "1,0", "--sym", "-")
        assert json.loads(out)["symmetry"] == "antisymmetric"

    def test_constant(self, capsys):
        code, out, _ = run(capsys, "expand", "--mu", "0,0", "--format", "pretty")
        assert (code, out.strip()) == (0, "1")

    def test_deterministic(self, capsys):
        args = ("expand", "--family", "B", "--mu", "0,2,1", "--a", "5/3", "--b", "1/4", "--omega", "1")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    @pytest.mark.parametrize(
        "argv",
        [
            ("expand", "--mu", "1,0", "--a", "0.5"),
            ("expand", "--mu", "1,x"),
            ("expand", "--mu", "1,0", "--N", "3"),
            ("expand", "--mu", "1,1", "--sym", "-"),
            ("expand", "--mu", "1,0", "--a", "0"),
            ("nonsense",),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 1
        assert "error" in err

    def test_sector_message_lists_sublattices(self, capsys):
        _, _, err = run(capsys, "expand", "--family", "B", "--mu", "2,1", "--sym", "+")
        assert "2P+ + 1^N" in err


class TestNorms:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "norms", "--family", "A", "--N", "2", "--max-degree", "1")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        got = {r["mu"]: f"{r['ratio_num']}/{r['ratio_den']}" for r in rows}
        # a = 3/7, omega = 1/2: (1+2a)/(2w(1+a)) = 13/10, (1+a)/(2w) = 10/7
        assert got == {"0,0": "1/1", "1,0": "13/10", "0,1": "10/7"}

    def test_b_odd_sector(self, capsys):
        code, out, _ = run(capsys, "norms", "--family", "B", "--mu", "1,1", "--sym", "+", "--format", "json")
        assert code == 0
        assert json.loads(out)[0]["sign"] == "+"

    def test_invalid_sector(self, capsys):
        code, _, err = run(capsys, "norms", "--family", "A", "--mu", "1,1", "--sym", "-")
        assert code == 1 and "P+ + delta" in err

    def test_absolute(self, capsys):
        code, out, _ = run(capsys, "norms", "--mu", "0", "--a", "1", "--absolute", "--precision", "20", "--format", "json")
        assert code == 0
        assert json.loads(out)[0]["absolute"].startswith("2.506628274631000502")


class TestVerifyGramOrbit:
    def test_verify_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--N", "2", "--max-degree", "3")
        assert code == 0
        assert all(e["status"] != "fail" for e in json.loads(out))

    def test_verify_fault(self, capsys):
        code, out, _ = run(capsys, "verify", "--N", "2", "--max-degree", "2", "--fault-c-mu", "1")
        assert code == 2

    def test_verify_rejects_zero_coupling(self, capsys):
        code, _, err = run(capsys, "verify", "--N", "2", "--a", "0")
        assert code == 1 and "rejected" in err

    def test_gram(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        code, _, _ = run(capsys, "gram", "--family", "B", "--N", "2", "--a", "1", "--b", "1",
                         "--degree", "3", "--precision", "40", "--output", str(path))
        assert code == 0
        data = json.loads(path.read_text())
        M = data["matrix"]
        assert len(M) == 10
        assert all(M[i][j] == M[j][i] for i in range(10) for j in range(10))

    def test_gram_non_integer(self, capsys):
        code, _, err = run(capsys, "gram", "--N", "2", "--a", "1/2")
        assert code == 1 and "integer" in err

    def test_orbit(self, capsys):
        code, out, _ = run(capsys, "orbit", "--mu", "0,2,1", "--format", "json")
        data = json.loads(out)
        assert data["partition"] == [2, 1, 0]
        assert len(data["orbit"]) == 6
        entry = next(e for e in data["orbit"] if e["composition"] == [0, 2, 1])
        assert entry["length"] == 2


def test_singular_exit_code(capsys, monkeypatch):
    from calogero import construct
    from calogero.errors import SingularParameter

    def boom(*_a, **_k):
        raise SingularParameter("forced", pairing="<alpha_1, mu + a rho>")

    monkeypatch.setattr(construct, "nonsym_poly", boom)
    code, _, err = run(capsys, "expand", "--mu", "0,1")
    assert code == 3
    assert "<alpha_1, mu + a rho>" in err
