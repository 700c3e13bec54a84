import mpmath
import pytest
from gmpy2 import mpq

from calogero import construct as C
from calogero import oracle as O
from calogero.dunkl import braid_S, knop_sahi_e, knop_sahi_e_dagger
from calogero.errors import NonIntegerCoupling
from calogero.exactpoly import Poly, monomial
from calogero.params import Params

from .conftest import ALL_GENERIC, random_poly

TOL = mpmath.mpf(10) ** -25


class TestEigensolver:
    def test_examples(self):
        p = Params("A", "3/7", omega="1/2")
        assert O.triangular_eigensolve(p, (0, 0)) == 1
        x1, x2 = Poly.variable(2, 1), Poly.variable(2, 2)
        assert O.triangular_eigensolve(p, (1, 0)) == x1 + x2.scale(mpq(3, 10))

    @pytest.mark.parametrize("params", ALL_GENERIC, ids=str)
    def test_matches_rodrigues(self, params):
        for mu in O.basis(3, 3):
            assert O.triangular_eigensolve(params, mu) == C.nonsym_poly(params, mu).poly

    def test_b_eigenvalues(self):
        p = Params("B", "3/7", "2/5", "1/2")
        h = C.nonsym_poly(p, (1, 0))
        assert h.eigenvalues == (1 + 2 * p.a + p.b, p.b)
        assert O.triangular_eigensolve(p, (1, 0)) == h.poly

    def test_larger_cutoff(self):
        p = Params("A", "5/3", omega=1)
        assert O.triangular_eigensolve(p, (1, 0, 1), cutoff=4) == C.nonsym_poly(p, (1, 0, 1)).poly


class TestMatrices:
    @pytest.mark.parametrize("params", ALL_GENERIC, ids=str)
    def test_triangular(self, params):
        for m in O.cherednik_matrices(params, 3, 4):
            assert m.is_triangular()

    def test_dense_shape(self):
        m = O.cherednik_matrices(ALL_GENERIC[0], 2, 2)[0]
        dense = m.dense()
        assert len(dense) == len(m.basis) == 6
        assert all(len(r) == 6 for r in dense)

    def test_detects_non_triangular(self):
        # multiplication by x1 / x2 swap is not triangular
        from calogero.exactpoly import exchange

        m = O.operator_matrix(lambda f: exchange(f, 1, 2), 2, 2, "K")
        assert not m.is_triangular()


class TestQuadrature:
    def test_gaussian(self):
        with mpmath.workdps(40):
            G = O.quadrature_gram(Params("A", 1, omega="1/2"), [Poly.constant(1, 1)], 40)
            assert abs(G.matrix[0][0] - mpmath.sqrt(2 * mpmath.pi)) < TOL
            G = O.quadrature_gram(Params("A", 1, omega=3), [Poly.constant(1, 1)], 40)
            assert abs(G.matrix[0][0] - mpmath.sqrt(mpmath.pi / 3)) < TOL

    def test_one_variable_pair(self):
        with mpmath.workdps(40):
            G = O.quadrature_gram(Params("A", 1, omega="1/2"), [Poly.constant(1, 1), Poly.variable(1, 1)], 40)
            s = mpmath.sqrt(2 * mpmath.pi)
            assert abs(G.matrix[0][1]) < TOL
            assert abs(G.matrix[0][0] - s) < TOL and abs(G.matrix[1][1] - s) < TOL

    def test_two_variable_norms(self):
        G = O.nonsym_gram(Params("A", 1, omega="1/2"), 2, 1, 40)
        d = G.diagonal()
        with mpmath.workdps(40):
            assert G.max_offdiag_ratio() < TOL
            assert abs(d[1] / d[0] - mpmath.mpf(3) / 2) < TOL
            assert abs(d[2] / d[0] - 2) < TOL

    def test_non_integer(self):
        with pytest.raises(NonIntegerCoupling):
            O.quadrature_gram(Params("A", "1/2"), [Poly.constant(2, 1)])

    def test_too_few_nodes(self):
        with pytest.raises(ValueError):
            O.quadrature_gram(Params("A", 2), [monomial((3, 3))], nodes=2)

    def test_extra_nodes_agree(self):
        p = Params("B", 1, 1, 1)
        polys = [C.nonsym_poly(p, mu).poly for mu in [(0, 0), (2, 1), (1, 2)]]
        G1 = O.quadrature_gram(p, polys, 40)
        G2 = O.quadrature_gram(p, polys, 40, nodes=G1.nodes + 3)
        with mpmath.workdps(40):
            for r1, r2 in zip(G1.matrix, G2.matrix):
                for u, v in zip(r1, r2):
                    assert abs(u - v) <= TOL * abs(G1.matrix[0][0])

    @pytest.mark.parametrize("params", [Params("A", 1), Params("B", 1, 1, 1)], ids=str)
    def test_adjointness(self, params, rng):
        N = 3
        with mpmath.workdps(40):
            for _ in range(2):
                f, g = random_poly(rng, N, 3), random_poly(rng, N, 3)
                for j in (1, 2):
                    G = O.quadrature_gram(params, [braid_S(params, j, f), g, f, braid_S(params, j, g)], 40)
                    scale = max(abs(G.matrix[i][i]) for i in range(4))
                    assert abs(G.matrix[0][1] + G.matrix[2][3]) <= TOL * scale
                G = O.quadrature_gram(
                    params, [knop_sahi_e_dagger(params, f), g, f, knop_sahi_e(params, g)], 40
                )
                scale = max(abs(G.matrix[i][i]) for i in range(4))
                assert abs(G.matrix[0][1] - G.matrix[2][3]) <= TOL * scale

    def test_env_precision(self, monkeypatch):
        monkeypatch.setenv("CALOGERO_PRECISION", "25")
        assert O.default_precision() == 25
        G = O.quadrature_gram(Params("A", 1), [Poly.constant(1, 1)])
        assert G.precision == 25


class TestVerifySuite:
    def test_all_pass_default(self):
        report = O.verify_suite(ALL_GENERIC[0], 2, 3)
        assert O.report_ok(report)
        assert {e["check"] for e in report} >= {"rodrigues-vs-eigensolver", "exchange-expansion"}
        for e in report:
            assert set(e) == {"check", "family", "N", "params", "status", "detail"}

    def test_fault_injection(self):
        report = O.verify_suite(ALL_GENERIC[0], 2, 2, fault={"c_mu_offset": 1})
        failed = [e for e in report if e["status"] == "fail"]
        assert [e["check"] for e in failed] == ["rodrigues-vs-eigensolver"]
        assert "difference" in failed[0]["detail"]["failures"][0]

    def test_b_family_n3(self):
        report = O.verify_suite(Params("B", "3/7", "2/5", "1/2"), 3, 4)
        assert O.report_ok(report), [e for e in report if e["status"] == "fail"]

    def test_integer_point_runs_quadrature(self):
        report = O.verify_suite(Params("B", 1, 1, "1/2"), 2, 3)
        gram = next(e for e in report if e["check"] == "norms-vs-gram")
        assert gram["status"] == "pass"
