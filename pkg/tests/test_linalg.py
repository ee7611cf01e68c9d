from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subres.algebra import InadmissibleDegree, Poly, poly_from_roots, r_poly
from subres.linalg import (
    T_MINUS_X,
    X_MINUS_T,
    DMatrix,
    bracket,
    build_mf,
    build_mg,
    build_mtx,
    build_sd,
    build_sylvester_block,
    det_bareiss,
    det_laplace,
    vandermonde_det,
)

from conftest import polys, rationals, root_lists

x = Poly.x()


def square(entries, dim):
    return st.lists(st.lists(entries, min_size=dim, max_size=dim), min_size=dim, max_size=dim).map(
        lambda rows: DMatrix(rows, cols=dim)
    )


rational_matrices = st.integers(0, 6).flatmap(lambda k: square(rationals, k))
poly_matrices = st.integers(1, 5).flatmap(lambda k: square(polys(2), k))


class TestDMatrix:
    def test_shape_checks(self):
        with pytest.raises(ValueError):
            DMatrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            DMatrix([])
        assert DMatrix([], cols=3).shape == (0, 3)

    def test_matmul(self):
        a = DMatrix([[1, 2], [3, 4]])
        b = DMatrix([[x], [1]])
        assert a @ b == DMatrix([[x + 2], [3 * x + 4]])

    def test_json_round_trip(self):
        m = DMatrix([[Fraction(1, 2), -3], [0, 7]])
        assert m.to_json() == {"rows": 2, "cols": 2, "entries": [["1/2", "-3"], ["0", "7"]]}
        assert DMatrix.from_json(m.to_json()) == m
        pm = build_sd(Poly([0, -1, 1]), Poly([6, -5, 1]), 1)
        assert pm.to_json()["entries"][0] == [["0", "-1"], ["1"], []]
        assert DMatrix.from_json(pm.to_json()) == pm


class TestDeterminants:
    def test_identity(self):
        assert det_bareiss(DMatrix.identity(3)) == 1
        assert det_laplace(DMatrix.identity(3)) == 1

    def test_small(self):
        assert det_laplace(DMatrix([[Fraction(5, 3)]])) == Fraction(5, 3)
        assert det_laplace(DMatrix([[1, 2], [3, 4]])) == -2
        assert det_bareiss(DMatrix([[1, 2], [3, 4]])) == -2

    def test_poly_examples(self):
        f, g = Poly([0, -1, 1]), Poly([6, -5, 1])
        m2 = DMatrix([[1, f], [1, g]])
        m3 = DMatrix([[-x, 1, 0], [0, -1, 1], [6, -5, 1]])
        for m in (m2, m3):
            assert det_laplace(m) == Poly([6, -4])
            assert det_bareiss(m) == Poly([6, -4])

    def test_zero_pivot_needs_swap(self):
        m = DMatrix([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
        assert det_bareiss(m) == det_laplace(m) == -2

    def test_singular(self):
        m = DMatrix([[0, 1], [0, 2]])
        assert det_bareiss(m) == 0
        assert det_bareiss(DMatrix([[x, 0], [x * x, 0]])) == Poly()

    def test_rejects(self):
        with pytest.raises(ValueError):
            det_bareiss(DMatrix([[1, 2]]))
        with pytest.raises(ValueError):
            det_laplace(DMatrix.identity(9))

    def test_empty(self):
        assert det_bareiss(DMatrix([], cols=0)) == 1

    @given(rational_matrices)
    def test_bareiss_matches_laplace_rational(self, m):
        assert det_bareiss(m) == det_laplace(m)

    @given(poly_matrices)
    def test_bareiss_matches_laplace_poly(self, m):
        assert Poly.coerce(det_bareiss(m)) == Poly.coerce(det_laplace(m))

    @given(st.integers(2, 5).flatmap(lambda k: st.tuples(square(rationals, k), st.integers(0, k - 1),
                                                         st.integers(0, k - 1))))
    def test_row_swap_and_duplicate(self, args):
        m, i, j = args
        if i != j:
            assert det_bareiss(m.swap_rows(i, j)) == -det_bareiss(m)
            rows = list(m.entries)
            rows[j] = rows[i]
            assert det_bareiss(DMatrix(rows)) == 0


class TestBuilders:
    def test_bracket_examples(self):
        assert bracket(1, [2, 3], [0, 1]) == DMatrix([[1, 1], [2, 3]])
        assert bracket(X_MINUS_T, [0, 1], [0]) == DMatrix([[x, x - 1]])
        assert bracket(Poly([6, -5, 1]), [0, 1], [0]) == DMatrix([[6, 2]])
        assert bracket(T_MINUS_X, [2], [1]) == DMatrix([[4 - 2 * x]])

    def test_bracket_rejects_other_templates(self):
        with pytest.raises(TypeError):
            bracket("x*t", [1], [0])
        with pytest.raises(ValueError):
            bracket(1, [1], [-1])

    def test_vandermonde_examples(self):
        assert vandermonde_det([2, 3]) == 1
        assert vandermonde_det([0, 1, 3]) == 6
        assert vandermonde_det([5]) == 1
        assert vandermonde_det([]) == 1

    @given(root_lists(0, 6))
    def test_vandermonde_is_power_det(self, gamma):
        assert vandermonde_det(gamma) == det_bareiss(bracket(1, gamma, range(len(gamma))))

    def test_mf_mg_examples(self):
        assert build_mf(Poly([0, -1, 1]), 2, 1) == DMatrix([[0, -1, 1]])
        assert build_mg(Poly([6, -5, 1]), 2, 1) == DMatrix([[6, -5, 1]])
        assert build_mf(Poly([-1, 1]), 1, 0) == DMatrix([[-1, 1]])
        assert build_mf(Poly([1, 2, 3]), 3, 0) == DMatrix(
            [[1, 2, 3, 0, 0], [0, 1, 2, 3, 0], [0, 0, 1, 2, 3]]
        )
        with pytest.raises(InadmissibleDegree):
            build_mf(Poly([0, -1, 1]), 2, 2)

    def test_mtx_examples(self):
        assert build_mtx(2, 2, 1) == DMatrix([[-x, 1, 0]])
        assert build_mtx(2, 3, 0).shape == (0, 5)
        assert build_mtx(2, 2, 2) == DMatrix([[-x, 1], [0, -x]])

    def test_sd_examples(self):
        f, g = Poly([0, -1, 1]), Poly([6, -5, 1])
        assert build_sd(f, g, 1) == DMatrix([[-x, 1, 0], [0, -1, 1], [6, -5, 1]])
        a, b = Fraction(2, 3), Fraction(-5)
        assert build_sd(Poly([-a, 1]), Poly([-b, 1]), 0) == DMatrix([[-a, 1], [-b, 1]])
        assert build_sd(poly_from_roots([1, 2, 3]), poly_from_roots([4, 5]), 2).shape == (3, 3)
        with pytest.raises(InadmissibleDegree):
            build_sd(f, g, 2)

    def test_sylvester_block_shape(self):
        f, g = Poly([0, -1, 1]), Poly([6, -5, 1])
        assert build_sylvester_block(f, g, 1) == DMatrix([[1, f], [1, g]])
        # d = min(m, n) with m = n + 1 leaves the 1x1 matrix [g]
        assert build_sylvester_block(poly_from_roots([1, 2, 3]), g, 2) == DMatrix([[g]])

    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_last_column_reduction(self, m, n, data):
        """Subtracting x^(top-k) times column k leaves a last column of degree <= d, same det."""
        f = data.draw(polys(m).filter(lambda p: p.degree == m))
        g = data.draw(polys(n).filter(lambda p: p.degree == n))
        ds = [d for d in range(min(m, n) + 1) if d < min(m, n) or m != n]
        d = data.draw(st.sampled_from(ds))
        mat = build_sylvester_block(f, g, d)
        size, top = mat.cols, m + n - d - 1
        rows = []
        for row in mat.entries:
            last = Poly.coerce(row[-1])
            for k in range(size - 1):
                last = last - Poly.coerce(row[k]).shift(top - k)
            assert last.degree <= d
            rows.append(list(row[:-1]) + [last])
        assert det_bareiss(DMatrix(rows)) == det_bareiss(mat)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_useful_equalities(m, n, data):
    f = poly_from_roots(data.draw(root_lists(m, m)))
    g = poly_from_roots(data.draw(root_lists(n, n)))
    d = data.draw(st.sampled_from([d for d in range(min(m, n) + 1) if d < min(m, n) or m != n]))
    gamma = data.draw(root_lists(0, max(m, n)))
    powers = bracket(1, gamma, range(m + n - d))
    assert build_mf(f, n, d) @ powers == bracket(f, gamma, range(n - d))
    assert build_mg(g, m, d) @ powers == bracket(g, gamma, range(m - d))
    assert build_mtx(m, n, d) @ powers == bracket(T_MINUS_X, gamma, range(d))
    assert -(build_mtx(m, n, d) @ powers) == bracket(X_MINUS_T, gamma, range(d))


@given(root_lists(1, 6))
def test_tech_identity(gamma):
    k = len(gamma)
    assert det_bareiss(bracket(X_MINUS_T, gamma, range(k))) == r_poly(gamma).scale(vandermonde_det(gamma))
