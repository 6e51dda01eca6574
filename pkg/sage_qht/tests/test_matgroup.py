# tests/test_matgroup.py

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.linalg import expm

from sage_qht.helpers.choices import MatrixCatalog, SubgroupFlag
from sage_qht.helpers.exceptions import NotInX, NotQhtForm, SingularElement, UnknownIndex
from sage_qht.matgroup import (
    GroupElement,
    act,
    algebra_generator,
    classify,
    compose,
    exp_algebra_element,
    exp_generator,
    exp_series,
    from_qht,
    invert,
    m_map,
    matrix_commutator_table,
    to_qht,
    verify_matrix_table,
)
from sage_qht.scalars import Quaternion
from sage_qht.scalars.gaussian import GaussianRational
from sage_qht.scalars.quaternion import SymplecticPair

T_GRID = np.arange(-3.0, 3.25, 0.25)


def random_quaternion(rng):
    return Quaternion.floating(*rng.uniform(-2, 2, size=4))


def random_element(rng):
    values = rng.normal(size=6) + 1j * rng.normal(size=6)
    return GroupElement(*values)


class TestGenerators:
    """The 3x3 matrix realizations."""

    def test_x2_is_minus_e11(self):
        """Test that x2 is the diagonal matrix diag(-1, 0, 0)."""
        assert_allclose(algebra_generator(MatrixCatalog.XHAT, 2), np.diag([-1, 0, 0]))

    def test_x6(self):
        """Test the matrix of x6."""
        expected = np.zeros((3, 3))
        expected[1, 0] = 1
        assert_allclose(algebra_generator(MatrixCatalog.XHAT, 6), expected)

    def test_g1_is_x3_plus_x6(self):
        """Test that g1 = x3 + x6 exactly."""
        g1 = algebra_generator(MatrixCatalog.GHAT, 1, exact=True)
        x3 = algebra_generator(MatrixCatalog.XHAT, 3, exact=True)
        x6 = algebra_generator(MatrixCatalog.XHAT, 6, exact=True)
        assert (g1 == x3 + x6).all()

    def test_g2_has_imaginary_entries(self):
        """Test the imaginary off-diagonal entries of g2."""
        g2 = algebra_generator(MatrixCatalog.GHAT, 2, exact=True)
        assert g2[0, 1] == GaussianRational(0, -1)
        assert g2[1, 0] == GaussianRational(0, 1)

    def test_exact_copy_is_independent(self):
        """Test that editing a returned exact matrix leaves the catalog alone."""
        matrix = algebra_generator(MatrixCatalog.XHAT, 1, exact=True)
        matrix[0, 0] = GaussianRational(5)
        assert algebra_generator(MatrixCatalog.XHAT, 1, exact=True)[0, 0] == 0

    @pytest.mark.parametrize(
        "catalog, index", [(MatrixCatalog.XHAT, 0), (MatrixCatalog.GHAT, 7), (MatrixCatalog.HHAT_A, 4)]
    )
    def test_unknown_index(self, catalog, index):
        """Test that indices outside 1..6 raise UnknownIndex."""
        with pytest.raises(UnknownIndex):
            algebra_generator(catalog, index)


class TestExponential:
    """Closed forms against the series."""

    def test_translation(self):
        """Test that exp(2 x1) translates z by 2."""
        expected = np.eye(3)
        expected[0, 2] = 2
        assert_allclose(exp_generator(1, 2.0).to_matrix(), expected)

    def test_dilation(self):
        """Test that exp(x2) scales z by e^-1."""
        assert_allclose(exp_generator(2, 1.0).to_matrix(), np.diag([math.exp(-1), 1, 1]))

    @pytest.mark.parametrize("index", range(1, 7))
    def test_zero_parameter_is_identity(self, index):
        """Test that t = 0 gives the identity for every generator."""
        assert_allclose(exp_generator(index, 0.0).to_matrix(), np.eye(3))

    def test_unknown_generator(self):
        """Test that generator 7 raises UnknownIndex."""
        with pytest.raises(UnknownIndex):
            exp_generator(7, 1.0)

    @pytest.mark.parametrize("index", range(1, 7))
    def test_closed_form_matches_series_on_grid(self, index):
        """Test closed forms against the series on a grid of t."""
        for t in T_GRID:
            series = exp_series(t * algebra_generator(MatrixCatalog.XHAT, index))
            assert_allclose(exp_generator(index, t).to_matrix(), series, rtol=1e-12, atol=1e-12)

    def test_series_of_zero(self):
        """Test that exp(0) is the identity."""
        assert_allclose(exp_series(np.zeros((3, 3))), np.eye(3))

    def test_series_against_scipy(self):
        """Test the series against scipy expm on random algebra elements."""
        rng = np.random.default_rng(17)
        for _ in range(20):
            combination = sum(
                coefficient * algebra_generator(MatrixCatalog.XHAT, index)
                for index, coefficient in enumerate(rng.normal(size=6), start=1)
            )
            assert_allclose(exp_series(combination), expm(combination), rtol=1e-12, atol=1e-12)

    def test_series_with_large_norm(self):
        """Test the series stays accurate for a large argument."""
        matrix = 12.0 * algebra_generator(MatrixCatalog.GHAT, 2)
        assert_allclose(exp_series(matrix), expm(matrix), rtol=1e-10, atol=1e-10)

    def test_rotation_block_is_unimodular_qht(self):
        """Test that the rotation block exponentiates into unimodular QHTs."""
        element = exp_algebra_element({1: 0.3j, 2: -0.2j, 3: 0.5j, 5: 1.5, 6: -2j}, catalog=MatrixCatalog.GHAT)
        flags = classify(element)
        assert SubgroupFlag.QHT in flags
        assert SubgroupFlag.UNIMODULAR in flags
        assert SubgroupFlag.MOEBIUS not in flags

    def test_dilation_leaves_unimodular(self):
        """Test that a real dilation keeps QHT but loses unimodularity."""
        element = exp_algebra_element({3: 0.4j, 4: 0.7}, catalog=MatrixCatalog.GHAT)
        flags = classify(element)
        assert SubgroupFlag.QHT in flags
        assert SubgroupFlag.UNIMODULAR not in flags
        assert element.determinant == pytest.approx(math.exp(1.4))

    def test_scaled_parameter(self):
        """Test that t scales the algebra element."""
        once = exp_algebra_element({1: 1.0}, t=2.5)
        assert_allclose(once.to_matrix(), exp_generator(1, 2.5).to_matrix())


class TestClassify:
    """Subgroup membership of 3x3 matrices."""

    @pytest.mark.parametrize(
        "matrix, expected",
        [
            (np.eye(3), list(SubgroupFlag)),
            (
                [[2, 1, 0], [1, 1, 0], [0, 0, 1]],
                [SubgroupFlag.GENERAL_X, SubgroupFlag.MOEBIUS, SubgroupFlag.UNIMODULAR],
            ),
            (
                [[0, -1, 1], [1, 0, 2j], [0, 0, 1]],
                [SubgroupFlag.GENERAL_X, SubgroupFlag.QHT, SubgroupFlag.UNIMODULAR],
            ),
            (
                [[1, 3, 0], [0, 1, 5], [0, 0, 1]],
                [SubgroupFlag.GENERAL_X, SubgroupFlag.HEISENBERG, SubgroupFlag.UNIMODULAR],
            ),
            (
                [[1, 0, 2], [4, 1, 0], [0, 0, 1]],
                [SubgroupFlag.GENERAL_X, SubgroupFlag.HEISENBERG_TILDE, SubgroupFlag.UNIMODULAR],
            ),
        ],
    )
    def test_flags(self, matrix, expected):
        """Test the ordered subgroup flags of sample matrices."""
        assert classify(matrix).ordered() == expected

    def test_bad_bottom_row(self):
        """Test that a bottom row other than (0, 0, 1) raises NotInX."""
        with pytest.raises(NotInX):
            classify([[1, 0, 0], [0, 1, 0], [0, 1, 1]])

    def test_bad_shape(self):
        """Test that a 2x2 matrix raises NotInX."""
        with pytest.raises(NotInX):
            classify(np.eye(2))

    def test_tolerance(self):
        """Test that the tolerance widens membership."""
        matrix = np.eye(3)
        matrix[0, 2] = 1e-6
        assert SubgroupFlag.MOEBIUS not in classify(matrix)
        assert SubgroupFlag.MOEBIUS in classify(matrix, tol=1e-5)

    def test_to_dict(self):
        """Test the JSON payload of a classification."""
        assert classify(np.eye(3)).to_dict()["flags"][0] == "GeneralX"

    @pytest.mark.parametrize("index", range(1, 7))
    def test_one_parameter_subgroups_stay_in_x(self, index):
        """Test that every one-parameter subgroup lies in X."""
        for t in (-1.0, 0.5, 2.0):
            assert SubgroupFlag.GENERAL_X in classify(exp_generator(index, t))


class TestGroupOperations:
    def test_act_identity(self):
        """Test that the identity acts trivially."""
        pair = SymplecticPair(1 + 2j, -3j)
        assert act(GroupElement.identity(), pair) == pair

    def test_translation_acts_on_the_origin(self):
        """Test that a translation moves the origin by its vector."""
        translation = GroupElement.from_matrix([[1, 0, 1], [0, 1, 1j], [0, 0, 1]])
        image = m_map(act(translation, SymplecticPair(0, 0)))
        assert image.is_close(Quaternion.floating(1, 0, 0, 1))

    def test_action_is_compatible_with_composition(self):
        """Test that acting by a product is acting twice."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            first, second = random_element(rng), random_element(rng)
            pair = SymplecticPair(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
            left = act(compose(first, second), pair)
            right = act(first, act(second, pair))
            assert abs(left.z - right.z) < 1e-10
            assert abs(left.zeta - right.zeta) < 1e-10

    def test_inverse(self):
        """Test that an element times its inverse is the identity."""
        rng = np.random.default_rng(5)
        for _ in range(50):
            element = random_element(rng)
            assert_allclose(compose(element, invert(element)).to_matrix(), np.eye(3), atol=1e-9)

    def test_singular_block(self):
        """Test that a singular 2x2 block raises SingularElement."""
        with pytest.raises(SingularElement):
            invert([[1, 1, 0], [1, 1, 0], [0, 0, 1]])

    def test_moebius_is_closed_under_composition(self):
        """Test that Moebius elements compose to Moebius elements."""
        first = GroupElement(2, 1, 1, 1)
        second = GroupElement(1, 3j, 0, 1)
        assert SubgroupFlag.MOEBIUS in classify(compose(first, second))


class TestQhtMatrices:
    """The QHT embedding q -> q u + v."""

    def test_from_qht(self):
        """Test the block matrix of q -> q i + j."""
        element = from_qht(Quaternion.exact(0, 1), Quaternion.exact(0, 0, 1))
        assert_allclose(element.to_matrix(), [[1j, 0, 0], [0, -1j, 1], [0, 0, 1]])

    def test_identity(self):
        """Test that q -> q maps to the identity matrix."""
        assert_allclose(from_qht(Quaternion.exact(1), Quaternion.exact()).to_matrix(), np.eye(3))

    def test_round_trip(self):
        """Test that to_qht inverts from_qht."""
        u, v = Quaternion.floating(1, -2, 0.5, 3), Quaternion.floating(0, 1, 1, -1)
        back_u, back_v = to_qht(from_qht(u, v))
        assert back_u.is_close(u)
        assert back_v.is_close(v)

    def test_not_qht_form(self):
        """Test that a matrix without the QHT blocks raises NotQhtForm."""
        with pytest.raises(NotQhtForm):
            to_qht([[2, 1, 0], [1, 1, 0], [0, 0, 1]])

    def test_matrix_action_is_the_transform(self):
        """Test that the matrix action equals q u + v on 100 seeded cases."""
        rng = np.random.default_rng(11)
        for _ in range(100):
            u, v, q = (random_quaternion(rng) for _ in range(3))
            image = m_map(act(from_qht(u, v), q.symplectic_split()))
            assert image.is_close(q * u + v, 1e-12)

    def test_determinant_is_norm_squared(self):
        """Test det = |u|^2 for 100 seeded transforms."""
        rng = np.random.default_rng(12)
        for _ in range(100):
            u, v = random_quaternion(rng), random_quaternion(rng)
            assert abs(from_qht(u, v).determinant - u.norm_squared()) <= 1e-12

    def test_determinant_of_a_known_transform(self):
        """Test det = 30 for u = 1 + 2i + 3j + 4k."""
        u = Quaternion.floating(1, 2, 3, 4)
        assert from_qht(u, Quaternion.floating()).determinant == pytest.approx(30)

    def test_unit_quaternions_are_unimodular(self):
        """Test a unit and a non-unit u."""
        u = Quaternion.floating(0.5, 0.5, 0.5, 0.5)
        assert SubgroupFlag.UNIMODULAR in classify(from_qht(u, Quaternion.floating(1)))
        assert SubgroupFlag.UNIMODULAR not in classify(from_qht(2 * u, Quaternion.floating(1)))

    def test_unimodular_exactly_for_unit_quaternions(self):
        """Test that QHT and unimodular hold together only when |u| = 1."""
        rng = np.random.default_rng(14)
        for _ in range(100):
            u, v = random_quaternion(rng), random_quaternion(rng)
            unit = u / u.norm()
            assert abs(unit.norm() - 1) <= 1e-12
            flags = classify(from_qht(unit, v), 1e-12)
            assert SubgroupFlag.QHT in flags
            assert SubgroupFlag.UNIMODULAR in flags
            scale = float(rng.choice([rng.uniform(0.2, 0.99), rng.uniform(1.01, 3)]))
            flags = classify(from_qht(unit * scale, v), 1e-12)
            assert SubgroupFlag.QHT in flags
            assert SubgroupFlag.UNIMODULAR not in flags

    def test_closed_under_composition(self):
        """Test that composing QHT matrices stays in QHT."""
        rng = np.random.default_rng(13)
        for _ in range(20):
            first = from_qht(random_quaternion(rng), random_quaternion(rng))
            second = from_qht(random_quaternion(rng), random_quaternion(rng))
            assert SubgroupFlag.QHT in classify(compose(first, second))


class TestMatrixTables:
    @pytest.mark.parametrize(
        "catalog", [MatrixCatalog.XHAT, MatrixCatalog.HHAT_A, MatrixCatalog.HHAT_B]
    )
    def test_clean_catalogs(self, catalog):
        """Test the catalogs whose matrix tables match exactly."""
        assert verify_matrix_table(catalog).is_clean

    def test_xhat_matches_all_fifteen_entries(self):
        """Test the matrix table of X against the printed one."""
        report = verify_matrix_table(MatrixCatalog.XHAT)
        assert (report.matched, report.total) == (15, 15)

    def test_ghat_mismatches(self):
        """Test the discrepancies of the G matrix table."""
        report = verify_matrix_table(MatrixCatalog.GHAT)
        assert (report.matched, report.total) == (12, 15)
        oracle = {entry.pair: entry.oracle for entry in report.mismatches}
        assert oracle == {
            (1, 3): {2: GaussianRational(0, -2)},
            (3, 5): {5: GaussianRational(1)},
            (3, 6): {6: GaussianRational(-1)},
        }

    def test_pauli_bracket(self):
        """Test [g1, g2] = 2i g3."""
        table = matrix_commutator_table(MatrixCatalog.GHAT)
        assert table.get(1, 2).coefficients == {3: GaussianRational(0, 2)}
