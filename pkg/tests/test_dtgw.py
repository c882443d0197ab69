from fractions import Fraction

import pytest

from src.dtgw.correspondence import (
    ComparisonRow, SymmetryViolationError, VerificationReport, correspondence_check, dt_in_u,
    multiple_cover_identity_check, multiple_cover_ratfun, printed_display_comparison
)
from src.dtgw.donaldson_thomas import (
    reduced_factor, species_assignments, z_contribution, z_contribution_by_strata, z_degree_zero,
    z_degree_zero_via_log, z_reduced, z_reduced_class
)
from src.dtgw.geometry import (
    CurveSpecies, GeometryFormatError, MultiplicityError, MultiplicityVector, parse_multiplicities,
    parse_species, quintic_preset, toy_preset
)
from src.dtgw.gromov_witten import gw_c, gw_log_potential, v_series_exp, v_series_log, zgw_reduced_class
from src.ratfun.ratfun import RatFun, rf_eq, rf_expand, rf_subst_inv
from src.series.coefficient import GaussianRational

Q_OVER_1_PLUS_Q_SQUARED = RatFun([0, 1], [1, 2, 1])


def test_quintic_preset():
    quintic = quintic_preset()
    assert quintic.species[0] == CurveSpecies(2875, 1)
    assert quintic.species[1] == CurveSpecies(609250, 2)
    assert quintic.euler_char == -200
    assert quintic.euler_char_source


def test_species_validation():
    with pytest.raises(GeometryFormatError):
        CurveSpecies(0, 1)
    with pytest.raises(GeometryFormatError):
        parse_species("abc")
    with pytest.raises(GeometryFormatError):
        parse_species("")
    assert parse_species("3:1, 2:2", euler_char=4).species == (CurveSpecies(3, 1), CurveSpecies(2, 2))


def test_multiplicity_validation():
    with pytest.raises(MultiplicityError):
        MultiplicityVector((1, 0))
    with pytest.raises(MultiplicityError):
        parse_multiplicities("1,-1")
    with pytest.raises(MultiplicityError):
        parse_multiplicities("x")
    assert parse_multiplicities("1,2").d == (1, 2)
    assert parse_multiplicities("").d == ()


def test_degree_zero_examples():
    assert z_degree_zero(0, 5).to_ints() == [1, 0, 0, 0, 0, 0]
    assert z_degree_zero(1, 6).to_ints() == [1, -1, 3, -6, 13, -24, 48]
    assert z_degree_zero(-200, 3).coeff(1) == 200


@pytest.mark.parametrize("chi", [-200, -3, 0, 3])
def test_degree_zero_log_route(chi):
    assert z_degree_zero(chi, 10) == z_degree_zero_via_log(chi, 10)


def test_contribution_examples():
    assert z_contribution(5, MultiplicityVector(()), 6) == z_degree_zero(5, 6)
    single = z_contribution(0, MultiplicityVector((1,)), 5)
    assert single.to_ints() == [0, 1, -2, 3, -4, 5]
    assert z_contribution(0, MultiplicityVector((1, 1)), 5) == single * single
    assert z_contribution(-200, MultiplicityVector((1, 2)), 8).is_integral()


@pytest.mark.parametrize("chi, dvec", [(0, (2,)), (-200, (1, 2)), (7, (3,))])
def test_contribution_factorizes(chi, dvec):
    multiplicities = MultiplicityVector(dvec)
    expected = z_degree_zero(chi, 10) * rf_expand(z_reduced(multiplicities), 10)
    assert z_contribution(chi, multiplicities, 10) == expected


@pytest.mark.parametrize("chi, dvec", [(0, (1,)), (2, (2,)), (-1, (1, 1))])
def test_contribution_by_strata(chi, dvec):
    multiplicities = MultiplicityVector(dvec)
    assert z_contribution_by_strata(chi, multiplicities, 6) == z_contribution(chi, multiplicities, 6)


def test_reduced_examples():
    assert z_reduced(MultiplicityVector((1,))) == Q_OVER_1_PLUS_Q_SQUARED
    assert z_reduced(MultiplicityVector((2,))) == \
        RatFun.monomial(3, -2) / (RatFun([1, 1]) ** 4 * RatFun([1, -1]) ** 2)
    assert z_reduced(MultiplicityVector((1, 1))) == RatFun([0, 0, 1], [1, 4, 6, 4, 1])
    assert z_reduced(MultiplicityVector(())) == 1


def test_species_assignments_quintic():
    assert species_assignments(quintic_preset(), 2) == {
        (2,): 2875,
        (1, 1): 2875 * 2874 // 2,
        (1,): 609250,
    }


def test_species_assignments_respect_curve_count():
    assert species_assignments(toy_preset(), 2) == {(2,): 1}
    assert species_assignments(toy_preset(curves=2), 3) == {(3,): 2, (2, 1): 2}


def test_reduced_class_quintic():
    quintic = quintic_preset()
    assert z_reduced_class(quintic, 1) == Q_OVER_1_PLUS_Q_SQUARED * 2875
    expected = reduced_factor(2) * 2875 + Q_OVER_1_PLUS_Q_SQUARED ** 2 * (2875 * 2874 // 2) + \
        Q_OVER_1_PLUS_Q_SQUARED * 609250
    assert z_reduced_class(quintic, 2) == expected


def test_reduced_class_toy():
    assert z_reduced_class(toy_preset(), 2) == reduced_factor(2)
    assert z_reduced_class(toy_preset(class_degree=2), 1) == 0
    with pytest.raises(ValueError):
        z_reduced_class(toy_preset(), 0)


@pytest.mark.parametrize("geometry, degree", [
    (quintic_preset(), 1), (quintic_preset(), 2),
    (toy_preset(), 1), (toy_preset(), 2), (toy_preset(), 3), (toy_preset(), 4),
])
def test_reduced_class_q_inverse_symmetry(geometry, degree):
    reduced = z_reduced_class(geometry, degree)
    assert rf_eq(reduced, rf_subst_inv(reduced))


def test_gw_c_leading_terms():
    one = gw_c(1, 4)
    assert one.lead == -2 and one.trunc == 6
    assert one.coeff(-2) == 1
    assert one.coeff(0) == Fraction(1, 12)
    assert one.coeff(2) == Fraction(1, 240)
    assert one.coeff(-1) == 0 and one.coeff(1) == 0
    assert gw_c(2, 4).coeff(-2) == Fraction(1, 8)
    assert gw_c(1, 0).trunc == -2


def test_gw_c_domain():
    with pytest.raises(ValueError):
        gw_c(0, 3)


@pytest.mark.parametrize("genus_cutoff", [1, 4, 8])
def test_sine_identity(genus_cutoff):
    assert dt_in_u(Q_OVER_1_PLUS_Q_SQUARED, genus_cutoff) == gw_c(1, genus_cutoff)


def test_dt_in_u_constant():
    result = dt_in_u(RatFun.const(1), 3)
    assert result.lead == 0 and result.trunc == 4
    assert [c for _, c in result.items()] == [1, 0, 0, 0, 0]


def test_dt_in_u_detects_asymmetry():
    with pytest.raises(SymmetryViolationError):
        dt_in_u(RatFun([0, 1]), 2)
    relaxed = dt_in_u(RatFun([0, 1]), 2, strict=False)
    assert not relaxed.coeff(1).is_real


@pytest.mark.parametrize("d", range(1, 5))
def test_multiple_cover_identity(d):
    assert multiple_cover_identity_check(d, 5)


def test_multiple_cover_ratfun():
    assert multiple_cover_ratfun(1) == Q_OVER_1_PLUS_Q_SQUARED
    assert multiple_cover_ratfun(2) == RatFun([0, 0, -1], [1, 0, -2, 0, 1])


def test_zgw_small_cases():
    toy = toy_preset()
    assert zgw_reduced_class(toy, 1, 5) == gw_c(1, 5)
    square = gw_c(1, 5) * gw_c(1, 5)
    expected = (gw_c(2, 5) + square.scale(Fraction(1, 2))).truncate(6)
    assert zgw_reduced_class(toy, 2, 4) == expected
    assert zgw_reduced_class(quintic_preset(), 1, 3) == gw_c(1, 3).scale(2875)


def test_exp_log_consistency():
    potential = gw_log_potential(quintic_preset(), 3, 5)
    recovered = v_series_log(v_series_exp(potential))
    for original, restored in zip(potential[1:], recovered[1:]):
        upto = min(original.trunc, restored.trunc)
        assert upto >= 2 * 5 - 2 - 4
        assert all(original.coeff(k) == restored.coeff(k) for k in range(-2, upto + 1))


@pytest.mark.parametrize("degree", [1, 2])
def test_quintic_correspondence(degree):
    report = correspondence_check(quintic_preset(), degree, 6)
    assert report.verdict == 'pass'
    assert report.q_inv_symmetric
    assert report.rows[0].u_exp == -2 * degree
    assert report.rows[-1].u_exp == 10
    assert all(row.dt.is_real for row in report.rows)
    assert all(row.dt == 0 for row in report.rows if row.u_exp % 2)
    assert report.printed_forms


@pytest.mark.parametrize("degree, genus_cutoff", [(1, 6), (2, 6), (3, 5), (4, 6)])
def test_toy_correspondence(degree, genus_cutoff):
    report = correspondence_check(toy_preset(), degree, genus_cutoff)
    assert report.verdict == 'pass'
    assert report.q_inv_symmetric
    assert not report.printed_forms


def test_custom_geometry_correspondence():
    report = correspondence_check(parse_species("3:1,2:2"), 3, 4)
    assert report.verdict == 'pass'


def test_report_json():
    report = correspondence_check(toy_preset(), 1, 2)
    document = report.to_json()
    assert list(document) == ["target", "rows", "q_inv_symmetric", "verdict", "notes"]
    assert document["rows"][0] == {"u_exp": -2, "dt": ["1", "1"], "gw": ["1", "1"], "equal": True}


def test_report_verdict_on_mismatch():
    report = VerificationReport("manual", rows=[ComparisonRow(-2, GaussianRational(1), GaussianRational(2))])
    assert report.verdict == 'fail'
    assert VerificationReport("empty").verdict == 'fail'


def test_printed_display_comparison():
    rows = printed_display_comparison()
    assert [row["degree"] for row in rows] == [1, 2]
    # Опубликованные формулы, вероятно, содержат опечатки; сравнение информационное
    assert rows[0]["equal"] is False
    assert rows[0]["computed"] == (Q_OVER_1_PLUS_Q_SQUARED * 2875).to_json()
