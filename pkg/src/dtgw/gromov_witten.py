from fractions import Fraction
from functools import lru_cache
from typing import List

from src.core.logger import dtgw_logger
from src.dtgw.geometry import Geometry
from src.series.laurent import LaurentSeries
from src.series.series import TruncSeries, inverse, sine_series

VSeries = List[LaurentSeries]


@lru_cache(maxsize=None)
def gw_c(d: int, genus_cutoff: int) -> LaurentSeries:
    """
    Вклад кратных накрытий суперрегидной кривой: (1/d)·(2 sin(du/2))^{-2}.

    2 sin(du/2) = u·S(u), S(0) = d, поэтому ряд начинается с u^{-2};
    коэффициенты известны до u^{2G-2}.

    Args:
        d: Кратность накрытия, d ≥ 1
        genus_cutoff: Род G

    Returns:
        Ряд Лорана по u с ведущим членом u^{-2}/d³
    """
    if d < 1:
        raise ValueError(f"Кратность накрытия должна быть положительной: {d}")
    if genus_cutoff < 0:
        raise ValueError(f"Род должен быть неотрицательным: {genus_cutoff}")
    top = 2 * genus_cutoff
    chord = sine_series(top + 1, Fraction(d, 2)).scale(2)
    reduced = TruncSeries('u', chord.coeffs[1:], trunc=top)
    inverted = inverse(reduced)
    return LaurentSeries.from_series((inverted * inverted).scale(Fraction(1, d)), shift=-2)


def gw_log_potential(geometry: Geometry, max_degree: int, genus_cutoff: int) -> VSeries:
    """
    F = Σ_j count_j Σ_k gw_c(k, G) v^{k·e_j}: коэффициенты при v^0..v^D.

    Коэффициент при v^0 равен нулю.
    """
    top = 2 * genus_cutoff - 2
    potential = [LaurentSeries.zero('u', top) for _ in range(max_degree + 1)]
    for species in geometry.species:
        for k in range(1, max_degree // species.class_degree + 1):
            power = k * species.class_degree
            potential[power] = potential[power] + gw_c(k, genus_cutoff).scale(species.count)
    return potential


def v_series_exp(potential: VSeries) -> VSeries:
    """
    exp(F) для F без свободного члена: k·E_k = Σ_{j=1..k} j·F_j·E_{k-j}, E_0 = 1.

    E_0 не участвует в произведениях: слагаемое j = k равно k·F_k.
    """
    result: VSeries = [None]
    for k in range(1, len(potential)):
        acc = potential[k].scale(k)
        for j in range(1, k):
            if potential[j].is_zero:
                continue
            acc = acc + potential[j] * result[k - j] * j
        result.append(acc.scale(Fraction(1, k)))
    return result


def v_series_log(exponential: VSeries) -> VSeries:
    """log(E) для E_0 = 1: F_k = E_k - (1/k)·Σ_{j<k} j·F_j·E_{k-j}."""
    result: VSeries = [None]
    for k in range(1, len(exponential)):
        acc = exponential[k]
        for j in range(1, k):
            if result[j].is_zero:
                continue
            acc = acc - (result[j] * exponential[k - j]).scale(Fraction(j, k))
        result.append(acc)
    return result


def zgw_reduced_class(geometry: Geometry, degree: int, genus_cutoff: int) -> LaurentSeries:
    """
    Коэффициент при v^D в exp(F): приведённая GW статсумма степени D.

    Произведение D рядов с полюсом u^{-2} теряет 2(D-1) порядков, поэтому
    потенциал считается до рода G + D - 1, а ответ усекается до u^{2G-2}.

    Args:
        geometry: Геометрия с видами кривых
        degree: Степень класса D ≥ 1
        genus_cutoff: Род G

    Returns:
        Ряд Лорана по u с коэффициентами до u^{2G-2}
    """
    if degree < 1:
        raise ValueError(f"Степень класса должна быть положительной: {degree}")
    internal_genus = genus_cutoff + degree - 1
    exponential = v_series_exp(gw_log_potential(geometry, degree, internal_genus))
    dtgw_logger.info(f"Z'_GW степени {degree} для '{geometry.name}' до u^{2 * genus_cutoff - 2}")
    return exponential[degree].truncate(2 * genus_cutoff - 2)
