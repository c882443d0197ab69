from collections import Counter
from functools import lru_cache
from math import factorial, perm, prod
from typing import Dict, Tuple

from src.core.logger import dtgw_logger
from src.dtgw.geometry import Geometry, MultiplicityVector
from src.partitions.partitions import enumerate_partitions
from src.ratfun.ratfun import RatFun, rf_expand, rf_subst_neg
from src.schur.schur import pd_schur
from src.series.series import TruncSeries, exp_series, int_pow, mcmahon, mcmahon_log, negate_variable
from src.vertex.box_count import signed_local

Multiplicities = Tuple[int, ...]


def z_degree_zero(chi: int, order: int) -> TruncSeries:
    """Z_0(Y) = M(-q)^χ до q^order; χ может быть отрицательным."""
    return int_pow(negate_variable(mcmahon(order)), chi)


def z_degree_zero_via_log(chi: int, order: int) -> TruncSeries:
    """M(-q)^χ как exp(χ·log M(-q)): независимая проверка z_degree_zero."""
    return exp_series(negate_variable(mcmahon_log(order)).scale(chi))


@lru_cache(maxsize=None)
def reduced_factor(d: int) -> RatFun:
    """Вклад одной кривой кратности d: (-1)^d · P_d(-q)."""
    sign = 1 if d % 2 == 0 else -1
    return rf_subst_neg(pd_schur(d)) * sign


def z_reduced(dvec: MultiplicityVector) -> RatFun:
    """Z'_β(Y) = ∏_i (-1)^{d_i} P_{d_i}(-q); пустой вектор даёт 1."""
    result = RatFun.const(1)
    for d in dvec:
        result = result * reduced_factor(d)
    return result


def z_contribution(chi: int, dvec: MultiplicityVector, order: int) -> TruncSeries:
    """
    Z_β(Y) = M(-q)^χ · ∏_i (-1)^{d_i} P_{d_i}(-q) до q^order.

    Args:
        chi: Эйлерова характеристика Y
        dvec: Кратности кривых цикла β
        order: Порядок усечения

    Returns:
        Ряд с целыми коэффициентами
    """
    result = z_degree_zero(chi, order)
    for d in dvec:
        result = result * rf_expand(reduced_factor(d), order)
    return result


def z_contribution_by_strata(chi: int, dvec: MultiplicityVector, order: int) -> TruncSeries:
    """
    Z_β(Y) через разбиение пространства модулей на страты.

    Дополнение к кривым даёт M(-q)^{χ-2s}, каждая кривая кратности d даёт ряд
    Σ_m (-1)^{m-d} p(m, d) q^m, посчитанный перебором трёхмерных разбиений.
    """
    result = z_degree_zero(chi - 2 * len(dvec), order)
    for d in dvec:
        local = TruncSeries('q', [signed_local(m, d) for m in range(order + 1)], trunc=order)
        result = result * local
    dtgw_logger.debug(f"Стратифицированная сумма для χ={chi}, d={dvec.d} до q^{order}")
    return result


def species_assignments(geometry: Geometry, degree: int) -> Dict[Multiplicities, int]:
    """
    Распределения степени degree по кривым геометрии.

    Вид j с count_j кривыми класса e_j получает D_j, кратное e_j; разбиение μ
    числа D_j/e_j с ℓ(μ) ≤ count_j задаёт выбор кривых, число способов
    count_j!/(count_j-ℓ)!/∏ m_k!. Распределения с одинаковым набором кратностей
    объединяются.

    Returns:
        Отсортированный по убыванию набор кратностей -> число циклов
    """
    result: Dict[Multiplicities, int] = Counter()

    def walk(index: int, remaining: int, weight: int, multiplicities: Multiplicities) -> None:
        if remaining == 0:
            result[tuple(sorted(multiplicities, reverse=True))] += weight
            return
        if index == len(geometry.species):
            return
        species = geometry.species[index]
        for share in range(0, remaining + 1, species.class_degree):
            for mu in enumerate_partitions(share // species.class_degree):
                if len(mu) > species.count:
                    continue
                ways = perm(species.count, len(mu)) // prod(factorial(m) for m in Counter(mu.parts).values())
                walk(index + 1, remaining - share, weight * ways, multiplicities + mu.parts)

    walk(0, degree, 1, ())
    return dict(result)


def z_reduced_class(geometry: Geometry, degree: int) -> RatFun:
    """
    Z'_D(Y) = Σ по циклам суммарной степени D произведений ∏ (-1)^{d} P_d(-q).

    Args:
        geometry: Геометрия с видами кривых
        degree: Степень класса D ≥ 1

    Returns:
        Рациональная функция; ноль, если циклов нет
    """
    if degree < 1:
        raise ValueError(f"Степень класса должна быть положительной: {degree}")
    total = RatFun.const(0)
    assignments = species_assignments(geometry, degree)
    for multiplicities, weight in sorted(assignments.items()):
        total = total + z_reduced(MultiplicityVector(multiplicities)) * weight
    dtgw_logger.info(f"Z'_{degree} для '{geometry.name}': {len(assignments)} наборов кратностей")
    return total