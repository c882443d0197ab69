from functools import lru_cache
from typing import List

from src.core.logger import series_logger
from src.partitions.partitions import (
    Partition, b2, cells, enumerate_partitions, hook_length, size, transpose
)
from src.ratfun.ratfun import RatFun, rf_eq, rf_expand
from src.series.series import TruncSeries


@lru_cache(maxsize=None)
def schur_principal_rat(partition: Partition) -> RatFun:
    """
    Главная специализация s_λ(1, q, q², ...) по формуле крюков.

    s_λ(q) = q^{b2(λ^t)} · ∏_{x∈λ} (1 - q^{h(x)})^{-1}

    Args:
        partition: Разбиение λ

    Returns:
        s_λ(q) как рациональная функция
    """
    result = RatFun.monomial(b2(transpose(partition)))
    for cell in cells(partition):
        h = hook_length(partition, cell)
        result = result / RatFun([1] + [0] * (h - 1) + [-1])
    return result


def schur_transpose_check(partition: Partition) -> bool:
    """s_{λ^t}(q) = q^{b2(λ) - b2(λ^t)} · s_λ(q) как равенство рациональных функций."""
    conjugate = transpose(partition)
    left = schur_principal_rat(conjugate)
    right = RatFun.monomial(b2(partition) - b2(conjugate)) * schur_principal_rat(partition)
    return rf_eq(left, right)


@lru_cache(maxsize=None)
def pd_schur(d: int) -> RatFun:
    """P_d(q) = q^d · Σ_{λ⊢d} s_λ(q) s_{λ^t}(q)."""
    if d < 0:
        raise ValueError(f"Ожидалось неотрицательное d, получено {d}")
    total = RatFun.const(0)
    for partition in enumerate_partitions(d):
        total = total + schur_principal_rat(partition) * schur_principal_rat(transpose(partition))
    return RatFun.monomial(d) * total


def cauchy_lhs(order: int, v_order: int) -> List[TruncSeries]:
    """Σ_{|λ|≤D} s_λ(q) s_{λ^t}(q) q^{|λ|} v^{|λ|}: коэффициенты при v^0..v^D."""
    result = []
    for k in range(v_order + 1):
        term = TruncSeries.constant('q', 0, order)
        for partition in enumerate_partitions(k):
            product = schur_principal_rat(partition) * schur_principal_rat(transpose(partition))
            term = term + rf_expand(RatFun.monomial(size(partition)) * product, order)
        result.append(term)
    return result


def cauchy_rhs(order: int, v_order: int) -> List[TruncSeries]:
    """∏_{i,j≥1} (1 + q^{i+j-1} v): коэффициенты при v^0..v^D; множители с i+j-1 > N опущены."""
    result = [TruncSeries.constant('q', 1, order)] + \
             [TruncSeries.constant('q', 0, order) for _ in range(v_order)]
    for i in range(1, order + 1):
        for j in range(1, order + 2 - i):
            exponent = i + j - 1
            # умножение на (1 + q^e v): сдвиг по v сверху вниз
            for k in range(v_order, 0, -1):
                result[k] = result[k] + result[k - 1].shift(exponent).truncate(order)
    return result


def cauchy_check(order: int, v_order: int) -> bool:
    """Проверка тождества ортогональности до (q^N, v^D)."""
    left = cauchy_lhs(order, v_order)
    right = cauchy_rhs(order, v_order)
    passed = all(l.agrees_with(r) for l, r in zip(left, right))
    series_logger.info(f"Тождество Коши до (q^{order}, v^{v_order}): {'совпадает' if passed else 'расходится'}")
    return passed
