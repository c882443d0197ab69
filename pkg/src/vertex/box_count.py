from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.core.logger import vertex_logger
from src.partitions.partitions import Partition, b2, enumerate_partitions, leg_weight, transpose
from src.ratfun.ratfun import rf_expand
from src.schur.schur import cauchy_rhs, schur_principal_rat
from src.series.series import TruncSeries, mcmahon
from src.vertex.asymptotic import box_counter, enumerate_app


@dataclass(frozen=True)
class BoxCount:
    """p(n, d): число троек (π₀, λ, π_∞) с |λ| = d и данным n."""
    n: int
    d: int
    count: int

    def to_json(self) -> Dict:
        return {"n": self.n, "d": self.d, "count": str(self.count)}


def p_enumerate(n: int, d: int) -> BoxCount:
    """
    p(n, d) перебором: Σ_{λ⊢d} Σ_{a+b = n - leg_weight(λ)} A(λ, a)·A(λ, b).

    Args:
        n: Голоморфная эйлерова характеристика
        d: Размер ноги

    Returns:
        BoxCount; ноль, если n меньше минимального веса ноги
    """
    if n < 0 or d < 0:
        raise ValueError(f"Ожидались неотрицательные n и d, получено n={n}, d={d}")
    total = 0
    for shape in enumerate_partitions(d):
        rest = n - leg_weight(shape)
        for a in range(rest + 1):
            total += enumerate_app(shape, a) * enumerate_app(shape, rest - a)
    return BoxCount(n, d, total)


def p_table(max_n: int, max_d: int) -> Dict[Tuple[int, int], BoxCount]:
    """Таблица p(n, d) для n ≤ max_n, d ≤ max_d; перечисление идёт в нескольких потоках."""
    jobs: List[Tuple[Partition, int]] = []
    for d in range(max_d + 1):
        for shape in enumerate_partitions(d):
            for volume in range(max_n - leg_weight(shape) + 1):
                jobs.append((shape, volume))
    box_counter.precompute(jobs)
    return {(n, d): p_enumerate(n, d) for d in range(max_d + 1) for n in range(max_n + 1)}


def signed_local(n: int, d: int) -> int:
    """(-1)^{n-d}·p(n, d): взвешенная эйлерова характеристика локальной модели."""
    sign = 1 if (n - d) % 2 == 0 else -1
    return sign * p_enumerate(n, d).count


def pd_product(d: int, order: int) -> TruncSeries:
    """P_d(q) до q^order: коэффициент при v^d в ∏_{m≥1} (1 + q^m v)^m."""
    if d < 0 or order < 0:
        raise ValueError(f"Ожидались неотрицательные d и order, получено d={d}, order={order}")
    by_v = [TruncSeries.constant('q', 1, order)] + [TruncSeries.constant('q', 0, order) for _ in range(d)]
    for m in range(1, order + 1):
        for _ in range(m):
            for k in range(d, 0, -1):
                by_v[k] = by_v[k] + by_v[k - 1].shift(m).truncate(order)
    return by_v[d]


def p_gf(d: int, order: int) -> TruncSeries:
    """Σ_n p(n, d) q^n = M(q)²·P_d(q) до q^order."""
    macmahon = mcmahon(order)
    return macmahon * macmahon * pd_product(d, order)


def vertex_one_leg_check(shape: Partition, order: int) -> bool:
    """
    Вершина с одной ногой: Σ_π q^{|π|} = M(q)·q^{-b2(λ)}·s_{λ^t}(q).

    Сторона перебора умножается на q^{b2(λ)}, чтобы остаться в неотрицательных степенях.
    """
    shift = b2(shape)
    enumerated = TruncSeries('q', [enumerate_app(shape, m) for m in range(order + 1)], trunc=order).shift(shift)
    closed_form = mcmahon(order + shift) * rf_expand(schur_principal_rat(transpose(shape)), order + shift)
    passed = enumerated.agrees_with(closed_form)
    vertex_logger.info(f"Вершина с ногой {shape.parts} до q^{order}: {'совпадает' if passed else 'расходится'}")
    return passed


def bivariate_check(order: int, v_order: int) -> bool:
    """Σ p(n,d) q^n v^d перебором против M(q)²·∏(1 + q^{i+j-1} v) до (q^N, v^D)."""
    table = p_table(order, v_order)
    macmahon = mcmahon(order)
    product = cauchy_rhs(order, v_order)
    for d in range(v_order + 1):
        enumerated = TruncSeries('q', [table[(n, d)].count for n in range(order + 1)], trunc=order)
        if not enumerated.agrees_with(macmahon * macmahon * product[d]):
            vertex_logger.warning(f"Двумерное тождество расходится при v^{d}")
            return False
    return True
