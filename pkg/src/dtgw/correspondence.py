import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from src.core.logger import dtgw_logger, log_exception
from src.dtgw.donaldson_thomas import z_reduced_class
from src.dtgw.geometry import Geometry, quintic_preset
from src.dtgw.gromov_witten import gw_c, zgw_reduced_class
from src.ratfun.ratfun import RatFun, rf_eq, rf_subst_inv
from src.series.coefficient import GaussianRational
from src.series.laurent import LaurentSeries
from src.series.series import SeriesDomainError, TruncSeries, TruncationError, exp_iu, substitute


class SymmetryViolationError(ArithmeticError):
    """После подстановки q = -e^{iu} остались мнимые части или нечётные степени u."""


def dt_in_u(f: RatFun, genus_cutoff: int, strict: bool = True) -> LaurentSeries:
    """
    Подстановка q = -e^{iu} в рациональную функцию и разложение по u до u^{2G-2}.

    Числитель и знаменатель раскладываются как многочлены от -e^{iu};
    порядок разложения берётся с запасом на полюс знаменателя в u = 0.

    Args:
        f: Рациональная функция от q
        genus_cutoff: Род G
        strict: Проверять вещественность и чётность результата

    Returns:
        Ряд Лорана по u

    Raises:
        SymmetryViolationError: при strict=True и мнимом или нечётном коэффициенте
        SeriesDomainError: если знаменатель обращается в ноль в пределах разложения
    """
    top = 2 * genus_cutoff - 2
    den_coeffs = f.den_coeffs
    den_degree = len(den_coeffs) - 1
    order = max(den_degree, top + 2 * den_degree)
    inner = exp_iu(order).scale(-1)

    def expand(coeffs: List[int]) -> LaurentSeries:
        series = substitute(TruncSeries.polynomial('q', coeffs), inner)
        return LaurentSeries.from_series(TruncSeries('u', series.coeffs[:order + 1], trunc=order))

    numerator = expand(f.num_coeffs)
    denominator = expand(den_coeffs)
    if denominator.is_zero:
        raise SeriesDomainError(f"Знаменатель {f.den.as_expr()} обращается в ноль до u^{order}")
    result = numerator / denominator
    if result.trunc < top:
        raise TruncationError(f"Разложение известно до u^{result.trunc}, требуется u^{top}")
    result = result.truncate(top)
    if strict:
        for k, c in result.items():
            if not c.is_real or (k % 2 and c):
                raise SymmetryViolationError(f"Коэффициент при u^{k} равен {c}")
    return result


def multiple_cover_ratfun(d: int) -> RatFun:
    """-(-q)^d / (1 - (-q)^d)²: рациональная функция, отвечающая (2 sin(du/2))^{-2}."""
    sign = 1 if d % 2 == 0 else -1
    numerator = RatFun.monomial(d, -sign)
    denominator = RatFun([1] + [0] * (d - 1) + [-sign]) ** 2
    return numerator / denominator


def multiple_cover_identity_check(d: int, genus_cutoff: int) -> bool:
    """(1/d)·dt_in_u(-(-q)^d/(1-(-q)^d)²) совпадает с gw_c(d, G)."""
    left = dt_in_u(multiple_cover_ratfun(d), genus_cutoff).scale(Fraction(1, d))
    passed = left == gw_c(d, genus_cutoff)
    dtgw_logger.info(f"Тождество кратных накрытий d={d}, G={genus_cutoff}: {'совпадает' if passed else 'расходится'}")
    return passed


def printed_display_comparison() -> List[Dict]:
    """
    Сравнение с опубликованными формулами для квинтики, D = 1 и D = 2.

    Опубликованные выражения 2875·q/(1-q)² и -3503187500·q⁴/(1-q²)⁴ считаются
    вероятными опечатками; сравнение только информационное и не влияет на вердикт.
    """
    quintic = quintic_preset()
    printed = {
        1: RatFun([0, 2875], [1, -2, 1]),
        2: RatFun.monomial(4, -3503187500) / RatFun([1, 0, -1]) ** 4,
    }
    rows = []
    for degree, display in printed.items():
        computed = z_reduced_class(quintic, degree)
        rows.append({
            "degree": degree,
            "printed": display.to_json(),
            "computed": computed.to_json(),
            "equal": rf_eq(display, computed),
        })
    return rows


@dataclass(frozen=True)
class ComparisonRow:
    u_exp: int
    dt: GaussianRational
    gw: GaussianRational

    @property
    def equal(self) -> bool:
        return self.dt == self.gw

    def to_json(self) -> Dict:
        return {"u_exp": self.u_exp, "dt": self.dt.to_json(), "gw": self.gw.to_json(), "equal": self.equal}


@dataclass
class VerificationReport:
    """Покоэффициентное сравнение DT и GW сторон для одного класса."""
    target: str
    rows: List[ComparisonRow] = field(default_factory=list)
    q_inv_symmetric: bool = False
    imaginary_free: bool = True
    notes: List[str] = field(default_factory=list)
    printed_forms: List[Dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        passed = bool(self.rows) and self.imaginary_free and all(row.equal for row in self.rows)
        return 'pass' if passed else 'fail'

    def to_json(self) -> Dict:
        document = {
            "target": self.target,
            "rows": [row.to_json() for row in self.rows],
            "q_inv_symmetric": self.q_inv_symmetric,
            "verdict": self.verdict,
            "notes": list(self.notes),
        }
        if self.printed_forms:
            document["printed_forms"] = self.printed_forms
        return document


class CorrespondenceChecker:
    """
    Проверка соответствия DT/GW для класса степени D.

    DT и GW стороны считаются в двух потоках; ошибки сторон попадают в отчёт.
    """

    def __init__(self, geometry: Geometry, degree: int, genus_cutoff: int):
        self.geometry = geometry
        self.degree = degree
        self.genus_cutoff = genus_cutoff
        self.lock = threading.Lock()
        self.sides: Dict[str, object] = {}
        self.errors: Dict[str, Exception] = {}

    def _store(self, key: str, value: object) -> None:
        with self.lock:
            self.sides[key] = value

    def _fail(self, key: str, error: Exception) -> None:
        log_exception(dtgw_logger, f"Ошибка при вычислении стороны {key}", error)
        with self.lock:
            self.errors[key] = error

    def dt_worker(self) -> None:
        try:
            reduced = z_reduced_class(self.geometry, self.degree)
            self._store('dt_ratfun', reduced)
            self._store('dt', dt_in_u(reduced, self.genus_cutoff, strict=False))
        except Exception as e:
            self._fail('dt', e)

    def gw_worker(self) -> None:
        try:
            self._store('gw', zgw_reduced_class(self.geometry, self.degree, self.genus_cutoff))
        except Exception as e:
            self._fail('gw', e)

    def run(self) -> VerificationReport:
        report = VerificationReport(
            target=f"{self.geometry.name} D={self.degree} G={self.genus_cutoff}"
        )
        threads = [threading.Thread(target=self.dt_worker), threading.Thread(target=self.gw_worker)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        for key, error in sorted(self.errors.items()):
            report.notes.append(f"{key}: {type(error).__name__}: {error}")

        reduced: Optional[RatFun] = self.sides.get('dt_ratfun')
        if reduced is not None:
            report.q_inv_symmetric = rf_eq(reduced, rf_subst_inv(reduced))
            if not report.q_inv_symmetric:
                report.notes.append("Z' не инвариантна относительно q -> 1/q")

        dt: Optional[LaurentSeries] = self.sides.get('dt')
        gw: Optional[LaurentSeries] = self.sides.get('gw')
        if dt is not None and gw is not None:
            top = 2 * self.genus_cutoff - 2
            start = min(dt.lead, gw.lead, -2, top)
            for k in range(start, top + 1):
                row = ComparisonRow(k, dt.coeff(k), gw.coeff(k))
                if not row.dt.is_real or (k % 2 and row.dt):
                    report.imaginary_free = False
                report.rows.append(row)
            if not report.imaginary_free:
                report.notes.append("DT сторона содержит мнимые или нечётные по u коэффициенты")

        if self.geometry.name == 'quintic' and self.degree in (1, 2):
            report.printed_forms = [row for row in printed_display_comparison() if row["degree"] == self.degree]
            report.notes.append("printed_forms: справочное сравнение, на вердикт не влияет")

        dtgw_logger.info(f"Соответствие для {report.target}: {report.verdict}")
        return report


def correspondence_check(geometry: Geometry, degree: int, genus_cutoff: int) -> VerificationReport:
    """
    Сравнивает dt_in_u(Z'_D) и Z'_GW,D покоэффициентно от младшего полюса до u^{2G-2}.

    Args:
        geometry: Геометрия с видами кривых
        degree: Степень класса D ≥ 1
        genus_cutoff: Род G

    Returns:
        VerificationReport; сбои сторон записываются в notes, исключения не выбрасываются
    """
    return CorrespondenceChecker(geometry, degree, genus_cutoff).run()
