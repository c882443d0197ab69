from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from src.core.config import (
    BIVARIATE_Q_ORDER, BIVARIATE_V_ORDER, CAUCHY_Q_ORDER, CAUCHY_V_ORDER, DEFAULT_GENUS_CUTOFF,
    DEGREE_ZERO_CHIS, DEGREE_ZERO_ORDER, IDENTITY_MAX_SIZE, LEMMA_MAX_D, LEMMA_MAX_N, PD_MAX_D,
    PD_ORDER, TOY_MAX_DEGREE, VERTEX_MAX_SHAPE, VERTEX_ORDER
)
from src.core.logger import log_exception, verify_logger
from src.dtgw.correspondence import (
    VerificationReport, correspondence_check, multiple_cover_identity_check, printed_display_comparison
)
from src.dtgw.donaldson_thomas import (
    z_contribution, z_contribution_by_strata, z_degree_zero, z_degree_zero_via_log, z_reduced_class
)
from src.dtgw.geometry import Geometry, MultiplicityVector, quintic_preset, toy_preset
from src.partitions.partitions import (
    EMPTY, b2, enumerate_partitions, hook_lengths, leg_weight, size, transpose
)
from src.ratfun.ratfun import rf_eq, rf_expand, rf_subst_inv
from src.schur.schur import cauchy_check, pd_schur, schur_principal_rat, schur_transpose_check
from src.series.series import TruncSeries
from src.vertex.asymptotic import enumerate_app
from src.vertex.box_count import bivariate_check, p_gf, p_table, pd_product, vertex_one_leg_check

SUITES = ('quintic', 'toy', 'all')


@dataclass
class CheckResult:
    """Результат одной тождественной проверки."""
    name: str
    passed: bool
    details: List[str] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {"name": self.name, "passed": self.passed, "details": list(self.details)}


@dataclass
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    reports: List[VerificationReport] = field(default_factory=list)
    informational: List[Dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        passed = all(check.passed for check in self.checks) and \
            all(report.verdict == 'pass' for report in self.reports)
        return 'pass' if passed else 'fail'

    def to_json(self) -> Dict:
        return {
            "suite": self.suite,
            "checks": [check.to_json() for check in self.checks],
            "reports": [report.to_json() for report in self.reports],
            "informational": self.informational,
            "verdict": self.verdict,
        }


class VerificationSuite:
    """
    Набор проверок: соответствие DT/GW и комбинаторные тождества.

    quintic: соответствие для квинтики; toy: для одной кривой;
    all: всё вместе с тождествами для разбиений, рядов и перечислений.
    """

    def __init__(self, suite: str, degree: Optional[int] = None,
                 genus_cutoff: int = DEFAULT_GENUS_CUTOFF):
        if suite not in SUITES:
            raise ValueError(f"Неизвестный набор проверок: {suite}. Ожидалось одно из {SUITES}")
        self.suite = suite
        self.degree = degree
        self.genus_cutoff = genus_cutoff

    def run(self) -> SuiteReport:
        report = SuiteReport(self.suite)
        verify_logger.info(f"Запуск набора проверок '{self.suite}'")

        if self.suite in ('quintic', 'all'):
            self._run_correspondence(report, quintic_preset(), self._degrees((1, 2)))
            report.informational = printed_display_comparison()
        if self.suite in ('toy', 'all'):
            self._run_correspondence(report, toy_preset(), self._degrees(range(1, TOY_MAX_DEGREE + 1)))
            self._check(report, "multiple_cover_identity", self._multiple_cover_identity)
        if self.suite == 'all':
            for name, check in self._identity_checks():
                self._check(report, name, check)

        verify_logger.info(f"Набор '{self.suite}' завершён: {report.verdict}")
        return report

    def _degrees(self, default) -> Tuple[int, ...]:
        return (self.degree,) if self.degree is not None else tuple(default)

    def _run_correspondence(self, report: SuiteReport, geometry: Geometry, degrees: Tuple[int, ...]) -> None:
        for degree in degrees:
            report.reports.append(correspondence_check(geometry, degree, self.genus_cutoff))
            self._check(report, f"q_inverse_symmetry[{geometry.name} D={degree}]",
                        lambda: self._symmetric(z_reduced_class(geometry, degree)))

    @staticmethod
    def _check(report: SuiteReport, name: str, check: Callable[[], Tuple[bool, List[str]]]) -> None:
        try:
            passed, details = check()
        except Exception as e:
            log_exception(verify_logger, f"Проверка {name} завершилась ошибкой", e)
            passed, details = False, [f"{type(e).__name__}: {e}"]
        if not passed:
            verify_logger.warning(f"Проверка {name} не пройдена")
        report.checks.append(CheckResult(name, passed, details))

    @staticmethod
    def _symmetric(f) -> Tuple[bool, List[str]]:
        return rf_eq(f, rf_subst_inv(f)), []

    def _identity_checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, List[str]]]]]:
        return [
            ("box_counting_lemma", self._box_counting_lemma),
            ("pd_agreement", self._pd_agreement),
            ("pd_q_inverse_symmetry", self._pd_symmetry),
            ("one_leg_vertex", self._one_leg_vertex),
            ("cauchy_identity", lambda: (cauchy_check(CAUCHY_Q_ORDER, CAUCHY_V_ORDER), [])),
            ("bivariate_identity", lambda: (bivariate_check(BIVARIATE_Q_ORDER, BIVARIATE_V_ORDER), [])),
            ("partition_identities", self._partition_identities),
            ("degree_zero", self._degree_zero),
            ("stratified_contribution", self._stratified_contribution),
        ]

    @staticmethod
    def _box_counting_lemma() -> Tuple[bool, List[str]]:
        table = p_table(LEMMA_MAX_N, LEMMA_MAX_D)
        mismatches = []
        for d in range(LEMMA_MAX_D + 1):
            series = p_gf(d, LEMMA_MAX_N)
            for n in range(LEMMA_MAX_N + 1):
                if series.coeff(n) != table[(n, d)].count:
                    mismatches.append(f"p({n},{d})")
        return not mismatches, mismatches

    @staticmethod
    def _pd_agreement() -> Tuple[bool, List[str]]:
        mismatches = []
        for d in range(PD_MAX_D + 1):
            product = pd_product(d, PD_ORDER)
            closed_form = rf_expand(pd_schur(d), PD_ORDER)
            schur_sum = TruncSeries.constant('q', 0, PD_ORDER)
            for partition in enumerate_partitions(d):
                schur_sum = schur_sum + rf_expand(schur_principal_rat(partition), PD_ORDER) * \
                    rf_expand(schur_principal_rat(transpose(partition)), PD_ORDER)
            schur_sum = TruncSeries('q', [0] * d + list(schur_sum.coeffs), trunc=PD_ORDER)
            if not (product.agrees_with(closed_form) and product.agrees_with(schur_sum)):
                mismatches.append(f"P_{d}")
        return not mismatches, mismatches

    @staticmethod
    def _pd_symmetry() -> Tuple[bool, List[str]]:
        failed = [f"P_{d}" for d in range(PD_MAX_D + 1) if not rf_eq(pd_schur(d), rf_subst_inv(pd_schur(d)))]
        return not failed, failed

    @staticmethod
    def _one_leg_vertex() -> Tuple[bool, List[str]]:
        failed = []
        for d in range(VERTEX_MAX_SHAPE + 1):
            for shape in enumerate_partitions(d):
                if not vertex_one_leg_check(shape, VERTEX_ORDER):
                    failed.append(str(shape))
        return not failed, failed

    @staticmethod
    def _partition_identities() -> Tuple[bool, List[str]]:
        failed = []
        for d in range(IDENTITY_MAX_SIZE + 1):
            for shape in enumerate_partitions(d):
                expected = size(shape) + b2(shape) + b2(transpose(shape))
                if leg_weight(shape) != expected or sum(hook_lengths(shape)) != expected \
                        or not schur_transpose_check(shape):
                    failed.append(str(shape))
        return not failed, failed

    @staticmethod
    def _degree_zero() -> Tuple[bool, List[str]]:
        failed = []
        for chi in DEGREE_ZERO_CHIS:
            if not z_degree_zero(chi, DEGREE_ZERO_ORDER).agrees_with(z_degree_zero_via_log(chi, DEGREE_ZERO_ORDER)):
                failed.append(f"chi={chi}")
        order = LEMMA_MAX_N
        alternating = TruncSeries('q', [(-1) ** m * enumerate_app(EMPTY, m) for m in range(order + 1)], trunc=order)
        if not z_degree_zero(1, order).agrees_with(alternating):
            failed.append("chi=1 plane partitions")
        return not failed, failed

    @staticmethod
    def _stratified_contribution() -> Tuple[bool, List[str]]:
        failed = []
        order = VERTEX_ORDER
        for chi, dvec in ((0, (1,)), (0, (2,)), (3, (1, 1)), (-2, (1, 2))):
            multiplicities = MultiplicityVector(dvec)
            if not z_contribution(chi, multiplicities, order).agrees_with(
                    z_contribution_by_strata(chi, multiplicities, order)):
                failed.append(f"chi={chi}, d={dvec}")
        return not failed, failed

    @staticmethod
    def _multiple_cover_identity() -> Tuple[bool, List[str]]:
        failed = [f"d={d}" for d in range(1, TOY_MAX_DEGREE + 1) if not multiple_cover_identity_check(d, 8)]
        return not failed, failed


def run_verification(suite: str, degree: Optional[int] = None,
                     genus_cutoff: int = DEFAULT_GENUS_CUTOFF) -> SuiteReport:
    return VerificationSuite(suite, degree, genus_cutoff).run()
