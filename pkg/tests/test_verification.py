import pytest

from src.verification.suite import CheckResult, SuiteReport, VerificationSuite, run_verification


@pytest.fixture(scope='module')
def full_report():
    return run_verification('all')


def test_full_suite_passes(full_report):
    failing = [check.name for check in full_report.checks if not check.passed]
    failing += [report.target for report in full_report.reports if report.verdict != 'pass']
    assert failing == []
    assert full_report.verdict == 'pass'


def test_full_suite_covers_identities(full_report):
    names = [check.name for check in full_report.checks]
    for expected in ("box_counting_lemma", "pd_agreement", "pd_q_inverse_symmetry", "one_leg_vertex",
                     "cauchy_identity", "bivariate_identity", "partition_identities", "degree_zero",
                     "stratified_contribution", "multiple_cover_identity"):
        assert expected in names


def test_full_suite_reports(full_report):
    targets = [report.target for report in full_report.reports]
    assert targets == [
        "quintic D=1 G=6", "quintic D=2 G=6",
        "toy-1x1 D=1 G=6", "toy-1x1 D=2 G=6", "toy-1x1 D=3 G=6", "toy-1x1 D=4 G=6",
    ]
    assert len(full_report.informational) == 2


def test_suite_document_order(full_report):
    assert list(full_report.to_json()) == ["suite", "checks", "reports", "informational", "verdict"]


def test_quintic_suite_single_degree():
    report = run_verification('quintic', degree=1, genus_cutoff=4)
    assert [r.target for r in report.reports] == ["quintic D=1 G=4"]
    assert report.verdict == 'pass'


def test_unknown_suite():
    with pytest.raises(ValueError):
        VerificationSuite('everything')


def test_failing_check_is_recorded():
    report = SuiteReport('manual')

    def broken():
        raise ArithmeticError("boom")

    VerificationSuite._check(report, "broken", broken)
    assert report.checks == [CheckResult("broken", False, ["ArithmeticError: boom"])]
    assert report.verdict == 'fail'
