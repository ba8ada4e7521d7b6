import pytest
import bstkit.core.checks as checks
from bstkit.core.common import Report


def test_report():
    '''
    테스트: 위반이 하나라도 있으면 실패이며, 요약과 딕셔너리 형식이 일관됩니다.
    '''
    report = Report("sample", checked=3)
    assert report.ok
    assert "PASS" in report.summary()

    report.violation(("case", 1))
    assert not report.ok
    assert report.to_dict()['violations'] == ["('case', 1)"]

    other = Report("other", checked=2, violations=["x"])
    report.merge(other)
    assert report.checked == 5
    assert len(report.violations) == 2


def test_axioms_exhaustive():
    '''
    테스트: V_4 전체의 16^3 삼중쌍.
    '''
    report = checks.check_axioms_exhaustive()
    assert report.ok
    assert report.checked == 16 ** 3


def test_desugar_soundness():
    '''
    테스트: 3원소 우주에서 파생 리터럴 13종 모두, 리터럴이 성립할 때만 새 변수 값이 존재하며 그 값은 유일합니다.
    '''
    report = checks.desugar_soundness(k=3)
    assert report.ok, report.violations[:3]
    assert report.checked == 2 * 8 + 7 * 8 ** 2 + 4 * 8 ** 3


def test_membership_downgrade():
    '''
    테스트: V_3에서 멤버십은 싱글톤 증인과 포함으로 표현됩니다.
    '''
    report = checks.membership_downgrade()
    assert report.ok
    assert report.checked == 16


def test_worked_examples():
    '''
    테스트: 번들 예제 ex1, ex2는 UNSAT이고 ex3은 x = {}인 모델로 SAT입니다.
    '''
    report = checks.worked_examples()
    assert report.ok, report.violations
    assert report.checked == len(checks.WORKED_EXAMPLES)


@pytest.mark.parametrize("suite", [
    checks.flat_model_checks,
    checks.transform_checks,
    checks.pipeline_checks,
    checks.decide_agreement,
])
def test_sampled_suites(suite):
    '''
    테스트: 표본 기반 검사들은 적은 표본에서도 위반이 없습니다.
    '''
    report = suite(4, seed=1)
    assert report.ok, report.violations
    assert report.checked <= 4


def test_run_all_names():
    '''
    테스트: run_all은 모든 검사 묶음을 순서대로 실행합니다.
    '''
    reports = checks.run_all(n_max=4, samples=2, seed=0, grid=False)
    assert len(reports) == 9
    assert "decide grid" not in [r.name for r in reports]
    assert all(isinstance(r, Report) for r in reports)
    assert all(r.ok for r in reports), [r.summary() for r in reports if not r.ok]
