# 실행 가능한 성질 검사 모음을 돌리고 통과/실패 보고서를 출력하는 모듈입니다.

import bstkit.core.checks as checks
from bstkit.core.module import Module, Option, Kwarg
from bstkit.core.report import RunReport, OK, FAIL


class Check(Module):

    TITLE = "Check"
    COMMAND = "check"
    ORDER = 5

    NEEDS_FILES = False

    HEADER = ["CHECK"]

    CLI = [
        Option(long='n-max',
               type=int,
               kwargs={'n_max': 6},
               description='크기 한계 검사의 최대 n (기본값: 6)'),
        Option(long='samples',
               type=int,
               kwargs={'samples': 50},
               description='생성 인스턴스 검사의 표본 수 (기본값: 50)'),
        Option(long='seed',
               type=int,
               kwargs={'seed': 0},
               description='생성기 시드 (기본값: 0)'),
        Option(long='quick',
               kwargs={'grid': False},
               description='decide 전수 격자 검사를 건너뜁니다'),
    ]

    KWARGS = [
        Kwarg(name='enabled', default=False),
        Kwarg(name='n_max', default=6),
        Kwarg(name='samples', default=50),
        Kwarg(name='seed', default=0),
        Kwarg(name='grid', default=True),
    ]

    def run(self):
        self.header()

        reports = checks.run_all(n_max=self.n_max, samples=self.samples, seed=self.seed, grid=self.grid)
        for report in reports:
            self.result(description=report.summary())
            for case in report.violations[:5]:
                self.result(description="    %s" % (case,))

        failed = [r for r in reports if not r.ok]
        self.result(description="%d/%d passed" % (len(reports) - len(failed), len(reports)))

        self.report(RunReport(self.COMMAND, FAIL if failed else OK,
                              counts={'suites': len(reports), 'failed': len(failed)},
                              checks=[r.to_dict() for r in reports]))
        self.footer()

        self.exit_code = 1 if failed else 0
        return not failed
