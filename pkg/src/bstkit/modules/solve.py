# 제약 파일의 만족 가능성을 판정하고, SAT이면 HF 모델을 출력하는 모듈입니다.
# 종료 코드는 SAT 솔버 관례를 따릅니다: 10 = SAT, 20 = UNSAT.

import os
import functools
import multiprocessing
import bstkit.core.common as common
from bstkit.core.module import Module, Option, Kwarg
from bstkit.core.syntax import Problem, parse, parse_formula
from bstkit.core.models import solve_nested, solve_flat
from bstkit.core.report import RunReport, batch_exit_code, SAT, UNSAT


def _cnf_path(dump_cnf, fname, many):
    # 파일이 여러 개이면 대상 파일 이름을 덧붙여 서로 덮어쓰지 않게 합니다.
    if not dump_cnf or not many:
        return dump_cnf
    stem = os.path.splitext(os.path.basename(fname))[0]
    return "%s.%s" % (dump_cnf, stem)


def solve_file(fname, flat=False, dump_cnf=None, trace=False, activity=False, polarity=True):
    '''
    파일 하나를 판정합니다. 프로세스 풀에서도 호출되므로 모듈 수준 함수입니다.

    @fname    - 제약 파일 경로.
    @flat     - True이면 파일을 BST+ 식으로 읽고 평탄 모델만 만듭니다.
    @dump_cnf - DIMACS CNF를 쓸 경로.
    @trace    - 리프팅 단계 기록 여부.
    @activity - VSIDS 분기 사용 여부.
    @polarity - False이면 전체 인코딩을 사용합니다.

    (RunReport, 출력 줄 목록) 튜플을 반환합니다. 오류는 verdict ERROR인 보고서로 돌려줍니다.
    '''
    text = ""
    lines = []

    try:
        text = common.read_text(fname)
        parsed = parse_formula(text) if flat else parse(text)

        if not isinstance(parsed, Problem):
            # 결합자가 있는 파일과 --flat으로 읽은 파일은 BST+ 식입니다.
            f = parsed
            result = solve_flat(f, activity=activity, polarity=polarity, dump_cnf=dump_cnf)
            model = result.model.to_dict() if result.sat else None
            report = RunReport('solve', SAT if result.sat else UNSAT, file=fname, text=text, model=model,
                               timing=result.timing, counts=result.counts)
            if result.sat:
                lines = ["SAT"] + result.model.render()
            else:
                lines = ["UNSAT"]
        else:
            result = solve_nested(parsed, activity=activity, trace=trace, polarity=polarity, dump_cnf=dump_cnf)
            report = RunReport.for_nested('solve', fname, text, parsed, result)
            for step in result.steps:
                lines += step.render()
            if result.sat:
                lines += ["SAT"] + result.model.render(parsed.vars)
            else:
                lines += ["UNSAT"]
    except KeyboardInterrupt:
        raise
    except Exception as e:
        common.debug("solve_file(%s): %s: %s" % (fname, e.__class__.__name__, e))
        report = RunReport.for_error('solve', fname, text, e)

    return (report, lines)


class Solve(Module):

    TITLE = "Solve"
    COMMAND = "solve"
    ORDER = 8

    CLI = [
        Option(long='flat',
               kwargs={'flat': True},
               description='입력을 BST+ 식으로 읽고 평탄 모델을 생성'),
        Option(long='dump-cnf',
               type=str,
               kwargs={'dump_cnf': None},
               description='SAT 인코딩을 DIMACS CNF로 파일에 기록'),
        Option(long='trace',
               kwargs={'trace': True},
               description='리프팅 각 단계의 원자와 할당을 출력'),
        Option(long='activity',
               kwargs={'activity': True},
               description='VSIDS 활동도 기반 분기 사용'),
        Option(long='full-encoding',
               kwargs={'polarity': False},
               description='극성 최적화 없이 모든 원자에 대해 증인 원소와 절을 생성'),
    ]

    KWARGS = [
        Kwarg(name='enabled', default=False),
        Kwarg(name='flat', default=False),
        Kwarg(name='dump_cnf', default=None),
        Kwarg(name='trace', default=False),
        Kwarg(name='activity', default=False),
        Kwarg(name='polarity', default=True),
    ]

    def _worker(self, many):
        return functools.partial(_solve_job, flat=self.flat, dump_cnf=self.dump_cnf, trace=self.trace,
                                 activity=self.activity, polarity=self.polarity, many=many)

    def run(self):
        files = []
        while self.next_file():
            files.append(self.current_target_file_name)

        worker = self._worker(len(files) > 1)

        if self.config.jobs > 1 and len(files) > 1:
            pool = multiprocessing.Pool(processes=min(self.config.jobs, len(files)))
            try:
                outcomes = pool.map(worker, files)
            finally:
                pool.close()
                pool.join()
        else:
            outcomes = map(worker, files)

        # 출력 순서는 입력 파일 순서를 따릅니다.
        for (fname, (report, lines)) in zip(files, outcomes):
            self.current_target_file_name = fname
            self.header()
            for line in lines:
                self.result(description=line, file=fname, verdict=report.verdict)
            if report.message:
                self.error(description="%s: %s" % (fname, report.message))
            self.report(report)
            self.footer()

        self.exit_code = batch_exit_code(self.reports)
        return not self.errors


def _solve_job(fname, many=False, dump_cnf=None, **kwargs):
    return solve_file(fname, dump_cnf=_cnf_path(dump_cnf, fname, many), **kwargs)
