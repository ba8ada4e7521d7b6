# 하위 명령 하나의 실행 결과를 기계가 읽을 수 있는 형태로 담는 RunReport입니다.
# --json 모드에서 Display.report()가 한 줄짜리 JSON으로 출력합니다.

import bstkit.core.common as common
from bstkit.core.translate import translate_size

# 스키마가 바뀌면 올립니다.
SCHEMA_VERSION = 1

SAT = "SAT"
UNSAT = "UNSAT"
OK = "OK"
FAIL = "FAIL"
ERROR = "ERROR"


class RunReport(object):
    '''
    실행 보고서.

        command - 하위 명령 ('solve', 'translate', ...)
        file    - 대상 파일 경로 (없으면 None)
        digest  - 입력 텍스트의 MD5
        verdict - SAT, UNSAT, OK, FAIL, ERROR 중 하나
        model   - 변수 -> 중괄호 표기 문자열 (선택)
        timing  - 단계 -> 초
        counts  - vars, atoms, xi, cnf_vars, cnf_clauses 등
        steps   - 리프팅 단계 기록 (--trace)
        checks  - check 명령의 Report 딕셔너리 목록
    '''

    def __init__(self, command, verdict, file=None, text="", model=None, timing=None, counts=None,
                 steps=None, checks=None, message=None):
        self.command = command
        self.verdict = verdict
        self.file = file
        self.digest = common.text_md5(text)
        self.model = model
        self.timing = dict(timing or {})
        self.counts = dict(counts or {})
        self.steps = list(steps or [])
        self.checks = list(checks or [])
        self.message = message

    @classmethod
    def for_nested(cls, command, file, text, problem, result):
        '''
        solve_nested()의 NestedResult로부터 보고서를 만듭니다.
        '''
        counts = dict(result.counts)
        expected = translate_size(counts['variables'], counts['psi'])
        if counts['xi'] != expected:
            common.warning("Xi 연언 수 %d이(가) 예상 값 %d과(와) 다릅니다" % (counts['xi'], expected))

        model = None
        if result.model is not None:
            model = result.model.restrict(problem.vars).to_dict()

        return cls(command, SAT if result.sat else UNSAT, file=file, text=text, model=model,
                   timing=result.timing, counts=counts, steps=[s.to_dict() for s in result.steps])

    @classmethod
    def for_error(cls, command, file, text, exception):
        return cls(command, ERROR, file=file, text=text, message=str(exception))

    @property
    def exit_code(self):
        return {SAT: 10, UNSAT: 20, OK: 0}.get(self.verdict, 1)

    def to_dict(self):
        record = {
            'schema': SCHEMA_VERSION,
            'command': self.command,
            'file': self.file,
            'digest': self.digest,
            'verdict': self.verdict,
            'timing': dict((k, round(v, 6)) for (k, v) in self.timing.items()),
            'counts': self.counts,
        }

        if self.model is not None:
            record['model'] = self.model
        if self.steps:
            record['steps'] = self.steps
        if self.checks:
            record['checks'] = self.checks
        if self.message:
            record['message'] = self.message

        return record

    def __str__(self):
        return "%s %s: %s" % (self.command, self.file or "-", self.verdict)


def batch_exit_code(reports):
    '''
    여러 파일의 종료 코드: 하나라도 실패하면 1, 아니면 UNSAT이 있으면 20, 아니면 10.
    '''
    codes = [r.exit_code for r in reports]
    if not codes:
        return 0
    if any(c not in (0, 10, 20) for c in codes):
        return 1
    if 20 in codes:
        return 20
    return max(codes)
