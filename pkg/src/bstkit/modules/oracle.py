# 전수 탐색 오라클로 제약 파일을 판정하는 모듈입니다.
# --flat-k K는 k원소 우주 위의 평탄 식을, --level L은 V_L 위의 중첩 문제를 탐색합니다.

import bstkit.core.hf as hf
import bstkit.core.common as common
from bstkit.core.module import Module, Option, Kwarg
from bstkit.core.syntax import parse, parse_formula, Problem
from bstkit.core.oracle import flat_sat, nested_sat
from bstkit.core.report import RunReport, batch_exit_code, SAT, UNSAT
from bstkit.core.exceptions import UsageException, ParserException


def render_bits(mask, k):
    '''
    k원소 우주의 부분집합(비트마스크)을 "{e0, e2}" 형태로 나타냅니다.
    '''
    return "{" + ", ".join("e%d" % i for i in range(k) if mask >> i & 1) + "}"


class Oracle(Module):

    TITLE = "Oracle"
    COMMAND = "oracle"
    ORDER = 7

    CLI = [
        Option(long='flat-k',
               type=int,
               kwargs={'flat_k': 0},
               description='k원소 우주 위에서 평탄 식을 전수 탐색'),
        Option(long='level',
               type=int,
               kwargs={'level': 0},
               description='V_L의 집합들로 사용자 변수를 전수 탐색 (L <= %d)' % hf.LEVEL_LIMIT),
    ]

    KWARGS = [
        Kwarg(name='enabled', default=False),
        Kwarg(name='flat_k', default=0),
        Kwarg(name='level', default=0),
    ]

    def init(self):
        if bool(self.flat_k) == bool(self.level):
            raise UsageException("oracle에는 --flat-k와 --level 중 정확히 하나가 필요합니다")
        if self.flat_k < 0 or self.level < 0:
            raise UsageException("--flat-k와 --level은 양수여야 합니다")

    def run(self):
        while self.next_file():
            self.header()
            self.check_file(self.current_target_file_name)
            self.footer()

        self.exit_code = batch_exit_code(self.reports)
        return not self.errors

    def check_file(self, fname):
        text = ""
        try:
            text = common.read_text(fname)
            if self.flat_k:
                f = parse_formula(text)
                outcome = flat_sat(f, self.flat_k)
                lines = ["%s = %s" % (v, render_bits(outcome.witness[v], self.flat_k))
                         for v in sorted(outcome.witness, key=str)] if outcome.sat else []
            else:
                p = parse(text)
                if not isinstance(p, Problem):
                    raise ParserException("--level에는 리터럴만으로 이루어진 문제가 필요합니다")
                outcome = nested_sat(p, self.level)
                lines = outcome.witness.render(p.vars) if outcome.sat else []
        except KeyboardInterrupt:
            raise
        except Exception as e:
            self.error(description="%s: %s" % (fname, e))
            self.report(RunReport.for_error(self.COMMAND, fname, text, e))
            return None

        self.result(description=str(outcome), file=fname)
        for line in lines:
            self.result(description=line, file=fname)

        counts = {'checked': outcome.checked}
        if self.flat_k:
            counts['k'] = self.flat_k
            model = dict((str(v), render_bits(s, self.flat_k)) for (v, s) in outcome.witness.items()) if outcome.sat else None
        else:
            counts['level'] = self.level
            model = outcome.witness.restrict(p.vars).to_dict() if outcome.sat else None

        self.report(RunReport(self.COMMAND, SAT if outcome.sat else UNSAT, file=fname, text=text,
                              model=model, counts=counts))
        return outcome
