# 중첩 문제 phi /\ psi를 평탄 식 Xi로 바꿔 한 줄에 연언 하나씩 출력하는 모듈입니다.

import bstkit.core.common as common
from bstkit.core.module import Module, Kwarg
from bstkit.core.syntax import Problem, parse
from bstkit.core.translate import translate, translate_size
from bstkit.core.report import RunReport, OK
from bstkit.core.exceptions import ParserException


class Translate(Module):

    TITLE = "Translate"
    COMMAND = "translate"
    ORDER = 9

    CLI = []

    KWARGS = [
        Kwarg(name='enabled', default=False),
    ]

    def run(self):
        while self.next_file():
            self.header()
            self.translate_file(self.current_target_file_name)
            self.footer()

        # 파일 하나라도 실패하면 1
        self.exit_code = 1 if self.errors else 0
        return not self.errors

    def translate_file(self, fname):
        '''
        파일 하나를 번역하고 Xi의 각 연언을 결과로 보고합니다.

        @fname - 제약 파일 경로.

        XiFormula를 반환합니다. 실패하면 None을 반환합니다.
        '''
        text = ""
        try:
            text = common.read_text(fname)
            p = parse(text)
            if not isinstance(p, Problem):
                raise ParserException("translate에는 리터럴만으로 이루어진 문제가 필요합니다 (BST+ 식은 solve --flat 사용)")
        except KeyboardInterrupt:
            raise
        except Exception as e:
            self.error(description="%s: %s" % (fname, e))
            self.report(RunReport.for_error(self.COMMAND, fname, text, e))
            return None

        xi = translate(p)
        for conjunct in xi:
            self.result(description=str(conjunct), file=fname)

        counts = {
            'vars': len(p.vars),
            'variables': len(p.variables()),
            'psi': len(p.psi),
            'xi': len(xi),
            'families': dict(xi.families),
        }
        if counts['xi'] != translate_size(counts['variables'], counts['psi']):
            common.warning("%s: Xi 크기가 예상과 다릅니다" % fname)

        self.report(RunReport(self.COMMAND, OK, file=fname, text=text, counts=counts))
        return xi
