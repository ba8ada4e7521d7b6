# 재현 가능한 임의 제약 문제를 생성해 출력하는 모듈입니다.

from bstkit.core.module import Module, Option, Kwarg
from bstkit.core.oracle import Profile, generate
from bstkit.core.report import RunReport, OK


class Generate(Module):

    TITLE = "Generate"
    COMMAND = "gen"
    ORDER = 6

    NEEDS_FILES = False

    CLI = [
        Option(long='seed',
               type=int,
               kwargs={'seed': 0},
               description='생성기 시드 (기본값: 0)'),
        Option(long='profile',
               type=str,
               kwargs={'profile': 'planted'},
               description='생성 프로필, 예: planted:vars=3,diff=2,singletons=1 (%s)' % ", ".join(sorted(Profile.DEFAULTS))),
    ]

    KWARGS = [
        Kwarg(name='enabled', default=False),
        Kwarg(name='seed', default=0),
        Kwarg(name='profile', default='planted'),
    ]

    def init(self):
        # 잘못된 프로필은 UsageException으로 이어집니다.
        self.profile = Profile.parse(self.profile)

    def run(self):
        p = generate(self.seed, self.profile)
        text = "\n".join(str(lit) for lit in p.literals)

        self.header()
        for line in text.splitlines():
            self.result(description=line)

        # 심은 모델은 주석으로 남겨 출력을 그대로 다시 읽을 수 있게 합니다.
        if p.certificate is not None:
            for line in p.certificate.render():
                self.result(description="# " + line)

        model = p.certificate.to_dict() if p.certificate is not None else None
        counts = {'vars': len(p.vars), 'atoms': len(p.literals), 'psi': len(p.psi), 'seed': self.seed}
        self.report(RunReport(self.COMMAND, OK, text=text, model=model, counts=counts,
                              message=str(self.profile)))
        self.footer()

        self.exit_code = 0
        return True
