# 모든 하위 명령에 공통인 입력 옵션(출력 형식, 로그 파일, 대상 파일 등)을 처리하는 모듈입니다.

import os
import sys
import bstkit.core.common
import bstkit.core.display
import bstkit.core.settings
from bstkit.core.module import Module, Option, Kwarg, Positional, show_help
from bstkit.core.exceptions import UsageException


class General(Module):

    TITLE = "General"  # 모듈의 제목
    ORDER = 0  # 도움말 출력 순서

    DEFAULT_DEPENDS = []

    # 명령줄 인터페이스 옵션 설정
    CLI = [
        Option(long='json',
               short='j',
               kwargs={'json': True},
               description='결과를 JSON 실행 보고서(스키마 버전 1)로 출력'),
        Option(long='log',
               short='f',
               type=str,
               kwargs={'log_file': None},
               description='결과를 파일에 기록'),
        Option(long='quiet',
               short='q',
               kwargs={'quiet': True},
               description='stdout으로의 출력 억제'),
        Option(long='verbose',
               short='v',
               kwargs={'verbose': True},
               description='자세한 출력 활성화'),
        Option(long='jobs',
               short='J',
               type=int,
               kwargs={'jobs': 1},
               description='여러 파일을 병렬로 처리할 프로세스 수'),
        Option(short='h',
               long='help',
               kwargs={'show_help': True},
               description='도움말 출력'),
        Option(type=Positional,
               kwargs={'files': []}),
    ]

    # 클래스 초기화 시 사용할 기본 값들
    KWARGS = [
        Kwarg(name='json', default=False),
        Kwarg(name='log_file', default=None),
        Kwarg(name='quiet', default=False),
        Kwarg(name='verbose', default=False),
        Kwarg(name='jobs', default=1),
        Kwarg(name='files', default=[]),
        Kwarg(name='show_help', default=False),
    ]

    PRIMARY = False

    def load(self):
        self.target_files = []

        if self.jobs < 1:
            raise UsageException("--jobs는 1 이상이어야 합니다: %d" % self.jobs)

        # 설정 객체는 대상 파일 해석보다 먼저 만들어야 합니다.
        self.settings = bstkit.core.settings.Settings()
        self._resolve_target_files()
        self._set_verbosity()

        self.display = bstkit.core.display.Display(log=self.log_file,
                                                   quiet=self.quiet,
                                                   verbose=self.verbose,
                                                   json=self.json)

        # 도움말 표시 및 프로그램 종료
        if self.show_help:
            show_help()
            sys.exit(0)

    def reset(self):
        pass

    def _set_verbosity(self):
        '''
        두 개 이상의 대상 파일이 지정되면 파일별 헤더를 보이도록 자세한 출력을 켭니다.
        self._resolve_target_files 이후에 호출되어야 합니다.
        '''
        if len(self.target_files) > 1 and not self.verbose:
            self.verbose = True

    def _resolve_target_files(self):
        '''
        명령줄 대상을 파일 경로로 바꿉니다. 번들 문제 이름(ex1 등)은 문제 디렉토리에서 찾습니다.
        디렉토리는 무시하며, 존재하지 않는 파일은 그대로 남겨 하위 명령이 파일 단위 오류로 보고하게 합니다.
        '''
        for tfile in self.files:
            path = self.settings.resolve(tfile)
            if os.path.isdir(path):
                bstkit.core.common.warning("디렉토리 %s를 건너뜁니다" % path)
                continue
            self.target_files.append(path)
