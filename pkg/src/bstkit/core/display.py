# 결과를 화면에 출력하고 로그 파일에 기록하는 작업을 처리하는 코드.
# bstkit에서 결과를 화면에 출력하는 모든 작업은 이 클래스를 사용해야 합니다.

import sys
import json
import datetime
import bstkit.core.common


class Display(object):

    '''
    출력 및 로그 파일 기록을 처리하는 클래스.
    이 클래스는 모든 모듈에 암시적으로 인스턴스화되며, 대부분의 모듈에서 직접 호출할 필요는 없습니다.

    json=True이면 일반 텍스트 결과 대신 report()로 전달된 딕셔너리를 JSON 한 줄로 출력합니다.
    '''
    HEADER_WIDTH = 80
    DEFAULT_FORMAT = "%s\n"

    def __init__(self, quiet=False, verbose=False, log=None, json=False):
        self.quiet = quiet  # 화면 출력 억제 여부
        self.verbose = verbose  # 자세한 정보 출력 여부
        self.json = json  # JSON 출력 여부
        self.fp = None  # 로그 파일 포인터

        self.format_strings(self.DEFAULT_FORMAT, self.DEFAULT_FORMAT)

        if log:
            self.fp = open(log, "a")  # 로그 파일 열기

    def close(self):
        if self.fp:
            self.fp.close()
            self.fp = None

    def format_strings(self, header, result):
        '''
        헤더와 결과 포맷을 설정합니다.
        '''
        self.result_format = result
        self.header_format = header

    def log(self, fmt, columns):
        '''
        로그 파일에 결과를 기록합니다.
        '''
        if self.fp:
            self.fp.write(fmt % tuple(columns))
            self.fp.flush()

    def header(self, *args, **kwargs):
        '''
        출력의 헤더를 처리합니다. verbose 모드에서는 시각과 대상 파일, MD5를 함께 출력합니다.
        '''
        file_name = kwargs.get('file_name')

        if self.json:
            return

        if self.verbose and file_name:
            md5sum = bstkit.core.common.file_md5(file_name)
            timestamp = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")

            self._fprint("%s", "\n")
            self._fprint("Run Time:      %s\n", [timestamp])
            self._fprint("Target File:   %s\n", [file_name])
            self._fprint("MD5 Checksum:  %s\n", [md5sum])

        if args:
            self._fprint(self.header_format, args)
            self._fprint("%s", ["-" * self.HEADER_WIDTH + "\n"])

    def result(self, *args):
        '''
        결과를 출력합니다. JSON 모드에서는 로그 파일에만 기록합니다.
        '''
        self._fprint(self.result_format, tuple(args), stdout=not self.json)

    def report(self, record):
        '''
        JSON 모드이면 레코드를 한 줄로 출력합니다.
        '''
        if self.json:
            self._fprint("%s\n", [json.dumps(record, sort_keys=True)])

    def footer(self):
        '''
        출력의 푸터를 처리합니다.
        '''
        if not self.json and self.verbose:
            self._fprint("%s", "\n")

    def _fprint(self, fmt, columns, stdout=True):
        '''
        실제로 출력 작업을 수행하는 내부 함수입니다.
        '''
        line = fmt % tuple(columns)

        if not self.quiet and stdout:
            try:
                sys.stdout.write(line.rstrip("\n") + "\n")
                sys.stdout.flush()
            except IOError:
                pass

        self.log(fmt, columns)
