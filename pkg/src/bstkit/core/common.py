# bstkit 코드 전반에서 사용되는 공통 함수들입니다.

import os
import sys
import time
import hashlib

# __debug__ 값은 기본적으로 True이지만, 인터프리터가 -O 옵션과 함께 실행되면 False가 됩니다.
# BSTKIT_DEBUG=1 환경 변수로도 디버그 출력을 켤 수 있습니다.
if not __debug__ or os.getenv('BSTKIT_DEBUG', '') not in ('', '0'):
    DEBUG = True
else:
    DEBUG = False

def debug(msg):
    '''
    디버그 모드에서만 stderr로 디버그 메시지를 출력합니다.
    '''
    if DEBUG:
        sys.stderr.write("DEBUG: " + msg + "\n")
        sys.stderr.flush()

def warning(msg):
    '''
    stderr로 경고 메시지를 출력합니다.
    '''
    sys.stderr.write("\nWARNING: " + msg + "\n")

def error(msg):
    '''
    stderr로 오류 메시지를 출력합니다.
    '''
    sys.stderr.write("\nERROR: " + msg + "\n")

def critical(msg):
    '''
    stderr로 치명적인 오류 메시지를 출력합니다.
    '''
    sys.stderr.write("\nCRITICAL: " + msg + "\n")

def get_module_path():
    # bstkit 패키지 디렉토리의 경로를 반환합니다.
    root = __file__
    if os.path.islink(root):
        root = os.path.realpath(root)
    return os.path.dirname(os.path.dirname(os.path.abspath(root)))

def text_md5(text):
    '''
    문자열의 MD5 해시를 생성합니다. 실행 보고서의 입력 다이제스트로 사용됩니다.

    @text - 해시할 문자열(또는 bytes).

    MD5 해시 문자열을 반환합니다.
    '''
    if not isinstance(text, bytes):
        text = text.encode('utf-8')
    return hashlib.md5(text).hexdigest()

def file_md5(file_name):
    '''
    지정된 파일의 MD5 해시를 생성합니다.
    '''
    md5 = hashlib.md5()

    with open(file_name, 'rb') as f:
        for chunk in iter(lambda: f.read(128 * md5.block_size), b''):
            md5.update(chunk)

    return md5.hexdigest()

def read_text(file_name):
    '''
    제약 파일을 UTF-8 텍스트로 읽습니다.
    '''
    with open(file_name, 'r', encoding='utf-8') as fp:
        return fp.read()

class GenericContainer(object):

    def __init__(self, **kwargs):
        # 전달된 키워드 인자들을 속성으로 설정
        for (k, v) in kwargs.items():
            setattr(self, k, v)

class Report(object):
    '''
    검사 결과 보고서. 검사한 경우의 수와 위반 목록을 담습니다.
    '''

    def __init__(self, name, checked=0, violations=None, details=None):
        self.name = name
        self.checked = checked
        self.violations = violations if violations is not None else []
        self.details = details if details is not None else {}

    @property
    def ok(self):
        return not self.violations

    def violation(self, case):
        self.violations.append(case)

    def merge(self, other):
        self.checked += other.checked
        self.violations += other.violations
        return self

    def summary(self):
        status = "PASS" if self.ok else "FAIL"
        return "%-28s %s  (%d checked, %d violations)" % (self.name, status, self.checked, len(self.violations))

    def to_dict(self):
        return {
            'name': self.name,
            'ok': self.ok,
            'checked': self.checked,
            'violations': [str(v) for v in self.violations[:20]],
            'details': dict((k, str(v)) for (k, v) in self.details.items()),
        }

    def __repr__(self):
        return "<Report %s>" % self.summary()


class StageTimer(object):
    '''
    파이프라인 단계별 소요 시간을 기록합니다.

        timer = StageTimer()
        with timer('translate'):
            ...
    '''

    def __init__(self):
        self.timing = {}
        self._stage = None
        self._start = None

    def __call__(self, stage):
        self._stage = stage
        return self

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, t, v, b):
        elapsed = time.perf_counter() - self._start
        self.timing[self._stage] = self.timing.get(self._stage, 0.0) + elapsed
        debug("%s: %.6fs" % (self._stage, elapsed))
        return None
