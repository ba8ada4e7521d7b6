# bstkit 설정(문제 파일 경로, 환경 변수 플래그)을 로드하고 접근하는 코드입니다.

import os
import bstkit.core.common as common


class Settings(object):

    '''
    bstkit 설정 클래스입니다. 사용자 및 시스템 파일 경로와 일반 구성 설정에 접근하는 데 사용됩니다.

    'user' 및 'system' 컨테이너 아래의 속성은 다음과 같습니다:

        o problems - 제약 문제(.bst) 파일 디렉토리의 경로.

    환경 변수:

        o BSTKIT_DEBUG_ASSERTS - 1이면 리프팅 루프의 반복별 단언을 켭니다.
        o BSTKIT_DEBUG         - 1이면 디버그 출력을 켭니다.
    '''
    # 서브 디렉토리들
    BSTKIT_USER_DIR = "bstkit"
    BSTKIT_PROBLEMS_DIR = "problems"

    # 문제 파일 확장자
    PROBLEM_EXTENSION = ".bst"

    DEBUG_ASSERTS_ENV = "BSTKIT_DEBUG_ASSERTS"

    def __init__(self):
        '''
        클래스 생성자입니다. 파일 경로를 열거합니다.
        '''
        # 사용자 bstkit 디렉토리의 상위 경로
        self.user_dir = self._get_user_config_dir()
        # 시스템 전역 bstkit 디렉토리(설치된 패키지)의 경로
        self.system_dir = common.get_module_path()

        self.user = common.GenericContainer(
            problems=self._user_path(self.BSTKIT_PROBLEMS_DIR))

        self.system = common.GenericContainer(
            problems=self._system_path(self.BSTKIT_PROBLEMS_DIR))

    @property
    def debug_asserts(self):
        return self.env_flag(self.DEBUG_ASSERTS_ENV)

    @staticmethod
    def env_flag(name):
        return os.getenv(name, '').strip().lower() not in ('', '0', 'false', 'no')

    def problem_files(self, system_only=False, user_only=False):
        '''
        사용자/시스템 문제 디렉토리의 .bst 파일 목록을 반환합니다. 사용자 파일이 먼저 나옵니다.
        '''
        files = []
        dirs = []

        if not system_only:
            dirs.append(self.user.problems)
        if not user_only:
            dirs.append(self.system.problems)

        for dir_path in dirs:
            if dir_path and os.path.isdir(dir_path):
                # 숨김 파일은 무시합니다.
                files += sorted(os.path.join(dir_path, x) for x in os.listdir(dir_path)
                                if not x.startswith('.') and x.endswith(self.PROBLEM_EXTENSION))

        return files

    def find_problem_file(self, fname, system_only=False, user_only=False):
        '''
        시스템 / 사용자 문제 디렉토리에서 지정된 문제 파일을 찾습니다.

        @fname       - 문제 파일 이름 (확장자 생략 가능).
        @system_only - True로 설정된 경우, 시스템 디렉토리만 검색됩니다.
        @user_only   - True로 설정된 경우, 사용자 디렉토리만 검색됩니다.

        둘 다 설정되지 않으면 사용자 디렉토리를 먼저 검색합니다.

        성공 시 파일 경로를 반환합니다. 실패 시 None을 반환합니다.
        '''
        if not fname.endswith(self.PROBLEM_EXTENSION):
            fname += self.PROBLEM_EXTENSION

        for fpath in self.problem_files(system_only=system_only, user_only=user_only):
            if os.path.basename(fpath) == fname:
                return fpath

        return None

    def resolve(self, target):
        '''
        명령줄 대상(경로 또는 번들 문제 이름)을 실제 파일 경로로 바꿉니다.
        파일이 존재하면 그대로, 아니면 문제 디렉토리에서 찾습니다.
        '''
        if os.path.exists(target):
            return target

        if os.path.sep not in target:
            found = self.find_problem_file(target)
            if found:
                common.debug("문제 '%s' -> %s" % (target, found))
                return found

        return target

    def _get_user_config_dir(self):
        '''
        사용자 설정 디렉토리의 경로를 가져옵니다.
        '''
        xdg_path = os.getenv('XDG_CONFIG_HOME')
        if xdg_path is not None:
            return xdg_path

        return os.path.join(self._get_user_dir(), '.config')

    def _get_user_dir(self):
        '''
        사용자의 홈 디렉토리를 가져옵니다.
        '''
        for envname in ['USERPROFILE', 'HOME']:
            user_dir = os.getenv(envname)
            if user_dir is not None:
                return user_dir

        return os.path.expanduser("~")

    def _user_path(self, subdir):
        '''
        사용자 bstkit 디렉토리 안의 subdir 경로를 가져옵니다.
        디렉토리를 만들지는 않습니다 (읽기 전용으로만 사용).
        '''
        return os.path.join(self.user_dir, self.BSTKIT_USER_DIR, subdir)

    def _system_path(self, subdir):
        '''
        시스템 bstkit 디렉토리 안의 subdir 경로를 가져옵니다.
        '''
        return os.path.join(self.system_dir, subdir)
