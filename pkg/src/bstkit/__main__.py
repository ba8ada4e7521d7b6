import os
import sys

# 커스텀 프리픽스 디렉토리에 설치된 경우, bstkit가 기본 모듈 검색 경로에 없을 수 있습니다.
# 프리픽스 모듈 경로를 찾아서 sys.path의 첫 번째 항목으로 추가하려고 시도합니다.
_parent_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
for _module_path in [
    # 리포지토리에서: src/bstkit/ -> src/로 이동
    _parent_dir,
    # 빌드 디렉토리에서: build/scripts-3.x/ -> build/lib/로 이동
    os.path.join(_parent_dir, "lib"),
    # 기본 경로가 아닌 위치에 설치된 경우: bin/ -> lib/python3.x/site-packages/로 이동
    os.path.join(_parent_dir,
                 "lib",
                 "python%d.%d" % (sys.version_info[0], sys.version_info[1]),
                 "site-packages")
]:
    if os.path.exists(_module_path) and _module_path not in sys.path:
        sys.path = [_module_path] + sys.path

import bstkit
import bstkit.modules

# 종료 코드
EXIT_ERROR = 1
EXIT_USAGE = 2


def exit_code(objs):
    '''
    실행된 주 모듈들로부터 프로세스 종료 코드를 정합니다.
    모듈이 오류를 기록했는데 성공 코드를 남겼다면 1로 바꿉니다.
    '''
    code = 0
    for obj in objs:
        if obj.errors and obj.exit_code in (0, 10, 20) and not obj.reports:
            return EXIT_ERROR
        code = obj.exit_code or code
    return code


def runme(argv=None):
    '''
    명령줄을 실행하고 종료 코드를 반환합니다.

    @argv - 프로그램 이름을 뺀 인자 목록 (생략 시 sys.argv[1:]).
    '''
    if argv is None:
        argv = sys.argv[1:]

    with bstkit.Modules(*argv) as modules:
        if not argv:
            # 명령줄 인수가 제공되지 않은 경우, 도움말 메시지를 출력합니다.
            sys.stderr.write(modules.help())
            return EXIT_USAGE

        try:
            objs = modules.execute()
        except bstkit.UsageException as e:
            sys.stderr.write("사용법 오류: %s\n" % e)
            sys.stderr.write("'bstkit --help'로 도움말을 볼 수 있습니다.\n")
            return EXIT_USAGE
        except bstkit.ModuleException as e:
            sys.stderr.write("오류: %s\n" % e)
            return EXIT_ERROR

        if modules.command is None:
            sys.stderr.write("하위 명령이 필요합니다: %s\n" % ", ".join(modules.commands()))
            return EXIT_USAGE

        return exit_code(objs)


def main():
    code = EXIT_ERROR
    try:
        # 코드를 프로파일링하는 특수 옵션입니다. 디버그 용도로만 사용됩니다.
        if '--profile' in sys.argv:
            import cProfile
            sys.argv.pop(sys.argv.index('--profile'))
            profiler = cProfile.Profile()
            code = profiler.runcall(runme)
            profiler.print_stats(sort='cumulative')
        else:
            code = runme()
    except IOError:
        pass
    except KeyboardInterrupt:
        sys.stdout.write("\n")
    sys.exit(code)


if __name__ == "__main__":
    main()
