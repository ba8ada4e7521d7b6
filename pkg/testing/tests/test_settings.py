import os
from bstkit.core.settings import Settings


def test_bundled_problems():
    '''
    테스트: 번들 예제는 시스템 문제 디렉토리에서 찾을 수 있습니다.
    '''
    settings = Settings()
    for name in ("ex1", "ex2.bst", "ex3"):
        path = settings.find_problem_file(name, system_only=True)
        assert path is not None and os.path.exists(path)
    assert settings.find_problem_file("no-such-problem") is None


def test_resolve(tmp_path):
    settings = Settings()
    existing = tmp_path / "p.bst"
    existing.write_text("x = 0\n", encoding="utf-8")

    assert settings.resolve(str(existing)) == str(existing)
    assert settings.resolve("ex1").endswith(os.path.join("problems", "ex1.bst"))
    assert settings.resolve("nowhere/ex1") == "nowhere/ex1"


def test_user_dir_follows_xdg(tmp_path, monkeypatch):
    '''
    테스트: XDG_CONFIG_HOME 아래의 bstkit/problems가 사용자 문제 디렉토리입니다.
    '''
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
    problems = tmp_path / "bstkit" / "problems"
    problems.mkdir(parents=True)
    (problems / "mine.bst").write_text("x != 0\n", encoding="utf-8")

    settings = Settings()
    assert settings.find_problem_file("mine", user_only=True) == str(problems / "mine.bst")
    assert settings.problem_files()[0] == str(problems / "mine.bst")


def test_env_flags(monkeypatch):
    monkeypatch.setenv(Settings.DEBUG_ASSERTS_ENV, "1")
    assert Settings().debug_asserts
    for value in ("", "0", "false", "No"):
        monkeypatch.setenv(Settings.DEBUG_ASSERTS_ENV, value)
        assert not Settings().debug_asserts
