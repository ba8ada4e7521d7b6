try:
    # Python 3.8 이상에서는 importlib.metadata로 설치된 패키지 버전을 가져옵니다.
    from importlib import metadata
    get_version = lambda: metadata.version("bstkit")
except ImportError:
    import importlib_metadata as metadata
    get_version = lambda: metadata.version("bstkit")

try:
    __version__ = get_version()
except Exception:
    # 설치하지 않고 소스 트리에서 실행하는 경우
    __version__ = "0.1.0"
