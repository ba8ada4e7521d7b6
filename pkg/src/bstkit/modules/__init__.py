# 하위 명령 모듈들. Modules.list()는 이 패키지에서 Module 하위 클래스를 찾습니다.
from bstkit.modules.general import General        # 공통 옵션 모듈
from bstkit.modules.translate import Translate    # Xi 번역
from bstkit.modules.solve import Solve            # 판정 및 모델 생성
from bstkit.modules.oracle import Oracle          # 전수 탐색 오라클
from bstkit.modules.generate import Generate      # 문제 생성기
from bstkit.modules.check import Check            # 성질 검사 모음
