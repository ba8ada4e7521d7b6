import os
import sys

# 설치하지 않고 리포지토리에서 테스트할 때 src/를 먼저 찾도록 합니다.
_src = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, os.pardir, "src")
if os.path.isdir(os.path.join(_src, "bstkit")) and os.path.abspath(_src) not in sys.path:
    sys.path.insert(0, os.path.abspath(_src))
