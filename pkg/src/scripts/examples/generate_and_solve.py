#!/usr/bin/env python3
# 심은 모델이 있는 문제를 여러 개 만들고 파이프라인으로 다시 판정합니다.

import sys
from bstkit.core.oracle import generate
from bstkit.core.models import solve_nested, extend

profile = sys.argv[1] if len(sys.argv) > 1 else "planted:vars=4,diff=3,singletons=2"

for seed in range(10):
    p = generate(seed, profile)
    result = solve_nested(p)
    print ("seed %d: %s  ->  %s" % (seed, p, result))
    if result.sat:
        # 찾은 모델을 틸드 변수까지 확장해 Xi를 만족하는지 확인합니다.
        extend(result.model.restrict(p.vars), p, result.xi)
        for line in result.model.render(p.vars):
            print ("    " + line)
