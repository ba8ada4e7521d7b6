#!/usr/bin/env python3

import sys
import bstkit

try:
    # 명령줄에서 지정된 파일(또는 번들 문제 이름)을 판정하고,
    # 일반적인 bstkit 출력을 억제합니다.
    for module in bstkit.scan('solve', *sys.argv[1:], quiet=True):
        print ("%s 결과:" % module.name)

        for report in module.reports:
            print ("\t%s    %s" % (report.file, report.verdict))
            for (var, value) in sorted((report.model or {}).items()):
                print ("\t    %s = %s" % (var, value))
except bstkit.ModuleException as e:
    sys.stderr.write("%s\n" % e)
