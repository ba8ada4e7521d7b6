#!/usr/bin/env python
# 주어진 입력 벡터 파일에 대한 bstkit 회귀 테스트 스크립트를 자동으로 생성합니다.
# 생성된 테스트 스크립트는 tests 디렉토리에 작성되며,
# 입력 벡터 파일은 tests/input-vectors/ 디렉토리에 위치해야 합니다.

import os
import sys
import bstkit

# 테스트 스크립트의 템플릿
test_script_template = """
import os
import bstkit


def test_%s():
    '''
    Test: Open %s, translate and solve
    verify the verdict and the size of each Xi family
    '''
    expected_verdict = '%s'
    expected_families = %s

    input_vector_file = os.path.join(os.path.dirname(__file__),
                                     "input-vectors",
                                     "%s")

    translate_result = bstkit.scan('translate', input_vector_file, quiet=True)
    solve_result = bstkit.scan('solve', input_vector_file, quiet=True)

    # Test number of modules used
    assert len(translate_result) == 1
    assert len(solve_result) == 1

    # Test Xi families
    counts = translate_result[0].reports[0].counts
    assert counts['families'] == expected_families
    assert len(translate_result[0].results) == sum(expected_families.values())

    # Test verdict
    assert solve_result[0].reports[0].verdict == expected_verdict
    assert solve_result[0].results[0].description == expected_verdict
"""

# 입력 벡터 파일의 경로를 명령줄 인자로부터 가져옴
try:
    target_file = sys.argv[1]
except IndexError:
    sys.stderr.write("Usage: %s <input vector file>\n" % sys.argv[0])
    sys.exit(1)

# 파일 이름에서 특수 문자를 제거하여 함수 이름으로 사용
target_file_basename = os.path.basename(target_file)
test_function_name = target_file_basename.replace('.', '_').replace('-', '_')

translate_report = bstkit.scan('translate', target_file, quiet=True)[0].reports[0]
solve_report = bstkit.scan('solve', target_file, quiet=True)[0].reports[0]

if translate_report.verdict != 'OK':
    sys.stderr.write("'%s' could not be translated: %s\n" % (target_file, translate_report.message))
    sys.exit(1)

families = "{%s}" % ", ".join("'%s': %d" % (k, v) for (k, v) in sorted(translate_report.counts['families'].items()))

# 템플릿에 데이터를 채워 최종 테스트 스크립트 생성
test_script = test_script_template % (test_function_name,
                                      target_file_basename,
                                      solve_report.verdict,
                                      families,
                                      target_file_basename)

# 생성된 테스트 스크립트를 tests 디렉토리에 저장
test_script_path = os.path.join("tests", "test_%s.py" % test_function_name)

with open(test_script_path, "w") as fp:
    fp.write(test_script)

# 완료 메시지를 출력하고 종료
sys.stdout.write("Generated test script for '%s' and saved it to '%s'\n" % (target_file, test_script_path))
sys.exit(0)
