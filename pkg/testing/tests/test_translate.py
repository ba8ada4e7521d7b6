import time
import pytest
from bstkit.core.syntax import (Problem, Singleton, DiffEq, NotSubseteq, Implies, Iff, NotDisj, Subseteq,
                                StrictSub, VarEq, parse, parse_formula)
from bstkit.core.translate import translate, translate_size, FAMILIES


@pytest.mark.parametrize("n, p, size", [
    (0, 0, 0),
    (3, 0, 3),
    (3, 2, 18),
    (4, 3, 3 + 24 + 3 + 6),
])
def test_translate_size(n, p, size):
    '''
    테스트: |Xi| = p + 2pn + p(p-1)/2 + n(n-1)/2.
    '''
    assert translate_size(n, p) == size


def test_translate_no_singletons():
    '''
    테스트: 싱글톤이 없으면 (d) 묶음만 남습니다.
    '''
    p = Problem([DiffEq("x", "y", "z")])
    xi = translate(p)
    assert len(xi) == 3
    assert xi.families == {'a': 0, 'b': 0, 'c': 0, 'd': 3}
    assert xi.conjuncts[0] == Implies(VarEq("x", "y"), VarEq("~x", "~y"))


def test_translate_order_and_families():
    '''
    테스트: 연언은 (a), (b), (c), (d) 순서로 나오고 개수가 공식과 같습니다.
    '''
    p = parse("x = y \\ z\nx = { y }\nz = { x }")
    xi = translate(p)
    n = len(p.variables())

    assert len(xi) == translate_size(n, 2) == 18
    assert [xi.families[f] for f in FAMILIES] == [2, 12, 1, 3]

    assert xi.conjuncts[0] == NotSubseteq("x", "y")
    assert xi.conjuncts[1] == NotSubseteq("z", "x")
    assert xi.conjuncts[2] == Implies(NotDisj("x", "x"), Subseteq("x", "x"))
    assert xi.conjuncts[3] == Implies(NotDisj("x", "x"), StrictSub("~y", "~x"))
    assert xi.conjuncts[14] == Iff(VarEq("y", "x"), VarEq("x", "z"))


def test_translate_deterministic():
    '''
    테스트: 같은 입력은 바이트 단위로 같은 출력을 냅니다.
    '''
    text = "a = b \\ c\nx = { y }\ny = { z }\nz = { x }"
    assert str(translate(parse(text))) == str(translate(parse(text)))


def test_translate_variables():
    '''
    테스트: 모든 변수에 틸드 변수가 생기고, 결과는 싱글톤 없는 평탄 식입니다.
    '''
    p = parse("x sub y\nx = { y }")
    xi = translate(p)

    assert xi.auxiliary() == [v.tilde() for v in p.variables()]
    assert xi.all_variables() == p.variables() + xi.auxiliary()
    assert not any(isinstance(a, Singleton) for a in xi.atoms())


def test_translate_output_reparses():
    '''
    테스트: 출력한 Xi는 예약 이름을 허용하면 다시 읽을 수 있습니다.
    '''
    p = parse("x = y \\ z\nx = { y }")
    xi = translate(p)
    f = parse_formula(str(xi), allow_reserved=True)
    assert list(f.args) == xi.conjuncts


def test_translate_empty():
    '''
    테스트: 빈 문제는 빈 Xi.
    '''
    xi = translate(Problem())
    assert len(xi) == 0
    assert str(xi) == ""


def _scaled_problem(n, p):
    '''
    변수 v1..vn과 싱글톤 원자 p개 (v_i = { v_i+1 })로 이루어진 문제.
    '''
    names = ["v%d" % i for i in range(1, n + 1)]
    literals = [DiffEq(v, v, v) for v in names]
    literals += [Singleton(names[i], names[i + 1]) for i in range(p)]
    return Problem(literals)


@pytest.mark.parametrize("n, p, size", [
    (10, 3, 111),
    (50, 10, 2280),
    (200, 50, 41175),
])
def test_translate_scale(n, p, size):
    '''
    테스트: 큰 입력에서도 연언 수가 닫힌 식과 같고, n = 200에서 1초 안에 끝납니다.
    '''
    problem = _scaled_problem(n, p)
    assert len(problem.variables()) == n

    start = time.perf_counter()
    xi = translate(problem)
    elapsed = time.perf_counter() - start

    assert translate_size(n, p) == size
    assert len(xi) == size
    assert elapsed < 1.0


def test_translate_quadratic_growth():
    '''
    테스트: p를 고정하고 n을 두 배로 늘리면 연언 수의 비율이 4에 가까워집니다.
    '''
    counts = [len(translate(_scaled_problem(n, 3))) for n in (50, 100, 200)]
    ratios = [counts[1] / counts[0], counts[2] / counts[1]]

    assert counts == [translate_size(n, 3) for n in (50, 100, 200)]
    assert ratios[0] < ratios[1] < 4.0
    assert abs(ratios[1] - 4.0) <= 0.3
