import os
import pytest
import bstkit.core.hf as hf
from bstkit.core.syntax import Var, Singleton, And, Subseteq, NotEmpty, Disj, parse, parse_formula
from bstkit.core.translate import translate
from bstkit.core.decide import decide
from bstkit.core.models import (SetAssignment, FlatParams, evaluate, flatten, is_flat, order, transform, lift,
                                extend, membership_closure, solve_nested, solve_flat, inclusion_profile,
                                disjointness_profile)
from bstkit.core.oracle import generate, nested_sat
from bstkit.core.exceptions import (CycleDetected, PreconditionViolated, MissingVariable,
                                    ModelException)

INPUT_VECTORS = os.path.join(os.path.dirname(__file__), "input-vectors")

# 서로 다른 rank-4 평탄 원소들
A = hf.im_inject(1, 4)
B = hf.im_inject(2, 4)
C = hf.im_inject(3, 4)


def _problem(name):
    with open(os.path.join(INPUT_VECTORS, name), encoding='utf-8') as fp:
        return parse(fp.read())


def test_set_assignment_render_order():
    '''
    테스트: 사용자 변수가 먼저, 그다음 새 변수와 틸드 변수가 이름 순으로 나옵니다.
    '''
    M = SetAssignment({Var("~x"): hf.EMPTY, Var("y"): hf.chain(1), Var("_d1"): hf.EMPTY, Var("x"): hf.EMPTY})
    assert M.render() == ["x = {}", "y = {{}}", "_d1 = {}", "~x = {}"]
    assert M.render(["y"]) == ["y = {{}}"]
    assert set(M.user()) == {"x", "y"}
    assert M.to_dict() == {"x": "{}", "y": "{{}}", "_d1": "{}", "~x": "{}"}


def test_restrict_missing():
    '''
    테스트: 정의역에 없는 변수로 제한하면 MissingVariable.
    '''
    with pytest.raises(MissingVariable):
        SetAssignment({Var("x"): hf.EMPTY}).restrict(["x", "y"])


def test_evaluate_kinds():
    '''
    테스트: evaluate는 Problem, Formula, 리터럴 목록을 모두 받습니다.
    '''
    p = parse("x = y \\ z\nx = { z }")
    M = {"x": hf.singleton(C), "y": hf.hfset(A, C), "z": C}
    assert not evaluate(M, p)
    M["z"] = hf.EMPTY
    M["x"] = hf.singleton(hf.EMPTY)
    M["y"] = hf.singleton(hf.EMPTY)
    assert evaluate(M, p)
    assert evaluate(M, list(p.phi))
    assert evaluate(M, And(Subseteq("x", "y"), NotEmpty("x")))


def test_flatten():
    '''
    테스트: 평탄화한 모델은 평탄하고 원래 식을 만족하며 영역 수만큼 서로 다른 원소를 가집니다.
    '''
    f = And(NotEmpty("x"), Disj("x", "y"), NotEmpty("y"), Subseteq("x", "z"))
    d = decide(f)
    variables = f.variables()
    M = flatten(d.model, variables, len(variables) + 1)

    assert is_flat(M, len(variables) + 1)
    assert evaluate(M, f)
    members = set(m for v in variables for m in M[v])
    assert len(members) == len(d.model.regions(variables))


def test_flatten_rank_too_small():
    '''
    테스트: flat rank는 변수 수 + 1 이상이어야 합니다.
    '''
    d = decide(NotEmpty("x"))
    with pytest.raises(PreconditionViolated):
        flatten(d.model, ["x"], 1)


def test_flat_params():
    '''
    테스트: 중첩 문제의 flat rank는 |Vars(phi /\\ Xi)| + |psi| + 2.
    '''
    p = parse("x = y \\ z\nx = { y }")
    xi = translate(p)
    params = FlatParams.for_problem(p, xi)
    assert params.flat_rank == 6 + 1 + 2
    assert params.inject(3) is params.inject(3)


def test_order_edges_and_minimal():
    '''
    테스트: Mx_i와 My_j가 만나면 간선 (i, j)이 생기고, 최소 원자는 선행자가 없는 가장 앞의 원자입니다.
    '''
    psi = [Singleton("x", "y"), Singleton("u", "v")]
    M = {"x": hf.singleton(A), "y": hf.EMPTY, "u": hf.singleton(B), "v": hf.singleton(A)}
    atom_order = order(psi, M)

    assert atom_order.edges == {(0, 1)}
    assert atom_order.is_acyclic
    assert atom_order.minimal({0, 1}) == 0
    assert atom_order.minimal({1}) == 1
    assert atom_order.topological() == psi


def test_order_cycle():
    '''
    테스트: 순환하는 순서는 CycleDetected.
    '''
    psi = [Singleton("x", "y"), Singleton("u", "v")]
    M = {"x": hf.singleton(A), "y": hf.singleton(B), "u": hf.singleton(B), "v": hf.singleton(A)}
    with pytest.raises(CycleDetected) as info:
        order(psi, M)
    assert len(info.value.atoms) == 2


def test_transform():
    '''
    테스트: Mx와 만나는 변수에서 Mx를 빼고 {My}를 더하며, 틸드 변수와 나머지는 그대로입니다.
    '''
    M = SetAssignment({Var("x"): hf.singleton(A), Var("y"): hf.singleton(B), Var("v"): hf.hfset(A, C),
                       Var("w"): hf.singleton(C), Var("~x"): hf.singleton(A)})
    out = transform(M, "x", "y")

    my = hf.singleton(B)
    assert out["x"] is hf.singleton(my)
    assert out["v"] is hf.hfset(C, my)
    assert out["w"] is M["w"]
    assert out["y"] is M["y"]
    assert out["~x"] is M["~x"]
    assert Singleton("x", "y").holds(out)

    variables = ["x", "y", "v", "w"]
    assert inclusion_profile(out, variables) == inclusion_profile(M, variables)
    assert disjointness_profile(out, variables) == disjointness_profile(M, variables)


def test_transform_precondition():
    '''
    테스트: My가 어떤 비보조 변수의 원소이면 PreconditionViolated.
    '''
    M = SetAssignment({Var("x"): hf.singleton(A), Var("y"): B, Var("v"): hf.singleton(B)})
    with pytest.raises(PreconditionViolated):
        transform(M, "x", "y")


def test_membership_closure():
    '''
    테스트: 멤버십의 추이적 폐포.
    '''
    a = hf.EMPTY
    b = hf.singleton(a)
    c = hf.singleton(b)
    below = membership_closure({"a": a, "b": b, "c": c}, ["a", "b", "c"])
    assert below["c"] == {"a", "b"}
    assert below["a"] == set()


@pytest.mark.parametrize("name", ["ex1.bst", "ex2.bst"])
def test_worked_examples_unsat(name):
    '''
    테스트: 멤버십 순환을 강제하는 예제는 UNSAT.
    '''
    result = solve_nested(_problem(name))
    assert not result.sat
    assert result.model is None


def test_worked_example_sat():
    '''
    테스트: ex3은 SAT이고 모델에서 x는 공집합입니다.
    '''
    p = _problem("ex3.bst")
    result = solve_nested(p, trace=True, debug_asserts=True)

    assert result.sat
    assert result.model["x"] is hf.EMPTY
    assert evaluate(result.model, p)
    assert result.model["z"] is hf.singleton(result.model["y"])
    assert hf.subset(result.model["y"], result.model["y2"])
    assert hf.subset(result.model["z"], result.model["z2"])
    assert len(result.steps) >= 1
    assert result.counts['xi'] == len(result.xi)


def test_singleton_chain():
    '''
    테스트: x = {y}, y = {z} 는 SAT이고 모델이 원본 문제를 만족합니다.
    '''
    p = parse("x = { y }\ny = { z }\nz != 0")
    result = solve_nested(p, debug_asserts=True)
    assert result.sat
    assert result.model["x"] is hf.singleton(result.model["y"])
    assert result.model["z"] is not hf.EMPTY


def test_lift_precondition():
    '''
    테스트: phi /\\ Xi를 만족하지 않는 초기 할당은 거부합니다.
    '''
    p = parse("x = { y }")
    xi = translate(p)
    params = FlatParams.for_problem(p, xi)
    M0 = dict((v, hf.EMPTY) for v in xi.all_variables())
    with pytest.raises(PreconditionViolated):
        lift(p, M0, params, xi=xi)


def test_extend():
    '''
    테스트: phi /\\ psi의 모델을 틸드 변수로 확장하면 Xi를 만족합니다.
    '''
    p = parse("x = { y }\ny = { z }")
    z = hf.EMPTY
    M = {"x": hf.singleton(hf.singleton(z)), "y": hf.singleton(z), "z": z}
    values = extend(M, p)

    assert values["~x"] is hf.hfset(M["y"], M["z"])
    assert values["~z"] is hf.EMPTY
    assert translate(p).holds(values)


def test_extend_rejects_non_model():
    '''
    테스트: 모델이 아닌 할당은 확장하지 않습니다.
    '''
    p = parse("x = { y }")
    with pytest.raises(ModelException):
        extend({"x": hf.EMPTY, "y": hf.EMPTY}, p)


@pytest.mark.parametrize("seed", range(6))
def test_pipeline_on_planted(seed):
    '''
    테스트: 심은 인스턴스는 SAT이고, 반복별 단언을 켠 파이프라인 결과가 모델입니다.
    '''
    p = generate(seed, "planted:vars=4,diff=3,singletons=2")
    result = solve_nested(p, debug_asserts=True, trace=True)

    assert result.sat
    assert evaluate(result.model, p)
    extend(result.model.restrict(p.vars), p, result.xi)


def test_full_encoding_agrees():
    '''
    테스트: 전체 인코딩과 VSIDS를 써도 판정이 같습니다.
    '''
    for name in ("ex1.bst", "ex2.bst", "ex3.bst"):
        p = _problem(name)
        assert solve_nested(p).sat == solve_nested(p, polarity=False, activity=True).sat


def test_solve_flat():
    '''
    테스트: BST+ 식의 평탄 모델.
    '''
    f = parse_formula("x ssub y\nndisj(y, z)\nnot z sub y")
    result = solve_flat(f)
    assert result.sat
    assert evaluate(result.model, f)
    assert is_flat(result.model, len(f.variables()) + 1)

    assert not solve_flat(parse_formula("x ssub y\ny sub x")).sat


def test_self_singleton_unsat():
    '''
    테스트: x = {x}는 받아들이지만 Xi에 x nsub x가 생겨 UNSAT입니다.
    '''
    p = parse("x = { x }")
    assert len(p.psi) == 1
    assert not solve_nested(p).sat


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_pipeline_on_planted_batch(seed):
    '''
    테스트: 변수 5개, 싱글톤 3개 이하의 심은 인스턴스 200개가 모두 SAT이고 모델은 확장됩니다.
    '''
    p = generate(seed, "planted:vars=5,diff=4,singletons=3")
    assert len(p.vars) <= 5 and len(p.psi) <= 3

    result = solve_nested(p, debug_asserts=True)
    assert result.sat
    assert evaluate(result.model, p)
    assert result.xi.holds(extend(result.model.restrict(p.vars), p, result.xi))
    assert result.xi.holds(extend(p.certificate, p, result.xi))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(300))
def test_unsat_agrees_with_nested_oracle(seed):
    '''
    테스트: 임의 인스턴스에서 UNSAT 판정은 작은 레벨의 전수 탐색도 UNSAT이며, 전수 탐색이 찾은 모델은 SAT 판정과 일치합니다.
    '''
    p = generate(seed, "random:vars=3,diff=4,singletons=2")
    result = solve_nested(p)

    for level in (2, 3, 4):
        oracle = nested_sat(p, level)
        if not result.sat:
            assert not oracle.sat, (str(p), level, oracle.witness.render())
        elif oracle.sat:
            assert evaluate(oracle.witness, p)

    if result.sat:
        assert evaluate(result.model, p)


def test_example3_family():
    '''
    테스트: My = s = {{}}, My2 = s, Mz2 = {s}인 ex3 모델과, s를 원소로 가진 변수에만 s | {s}를 주는 틸드 확장이 Xi를 만족합니다.
    '''
    p = _problem("ex3.bst")
    s = hf.chain(1)
    (s1, s2) = (hf.EMPTY, hf.EMPTY)
    M = SetAssignment({Var("x"): hf.EMPTY, Var("y"): s, Var("z"): hf.singleton(s),
                       Var("y2"): hf.union(s, s1), Var("z2"): hf.union(hf.singleton(s), s2)})
    assert evaluate(M, p)

    xi = translate(p)
    plus = SetAssignment(M)
    for v in p.variables():
        plus[xi.tilde[v]] = hf.union(s, hf.singleton(s)) if hf.member(s, M[v]) else hf.EMPTY
    assert xi.holds(plus)
    assert plus["~z"] is hf.hfset(hf.EMPTY, hf.chain(1))
    assert plus["~y"] is hf.EMPTY


def test_transform_example3_flat_model():
    '''
    테스트: ex3의 평탄 모델에 (z, y) 변환을 적용하면 z = {My}가 되고 phi /\\ Xi도 유지됩니다.
    '''
    p = _problem("ex3.bst")
    xi = translate(p)
    d = decide(xi.formula(p.phi))
    assert d.sat

    params = FlatParams.for_problem(p, xi)
    M = flatten(d.model, xi.all_variables(), params.flat_rank, params)
    assert evaluate(M, list(p.phi)) and evaluate(M, xi)

    out = transform(M, "z", "y")
    assert out["z"] is hf.singleton(M["y"])
    assert out["y"] is M["y"]
    assert evaluate(out, list(p.phi)) and evaluate(out, xi)
    assert evaluate(out, p)
