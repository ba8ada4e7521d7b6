import os
import itertools
import pytest
import numpy as np
import bstkit.core.hf as hf
from bstkit.core.exceptions import ParserException, MissingVariable, EncodingException
from bstkit.core.syntax import (Var, Problem, And, Or, Not, Implies, Iff, DiffEq, DiffNeq, Singleton,
                                Subseteq, StrictSub, UnionEq, UnionNeq, VarEq, Disj, Empty,
                                FreshNames, desugar, evaluate_definition, parse, parse_formula, unparse,
                                DERIVED_LITERALS)
from bstkit.core.oracle import random_formula

INPUT_VECTORS = os.path.join(os.path.dirname(__file__), "input-vectors")


def _read(name):
    with open(os.path.join(INPUT_VECTORS, name), encoding='utf-8') as fp:
        return fp.read()


def test_var_kinds():
    '''
    테스트: 이름 접두사로 변수 종류가 정해지고 문자열과 같게 비교됩니다.
    '''
    assert Var("x").is_user
    assert Var("~x").kind == Var.AUXILIARY
    assert Var("_d1").kind == Var.FRESH
    assert Var("x").tilde() == "~x"
    assert Var("x") == "x" and hash(Var("x")) == hash("x")


def test_parse_problem_literals():
    '''
    테스트: 리터럴만 있는 텍스트는 원본 순서를 유지한 Problem이 됩니다.
    '''
    p = parse("x = y \\ z ; x != y \\ z\nx = { y }")

    assert isinstance(p, Problem)
    assert p.literals == (DiffEq("x", "y", "z"), DiffNeq("x", "y", "z"), Singleton("x", "y"))
    assert p.psi == (Singleton("x", "y"),)
    assert p.vars == ["x", "y", "z"]


def test_parse_duplicate_singletons():
    '''
    테스트: 중복된 싱글톤 원자는 한 번만 남습니다.
    '''
    p = parse("x = { y }\nx = { y }\ny = { z }")
    assert len(p.psi) == 2


def test_parse_comments_and_blank_lines():
    '''
    테스트: 주석과 빈 줄은 무시되고, 빈 입력은 빈 문제입니다.
    '''
    assert len(parse("# comment only\n\n")) == 0
    assert len(parse("")) == 0
    assert len(parse(_read("ex1.bst"))) == 4


def test_parse_formula_precedence():
    '''
    테스트: not > and > or > -> > <-> 순의 결합 우선순위.
    '''
    f = parse_formula("x sub y and y sub x -> x = y")
    assert f == Implies(And(Subseteq("x", "y"), Subseteq("y", "x")), VarEq("x", "y"))

    g = parse_formula("not x = 0 or disj(x, y) <-> x = y")
    assert g == Iff(Or(Not(Empty("x")), Disj("x", "y")), VarEq("x", "y"))


def test_parse_bst_plus_file():
    '''
    테스트: 결합자가 있는 파일은 문장들의 논리곱 Formula가 됩니다.
    '''
    f = parse(_read("flat1.bst"))
    assert isinstance(f, And)
    assert len(f.args) == 3


@pytest.mark.parametrize("text", [
    "x = y \\",
    "x == y",
    "x = { y } and y = 0",
    "~x = y \\ z",
    "x = y \\ z\n(x sub y",
])
def test_parse_errors(text):
    '''
    테스트: 잘못된 입력은 줄/열이 붙은 ParserException을 냅니다.
    '''
    with pytest.raises(ParserException) as info:
        parse(text)
    assert info.value.line is not None


def test_parse_error_position():
    '''
    테스트: 싱글톤을 결합자 안에 쓰면 두 번째 줄에서 오류가 보고됩니다.
    '''
    with pytest.raises(ParserException) as info:
        parse(_read("bad.bst"))
    assert info.value.line == 2


def test_reserved_names_allowed_on_request():
    '''
    테스트: allow_reserved=True이면 틸드/새 변수 이름을 읽을 수 있습니다.
    '''
    f = parse_formula("~x ssub ~y", allow_reserved=True)
    assert f == StrictSub("~x", "~y")


@pytest.mark.parametrize("text", [
    "x = y \\ z ; u != v \\ w ; x = { u }",
    "a sub b ; c nsub d ; e ssub f ; g = h & i ; j != k | l ; disj(m,n) ; ndisj(o,p) ; q = 0 ; r != s",
])
def test_unparse_problem(text):
    '''
    테스트: parse(unparse(p)) == p.
    '''
    p = parse(text)
    assert parse(unparse(p)) == p


def test_unparse_formula_parenthesizes():
    '''
    테스트: 우선순위가 낮은 하위 식은 괄호로 감쌉니다.
    '''
    f = And(Or(Empty("x"), Empty("y")), Not(Implies(Empty("x"), Empty("z"))))
    text = unparse(f)
    assert parse_formula(text) == f


def test_desugar_only_core_literals():
    '''
    테스트: 디슈가링 결과에는 DiffEq/DiffNeq만 남습니다.
    '''
    names = [Var("x"), Var("y"), Var("z")]
    for cls in DERIVED_LITERALS:
        core = desugar(cls(*names[:cls.ARITY]), FreshNames())
        assert core
        assert all(type(c) in (DiffEq, DiffNeq) for c in core)


def test_desugar_soundness_small():
    '''
    테스트: V_2 위에서 원래 리터럴과 증인 값으로 완성한 디슈가링 결과의 진리값이 같습니다.
    '''
    sets = hf.enumerate_level(2).sets
    names = [Var("x"), Var("y"), Var("z")]

    for cls in (UnionEq, UnionNeq, StrictSub, Disj):
        lit = cls(*names[:cls.ARITY])
        definitions = {}
        core = desugar(lit, FreshNames(), definitions)
        for values in itertools.product(sets, repeat=cls.ARITY):
            M = dict(zip(names, values))
            for (v, term) in definitions.items():
                M[v] = evaluate_definition(term, M)
            assert lit.holds(M) == all(c.holds(M) for c in core)


def test_problem_fresh_variables():
    '''
    테스트: 문제의 디슈가링은 결정적인 새 변수 이름을 쓰며 complete()가 증인 값을 채웁니다.
    '''
    p = parse("x sub y")
    assert [str(v) for v in p.variables()] == ["_d1", "x", "y"]
    assert p.vars == ["x", "y"]

    M = p.complete({"x": hf.EMPTY, "y": hf.chain(1)})
    assert M["_d1"] is hf.EMPTY
    assert all(lit.holds(M) for lit in p.phi)


def test_literal_bitmask_semantics():
    '''
    테스트: test()는 비트마스크 위의 원소별 의미론입니다.
    '''
    env = {Var("x"): 0b01, Var("y"): 0b11, Var("z"): 0b10}
    assert DiffEq("x", "y", "z").test(env, 0b11)
    assert Subseteq("x", "y").test(env, 0b11)
    assert bool(StrictSub("x", "y").test(env, 0b11))
    assert not Subseteq("y", "x").test(env, 0b11)


def test_singleton_has_no_flat_semantics():
    '''
    테스트: 싱글톤 원자는 평탄 평가에서 EncodingException을 냅니다.
    '''
    with pytest.raises(EncodingException):
        Singleton("x", "y").test({Var("x"): 0, Var("y"): 0}, 1)


def test_missing_variable():
    '''
    테스트: 할당에 없는 변수를 평가하면 MissingVariable.
    '''
    with pytest.raises(MissingVariable):
        DiffEq("x", "y", "z").holds({"x": hf.EMPTY})


def test_unparse_random_formulas():
    '''
    테스트: 임의 식 1000개에서 parse_formula(unparse(f)) == f.
    '''
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        f = random_formula(rng, ["x", "y", "z", "w"], int(rng.integers(1, 7)), 4)
        assert parse_formula(unparse(f)) == f, unparse(f)


@pytest.mark.parametrize("text, column", [
    ("not = a \\ b", 1),
    ("disj = x \\ y", 1),
    ("x sub y ; ndisj sub x", 11),
    ("x = not \\ y", None),
    ("a = b & or", None),
])
def test_keyword_names_rejected(text, column):
    '''
    테스트: 예약어는 변수 이름으로 쓸 수 없으며, 왼쪽 변수로 쓰면 그 위치를 알려 줍니다.
    '''
    with pytest.raises(ParserException) as info:
        parse(text)
    assert info.value.line == 1
    if column is not None:
        assert info.value.column == column
        assert "예약어" in str(info.value)


def test_keyword_var_rejected():
    '''
    테스트: 예약어 이름의 Var는 만들 수 없고, 예약어를 포함한 이름은 괜찮습니다.
    '''
    for word in ("not", "and", "sub", "disj", "ndisj"):
        with pytest.raises(ParserException):
            Var(word)

    p = parse("nota = subx \\ and_1")
    assert p.vars == ["nota", "subx", "and_1"]
    assert parse(unparse(p)) == p
