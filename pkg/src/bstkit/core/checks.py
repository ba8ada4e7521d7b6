# `bstkit check`가 실행하는 성질 검사 모음입니다. 각 검사는 Report를 반환합니다.

import itertools
import numpy as np
import bstkit.core.hf as hf
from bstkit.core.common import Report, read_text
from bstkit.core.settings import Settings
from bstkit.core.syntax import (Var, And, FreshNames, desugar, parse, DERIVED_LITERALS)
from bstkit.core.translate import translate
from bstkit.core.decide import decide
from bstkit.core.models import (FlatParams, evaluate, flatten, is_flat, order, transform,
                                inclusion_profile, disjointness_profile, extend, solve_nested)
from bstkit.core.oracle import generate, nested_sat, flat_sat, flat_atoms, random_flat_conjunction
from bstkit.core.exceptions import ModelException, PreconditionViolated

# 번들 예제: 이름 -> (기대 판정, 기대 사용자 모델 값)
WORKED_EXAMPLES = (
    ("ex1", False, {}),
    ("ex2", False, {}),
    ("ex3", True, {"x": "{}"}),
)

# 생성 인스턴스 검사에 쓰는 프로필
SAMPLE_PROFILE = "planted:vars=4,diff=3,singletons=2"


def axiom_sample(level=4):
    sets = hf.enumerate_level(level).sets
    return itertools.product(sets, repeat=3)


def check_axioms_exhaustive():
    '''
    V_4의 모든 16^3 삼중쌍에서 차집합 공리를 검사합니다.
    '''
    return hf.check_axioms(axiom_sample(4))


def _fresh_extensions(core, env, fresh, k):
    '''
    원래 변수 값 env를 고정했을 때 core를 만족하는 새 변수 값들을 모두 찾습니다.
    할당 인덱스의 j번째 k비트 필드가 j번째 새 변수의 값입니다. 만족하는 인덱스 배열을 반환합니다.
    '''
    full = (1 << k) - 1
    candidates = np.arange(1 << (k * len(fresh)), dtype=np.int64)
    values = dict(env)
    values.update((v, (candidates >> (k * j)) & full) for (j, v) in enumerate(fresh))

    for c in core:
        keep = np.flatnonzero(np.broadcast_to(np.asarray(c.test(values, full), dtype=bool), candidates.shape))
        candidates = candidates[keep]
        for v in fresh:
            values[v] = values[v][keep]

    return candidates


def _bitmask_witness(definitions, env, full):
    values = dict(env)
    for (v, term) in definitions.items():
        if term[0] == 'empty':
            values[v] = 0
        elif term[0] == 'diff':
            values[v] = values[term[1]] & ~values[term[2]] & full
        else:
            values[v] = values[term[1]] | values[term[2]]
    return dict((v, values[v]) for v in definitions)


def desugar_soundness(k=3):
    '''
    파생 리터럴마다, k원소 우주 위에서 원래 변수의 모든 할당에 대해 리터럴이 성립하는 것과
    디슈가링 결과를 만족하는 새 변수 값이 존재하는 것이 같은지 전수 검사합니다.
    리터럴이 성립하면 그런 새 변수 값은 정확히 하나이며, 기록된 정의 항의 값과 같아야 합니다.
    '''
    report = Report("desugaring soundness")
    full = (1 << k) - 1
    names = [Var("x"), Var("y"), Var("z")]

    for cls in DERIVED_LITERALS:
        lit = cls(*names[:cls.ARITY])
        definitions = {}
        core = desugar(lit, FreshNames(), definitions)
        fresh = list(definitions)

        for values in itertools.product(range(full + 1), repeat=cls.ARITY):
            env = dict(zip(names, values))
            report.checked += 1
            holds = bool(lit.test(env, full))
            found = _fresh_extensions(core, env, fresh, k)

            if holds != (len(found) > 0):
                report.violation((str(lit), values, "extension exists" if len(found) else "no extension"))
            elif holds:
                decoded = dict((v, (int(found[0]) >> (k * j)) & full) for (j, v) in enumerate(fresh))
                if len(found) != 1 or decoded != _bitmask_witness(definitions, env, full):
                    report.violation((str(lit), values, "%d extensions" % len(found)))

    return report


def membership_downgrade(level=3):
    '''
    x, y in V_3, z in V_4에 대해 (z = {x} 이고 z sub y인 z가 있음) <=> Mx in My.
    '''
    report = Report("membership downgrade")
    small = hf.enumerate_level(level).sets
    large = hf.enumerate_level(level + 1).sets

    for (x, y) in itertools.product(small, repeat=2):
        report.checked += 1
        witnessed = any(z is hf.singleton(x) and hf.subset(z, y) for z in large)
        if witnessed != hf.member(x, y):
            report.violation((hf.render(x), hf.render(y)))

    return report


def worked_examples(settings=None):
    '''
    번들 예제 문제의 판정과 모델을 확인합니다.
    '''
    report = Report("worked examples")
    settings = settings or Settings()

    for (name, expected, values) in WORKED_EXAMPLES:
        report.checked += 1
        path = settings.find_problem_file(name, system_only=True)
        if path is None:
            report.violation((name, "missing"))
            continue

        result = solve_nested(parse(read_text(path)))
        if result.sat != expected:
            report.violation((name, str(result)))
            continue
        for (v, rendered) in values.items():
            if hf.render(result.model[v]) != rendered:
                report.violation((name, v, hf.render(result.model[v])))

    return report


def _flat_model(p):
    xi = translate(p)
    decision = decide(xi.formula(p.phi))
    if not decision.sat:
        return (xi, decision, None, None)
    params = FlatParams.for_problem(p, xi)
    return (xi, decision, params, flatten(decision.model, xi.all_variables(), params.flat_rank, params))


def flat_model_checks(samples, seed=0):
    '''
    생성된 인스턴스에서 평탄화 성질을 검사합니다: 평탄성, 값 사이의 멤버십 부재, 영역 대응, 원자 순서의 비순환성.
    '''
    report = Report("flatness and order")

    for s in range(seed, seed + samples):
        p = generate(s, SAMPLE_PROFILE)
        (xi, decision, params, M) = _flat_model(p)
        if M is None:
            report.violation((s, "planted instance decided UNSAT"))
            continue

        variables = xi.all_variables()
        report.checked += 1

        if not is_flat(M, params.flat_rank):
            report.violation((s, "not flat"))
        if any(hf.member(M[u], M[v]) for u in variables for v in variables):
            report.violation((s, "membership between values"))

        flat_regions = set()
        for member in set(m for v in variables for m in M[v]):
            w = 0
            for (i, v) in enumerate(variables):
                if hf.member(member, M[v]):
                    w |= 1 << i
            flat_regions.add(w)
        if flat_regions != decision.model.regions(variables):
            report.violation((s, "region mismatch"))

        if not order(p.psi, M).is_acyclic:
            report.violation((s, "cyclic order"))

    return report


def transform_checks(samples, seed=0):
    '''
    최소 원자에 대한 변환이 포함/서로소 관계를 보존하고 phi /\\ Xi /\\ x = {y}를 만족하는지 검사합니다.
    '''
    report = Report("transformation")

    for s in range(seed, seed + samples):
        p = generate(s, SAMPLE_PROFILE)
        if not p.psi:
            continue
        (xi, decision, params, M) = _flat_model(p)
        if M is None:
            report.violation((s, "planted instance decided UNSAT"))
            continue

        atom = p.psi[order(p.psi, M).minimal(range(len(p.psi)))]
        (x, y) = atom.args
        report.checked += 1

        try:
            result = transform(M, x, y)
        except PreconditionViolated as e:
            report.violation((s, str(e)))
            continue

        plain = p.variables()
        if inclusion_profile(result, plain) != inclusion_profile(M, plain):
            report.violation((s, "inclusion profile changed"))
        if disjointness_profile(result, plain) != disjointness_profile(M, plain):
            report.violation((s, "disjointness profile changed"))
        if result[y] is not M[y]:
            report.violation((s, "value of %s changed" % y))
        if not (evaluate(result, list(p.phi)) and evaluate(result, xi) and atom.holds(result)):
            report.violation((s, "phi /\\ Xi /\\ %s fails" % atom))

    return report


def pipeline_checks(samples, seed=0):
    '''
    심은 인스턴스에서 전체 파이프라인(디버그 단언 포함)과 역방향 확장, 중첩 오라클과의 일치를 검사합니다.
    '''
    report = Report("lifting and extension")

    for s in range(seed, seed + samples):
        p = generate(s, SAMPLE_PROFILE)
        report.checked += 1

        result = solve_nested(p, debug_asserts=True)
        if not result.sat:
            report.violation((s, "planted instance decided UNSAT"))
            continue
        if not evaluate(result.model, p):
            report.violation((s, "model fails"))

        try:
            extend(p.certificate, p, result.xi)
            extend(result.model.restrict(p.vars), p, result.xi)
        except ModelException as e:
            report.violation((s, str(e)))

        if len(p.vars) <= 3 and not nested_sat(p, 4):
            report.violation((s, "nested oracle disagrees"))

    return report


def decide_agreement(samples, seed=0, variables=3, atoms=3):
    '''
    임의의 평탄 논리곱에서 decide와 flat_sat(k = 원자 수)의 판정이 일치하는지 검사합니다.
    '''
    report = Report("decide vs flat oracle")
    rng = np.random.default_rng(seed)
    names = ["x", "y", "z", "w"][:variables]

    for _ in range(samples):
        f = random_flat_conjunction(rng, names, atoms)
        decision = decide(f)
        k = max(1, decision.stats['atoms'])
        report.checked += 1
        if decision.sat != flat_sat(f, k).sat:
            report.violation(str(f))

    return report


def decide_grid(triples=1000, seed=0, k=3):
    '''
    변수 3개 위의 평탄 원자 전부에 대해, 원자 한두 개의 모든 논리곱과 임의로 고른 원자 세 개의 논리곱에서
    decide와 flat_sat(k)의 판정이 일치하는지 검사합니다.
    '''
    report = Report("decide grid")
    atoms = flat_atoms(["x", "y", "z"])
    rng = np.random.default_rng(seed)

    sampled = (tuple(atoms[i] for i in rng.choice(len(atoms), 3, replace=False)) for _ in range(triples))
    for conjuncts in itertools.chain(itertools.combinations_with_replacement(atoms, 2), sampled):
        f = And(*conjuncts)
        report.checked += 1
        if decide(f).sat != flat_sat(f, k).sat:
            report.violation(str(f))

    return report


def run_all(n_max=6, samples=50, seed=0, grid=True):
    '''
    모든 검사를 실행하고 Report 목록을 반환합니다.

    @grid - False이면 decide_grid의 전수 격자를 건너뜁니다.
    '''
    reports = [
        hf.bound_checks(n_max),
        check_axioms_exhaustive(),
        desugar_soundness(),
        membership_downgrade(),
        worked_examples(),
        flat_model_checks(samples, seed),
        transform_checks(samples, seed),
        pipeline_checks(samples, seed),
        decide_agreement(samples, seed),
    ]
    if grid:
        reports.append(decide_grid(samples, seed))
    return reports
