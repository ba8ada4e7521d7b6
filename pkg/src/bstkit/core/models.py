# 집합 할당의 평가, 평탄 모델 구성, 싱글톤 원자 순서, M_{x,y} 변환,
# 평탄 모델을 중첩 모델로 들어 올리는 리프팅 루프와 그 역방향 확장을 담당합니다.

import bstkit.core.hf as hf
import bstkit.core.common as common
from bstkit.core.settings import Settings
from bstkit.core.module import Result
from bstkit.core.syntax import Formula, Literal, Problem, Var
from bstkit.core.translate import XiFormula, translate
from bstkit.core.decide import decide
from bstkit.core.exceptions import (MissingVariable, CycleDetected, PreconditionViolated,
                                    LiftInvariantBroken, ExtensionFailed)

_KIND_ORDER = {Var.USER: 0, Var.FRESH: 1, Var.AUXILIARY: 2}


class SetAssignment(dict):
    '''
    Var -> HFSet 매핑. 문자열 키로도 조회할 수 있습니다.
    '''

    def restrict(self, variables):
        '''
        주어진 변수들로 정의역을 제한한 새 할당을 반환합니다.
        '''
        out = SetAssignment()
        for v in variables:
            try:
                out[Var(v)] = self[v]
            except KeyError:
                raise MissingVariable(v)
        return out

    def user(self):
        return SetAssignment((v, s) for (v, s) in self.items() if Var(v).is_user)

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: (_KIND_ORDER[Var(item[0]).kind], str(item[0])))

    def render(self, variables=None):
        '''
        "v = {...}" 줄 목록. 사용자 변수가 먼저 오며 각 그룹은 이름 순입니다.
        '''
        items = self.sorted_items()
        if variables is not None:
            wanted = set(Var(v) for v in variables)
            items = [(v, s) for (v, s) in items if v in wanted]
        return ["%s = %s" % (v, hf.render(s)) for (v, s) in items]

    def to_dict(self):
        return dict((str(v), hf.render(s)) for (v, s) in self.sorted_items())

    def __str__(self):
        return "\n".join(self.render())


def evaluate(M, f):
    '''
    HF 의미론으로 f의 진리값을 계산합니다.

    @M - SetAssignment (또는 Var/이름 -> HFSet 딕셔너리).
    @f - Formula, Problem(원본 리터럴), XiFormula, 또는 리터럴 목록.

    정의역에 없는 변수가 있으면 MissingVariable이 발생합니다.
    '''
    if isinstance(f, Problem):
        return all(lit.holds(M) for lit in f.literals)
    if isinstance(f, XiFormula):
        return f.holds(M)
    if isinstance(f, Formula):
        return bool(f.holds(M))
    return all(lit.holds(M) for lit in f)


class FlatParams(object):
    '''
    평탄 rank와 영역 서명 -> 평탄 집합 대응표.
    '''

    def __init__(self, flat_rank):
        self.flat_rank = flat_rank
        self.region_index = {}

    @classmethod
    def for_problem(cls, p, xi):
        '''
        |Vars(phi /\\ Xi)| + |psi| + 2.
        '''
        return cls(len(xi.all_variables()) + len(p.psi) + 2)

    def inject(self, w_index):
        if w_index not in self.region_index:
            self.region_index[w_index] = hf.im_inject(w_index, self.flat_rank)
        return self.region_index[w_index]


def is_flat(M, flat_rank):
    '''
    모든 값의 모든 원소가 rank flat_rank를 가지면 True.
    '''
    return all(m.rank == flat_rank for s in M.values() for m in s)


def flatten(A, variables, flat_rank, params=None):
    '''
    추상 모델의 비어 있지 않은 영역 하나하나를 rank flat_rank의 서로 다른 집합으로 축약합니다.

    @A         - AbstractModel.
    @variables - 결과 할당의 정의역 (서명 비트 순서).
    @flat_rank - 평탄 rank. len(variables) + 1 이상이어야 합니다.
    @params    - 재사용할 FlatParams (선택).

    SetAssignment를 반환합니다.
    '''
    variables = list(variables)
    if flat_rank < len(variables) + 1:
        raise PreconditionViolated(flat_rank, "flat rank %d은(는) 변수 %d개에 대해 너무 작습니다" % (flat_rank, len(variables)))

    if params is None:
        params = FlatParams(flat_rank)

    members = dict((v, []) for v in variables)
    for e in A.elements:
        w = A.signature(e, variables)
        if not w:
            continue
        s = params.inject(w)
        for (i, v) in enumerate(variables):
            if w >> i & 1:
                members[v].append(s)

    return SetAssignment((Var(v), hf.make(members[v])) for v in variables)


class AtomOrder(object):
    '''
    psi 원자들의 순서. edges에 (i, j)가 있으면 Mx_i와 My_j가 서로소가 아니며, 원자 i를 j보다 먼저 처리합니다.
    '''

    def __init__(self, atoms, edges):
        self.atoms = list(atoms)
        self.edges = set(edges)
        self.closure = self._closure()

    def _closure(self):
        n = len(self.atoms)
        reach = [set() for _ in range(n)]
        for (i, j) in self.edges:
            reach[i].add(j)

        changed = True
        while changed:
            changed = False
            for i in range(n):
                extra = set()
                for j in reach[i]:
                    extra |= reach[j]
                if not extra <= reach[i]:
                    reach[i] |= extra
                    changed = True

        return set((i, j) for i in range(n) for j in reach[i])

    @property
    def is_acyclic(self):
        return not any(i == j for (i, j) in self.closure)

    def cycle(self):
        return [self.atoms[i] for i in range(len(self.atoms)) if (i, i) in self.closure]

    def minimal(self, remaining):
        '''
        remaining 안에서 선행자가 없는 원자 중 psi 순서상 가장 앞의 인덱스.
        '''
        remaining = sorted(remaining)
        pool = set(remaining)
        for i in remaining:
            if not any((j, i) in self.closure for j in pool if j != i):
                return i
        raise CycleDetected([self.atoms[i] for i in remaining])

    def topological(self):
        order = []
        remaining = set(range(len(self.atoms)))
        while remaining:
            i = self.minimal(remaining)
            order.append(i)
            remaining.discard(i)
        return [self.atoms[i] for i in order]

    def __len__(self):
        return len(self.atoms)


def order(psi, M):
    '''
    원자 순서를 계산합니다. 추이적 폐포가 반사적이면 CycleDetected가 발생합니다.
    '''
    psi = list(psi)
    edges = []
    for (i, a) in enumerate(psi):
        mx = M[a.args[0]]
        for (j, b) in enumerate(psi):
            if hf.inter(mx, M[b.args[1]]):
                edges.append((i, j))

    result = AtomOrder(psi, edges)
    if not result.is_acyclic:
        raise CycleDetected(result.cycle())
    return result


def transform(M, x, y):
    '''
    M_{x,y}: Mx와 만나는 비보조 변수 v의 값을 (Mv - Mx) U {My}로 바꿉니다. 틸드 변수는 그대로입니다.
    모든 비보조 변수 v에 대해 My가 Mv의 원소가 아니어야 합니다.
    '''
    mx = M[x]
    my = M[y]

    for (v, s) in M.items():
        if Var(v).kind != Var.AUXILIARY and hf.member(my, s):
            raise PreconditionViolated(v, "M%s이(가) M%s의 원소입니다" % (y, v))

    singleton = hf.singleton(my)
    out = SetAssignment()
    for (v, s) in M.items():
        if Var(v).kind == Var.AUXILIARY or not hf.inter(s, mx):
            out[v] = s
        else:
            out[v] = hf.union(hf.diff(s, mx), singleton)
    return out


def inclusion_profile(M, variables):
    return set((u, v) for u in variables for v in variables if hf.subset(M[u], M[v]))


def disjointness_profile(M, variables):
    return set((u, v) for u in variables for v in variables if not hf.inter(M[u], M[v]))


class LiftStep(object):
    '''
    리프팅 루프의 한 단계: 처리한 원자, 이번 단계에서 처리 완료로 표시된 원자들, 결과 할당.
    '''

    def __init__(self, index, atom, changed, snapshot):
        self.index = index
        self.atom = atom
        self.changed = changed
        self.snapshot = snapshot

    def render(self):
        lines = ["step %d: %s (done: %s)" % (self.index, self.atom, ", ".join(str(a) for a in self.changed))]
        lines += ["    " + line for line in self.snapshot.render()]
        return lines

    def to_dict(self):
        return {
            'index': self.index,
            'atom': str(self.atom),
            'changed': [str(a) for a in self.changed],
            'model': self.snapshot.to_dict(),
        }


def _rank_window(M, step, flat_rank):
    for (v, s) in M.items():
        if Var(v).kind == Var.AUXILIARY:
            continue
        if not (s.rank <= step or flat_rank + 1 <= s.rank <= flat_rank + 1 + step):
            return v
    return None


def lift(p, M0, params, xi=None, debug_asserts=None, trace=None):
    '''
    phi /\\ Xi의 평탄 모델 M0을 phi /\\ psi의 모델로 바꿉니다.

    @p             - Problem.
    @M0            - flat rank params.flat_rank인 평탄 모델 (틸드 변수 포함).
    @params        - FlatParams.
    @xi            - translate(p)의 결과 (생략 시 새로 계산).
    @debug_asserts - 반복별 단언 사용 여부 (생략 시 BSTKIT_DEBUG_ASSERTS).
    @trace         - 목록이 주어지면 LiftStep을 추가합니다.

    비보조 변수로 제한한 SetAssignment를 반환합니다.
    '''
    if xi is None:
        xi = translate(p)
    if debug_asserts is None:
        debug_asserts = Settings().debug_asserts

    phi = list(p.phi)
    psi = list(p.psi)
    flat_rank = params.flat_rank

    if not (evaluate(M0, phi) and evaluate(M0, xi)):
        raise PreconditionViolated("M0", "초기 할당이 phi /\\ Xi를 만족하지 않습니다")
    if not is_flat(M0, flat_rank):
        raise PreconditionViolated("M0", "초기 할당이 %d-평탄하지 않습니다" % flat_rank)

    atom_order = order(psi, M0)
    remaining = set(range(len(psi)))
    done = []
    M = SetAssignment(M0)
    step = 0

    while remaining:
        i = atom_order.minimal(remaining)
        (x, y) = psi[i].args

        try:
            following = transform(M, x, y)
        except PreconditionViolated as e:
            raise LiftInvariantBroken("%s 처리 전 조건 (4)가 깨졌습니다: %s" % (psi[i], e))

        changed = sorted(j for j in remaining if following[psi[j].args[0]] is not M[psi[j].args[0]])
        if i not in changed:
            raise LiftInvariantBroken("%s의 좌변 값이 바뀌지 않았습니다" % psi[i])

        remaining.difference_update(changed)
        done += changed
        step += 1

        if trace is not None:
            trace.append(LiftStep(step, psi[i], [psi[j] for j in changed], following))

        if debug_asserts:
            v = _rank_window(following, step, flat_rank)
            if v is not None:
                raise LiftInvariantBroken("단계 %d: M%s의 rank %d이(가) 허용 범위를 벗어났습니다" % (step, v, following[v].rank))
            if not (evaluate(following, phi) and evaluate(following, xi)):
                raise LiftInvariantBroken("단계 %d: phi /\\ Xi가 깨졌습니다" % step)
            broken = [psi[j] for j in done if not psi[j].holds(following)]
            if broken:
                raise LiftInvariantBroken("단계 %d: %s이(가) 깨졌습니다" % (step, ", ".join(str(a) for a in broken)))
            survivors = set(remaining)
            before = set(e for e in atom_order.edges if e[0] in survivors and e[1] in survivors)
            after = set(e for e in order(psi, following).edges if e[0] in survivors and e[1] in survivors)
            if before != after:
                raise LiftInvariantBroken("단계 %d: 남은 원자들의 순서가 바뀌었습니다" % step)

        common.debug("lift: step %d %s -> %d atoms done" % (step, psi[i], len(changed)))
        M = following

    if not (evaluate(M, phi) and evaluate(M, psi)):
        raise LiftInvariantBroken("리프팅 결과가 phi /\\ psi를 만족하지 않습니다")

    return M.restrict(v for v in M if Var(v).kind != Var.AUXILIARY)


def membership_closure(M, variables):
    '''
    {(u, v) : Mu in Mv}의 추이적 폐포를 변수 -> 선행 변수 집합으로 반환합니다.
    '''
    below = dict((v, set(u for u in variables if hf.member(M[u], M[v]))) for v in variables)

    changed = True
    while changed:
        changed = False
        for v in variables:
            extra = set()
            for u in below[v]:
                extra |= below[u]
            if not extra <= below[v]:
                below[v] |= extra
                changed = True

    return below


def extend(M, p, xi=None):
    '''
    phi /\\ psi의 모델 M을 틸드 변수까지 확장합니다: M~v = {Mu : u < v}.
    결과가 Xi를 만족하지 않으면 ExtensionFailed가 발생합니다.
    '''
    if xi is None:
        xi = translate(p)

    values = SetAssignment(p.complete(M))
    variables = p.variables()

    if not (evaluate(values, list(p.phi)) and evaluate(values, list(p.psi))):
        raise PreconditionViolated("M", "할당이 phi /\\ psi를 만족하지 않습니다")

    below = membership_closure(values, variables)
    for v in variables:
        values[xi.tilde[v]] = hf.make(values[u] for u in below[v])

    if not evaluate(values, xi):
        broken = [str(c) for c in xi.conjuncts if not c.holds(values)]
        raise ExtensionFailed("확장한 할당이 Xi를 만족하지 않습니다: %s" % "; ".join(broken[:5]))

    return values


class NestedResult(Result):
    '''
    solve_nested()의 결과. sat, model, xi, decision, steps, timing, counts 속성을 가집니다.
    '''

    def __str__(self):
        return "SAT" if self.sat else "UNSAT"


def solve_nested(p, activity=False, trace=False, polarity=True, debug_asserts=None, dump_cnf=None):
    '''
    translate -> decide -> flatten -> lift 파이프라인. NestedResult를 반환합니다.
    '''
    timer = common.StageTimer()

    with timer('translate'):
        xi = translate(p)
        f = xi.formula(p.phi)

    with timer('decide'):
        decision = decide(f, activity=activity, polarity=polarity, dump_cnf=dump_cnf)

    counts = {
        'vars': len(p.vars),
        'variables': len(p.variables()),
        'atoms': len(p.literals),
        'psi': len(p.psi),
        'xi': len(xi),
        'cnf_vars': decision.stats['cnf_vars'],
        'cnf_clauses': decision.stats['cnf_clauses'],
    }

    model = None
    steps = [] if trace else None

    if decision.sat:
        with timer('flatten'):
            params = FlatParams.for_problem(p, xi)
            M0 = flatten(decision.model, xi.all_variables(), params.flat_rank, params)
        with timer('lift'):
            model = lift(p, M0, params, xi=xi, debug_asserts=debug_asserts, trace=steps)
        with timer('verify'):
            if not (evaluate(model, p) and evaluate(model, list(p.phi))):
                raise LiftInvariantBroken("최종 모델이 입력 문제를 만족하지 않습니다")
        counts['flat_rank'] = params.flat_rank

    return NestedResult(sat=decision.sat, model=model, xi=xi, decision=decision,
                        steps=steps or [], timing=timer.timing, counts=counts)


def solve_flat(f, activity=False, polarity=True, dump_cnf=None):
    '''
    싱글톤이 없는 BST+ 식을 판정하고, SAT이면 (변수 수 + 1)-평탄 HF 모델을 만듭니다.
    '''
    timer = common.StageTimer()

    with timer('decide'):
        decision = decide(f, activity=activity, polarity=polarity, dump_cnf=dump_cnf)

    model = None
    if decision.sat:
        with timer('flatten'):
            variables = f.variables()
            model = flatten(decision.model, variables, len(variables) + 1)
        with timer('verify'):
            if not evaluate(model, f):
                raise LiftInvariantBroken("평탄 모델이 식을 만족하지 않습니다")

    counts = {
        'vars': len(f.variables()),
        'atoms': len(list(f.atoms())),
        'cnf_vars': decision.stats['cnf_vars'],
        'cnf_clauses': decision.stats['cnf_clauses'],
    }

    return NestedResult(sat=decision.sat, model=model, xi=None, decision=decision,
                        steps=[], timing=timer.timing, counts=counts)
