# 전수 탐색 오라클과 인스턴스 생성기입니다.
# 오라클은 명백히 올바르도록 대칭 축소나 가지치기를 하지 않습니다.

import itertools
import numpy as np
import bstkit.core.hf as hf
import bstkit.core.common as common
from bstkit.core.syntax import (Var, Problem, And, Or, Not, Implies, Iff, Singleton, DiffEq, DiffNeq,
                                ALL_LITERALS)
from bstkit.core.models import SetAssignment
from bstkit.core.exceptions import BudgetExceeded, UsageException

try:
    from numba import njit  # numba가 있으면 JIT 컴파일로 인덱스 해석을 빠르게 합니다
except ImportError:
    def njit(func):
        return func

# flat_sat의 최대 할당 수 (2^k)^n
FLAT_BUDGET = 1 << 24

# nested_sat의 최대 할당 수 |V_level|^n
NESTED_BUDGET = 1 << 20

# 한 번에 평가할 할당 인덱스 수
CHUNK_SIZE = 1 << 16

FLAT_LITERALS = tuple(cls for cls in ALL_LITERALS if cls is not Singleton)


@njit
def _unpack(indices, shift, full):
    out = np.empty(indices.shape[0], dtype=np.int64)
    for i in range(indices.shape[0]):
        out[i] = (indices[i] >> shift) & full
    return out


class FlatUniverse(object):
    '''
    k원소 우주. 할당 인덱스 i에서 j번째 변수의 값은 i의 j번째 k비트 필드입니다.
    '''

    def __init__(self, k, variables):
        self.k = k
        self.variables = list(variables)
        self.full = (1 << k) - 1
        self.size = 1 << (k * len(self.variables))

    def decode(self, index):
        return dict((v, (index >> (self.k * j)) & self.full) for (j, v) in enumerate(self.variables))

    def __iter__(self):
        for index in range(self.size):
            yield self.decode(index)

    def chunks(self, start=0, stop=None, chunk=CHUNK_SIZE):
        '''
        (인덱스 배열, 변수 -> 값 배열) 쌍을 생성합니다.
        '''
        if stop is None or stop > self.size:
            stop = self.size
        for lo in range(start, stop, chunk):
            indices = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
            env = dict((v, _unpack(indices, self.k * j, self.full)) for (j, v) in enumerate(self.variables))
            yield (indices, env)


class OracleResult(object):

    def __init__(self, sat, witness=None, checked=0):
        self.sat = sat
        self.witness = witness
        self.checked = checked

    def __bool__(self):
        return self.sat

    def __str__(self):
        return "SAT" if self.sat else "UNSAT"


def flat_sat(f, k, start=0, stop=None):
    '''
    k원소 우주 위의 모든 할당을 평가합니다.

    @f     - 싱글톤 원자가 없는 식.
    @k     - 우주 크기.
    @start - 시작 할당 인덱스 (범위 분할용).
    @stop  - 끝 할당 인덱스 (생략 시 전체).

    OracleResult를 반환합니다. witness는 변수 -> 비트마스크 딕셔너리입니다.
    '''
    universe = FlatUniverse(k, f.variables())
    if universe.size > FLAT_BUDGET:
        raise BudgetExceeded("(2^%d)^%d 할당은 예산 2^24를 넘습니다" % (k, len(universe.variables)))

    checked = 0
    for (indices, env) in universe.chunks(start, stop):
        truth = np.broadcast_to(np.asarray(f.test(env, universe.full), dtype=bool), indices.shape)
        checked += len(indices)
        hits = np.flatnonzero(truth)
        if len(hits):
            return OracleResult(True, universe.decode(int(indices[hits[0]])), checked)

    return OracleResult(False, None, checked)


def nested_sat(p, level, fixed=None):
    '''
    사용자 변수를 V_level의 집합들에 할당하는 모든 경우를 평가합니다.
    제한된 레벨에서의 UNSAT은 전체 우주에서의 UNSAT을 뜻하지 않습니다.

    @p     - Problem.
    @level - 폰 노이만 레벨. V_4까지 허용하며 (x = {y}, y = {z}, z != 0 의 모델은 V_4에만 있습니다),
             그보다 크면 BudgetExceeded가 발생합니다.
    @fixed - 값을 고정할 변수 -> HFSet 딕셔너리.
    '''
    fixed = dict((Var(v), s) for (v, s) in (fixed or {}).items())
    free = [v for v in p.vars if v not in fixed]
    sets = hf.enumerate_level(level).sets

    if len(sets) ** len(free) > NESTED_BUDGET:
        raise BudgetExceeded("|V_%d|^%d 할당은 예산 2^20을 넘습니다" % (level, len(free)))

    checked = 0
    for values in itertools.product(sets, repeat=len(free)):
        M = SetAssignment(fixed)
        M.update(zip(free, values))
        checked += 1
        if all(lit.holds(M) for lit in p.literals):
            return OracleResult(True, M, checked)

    return OracleResult(False, None, checked)


class Profile(object):
    '''
    생성기 프로필.

        name        - 'empty', 'random', 'planted'
        variables   - 변수 수
        diff        - DiffEq/DiffNeq 리터럴 수
        singletons  - Singleton 원자 수
        planted     - True이면 모델을 먼저 심고 그 모델이 만족하는 리터럴만 냅니다
        neq_ratio   - random 프로필에서 DiffNeq의 비율
    '''

    DEFAULTS = {
        'empty': dict(variables=0, diff=0, singletons=0, planted=True, neq_ratio=0.0),
        'random': dict(variables=4, diff=4, singletons=2, planted=False, neq_ratio=0.5),
        'planted': dict(variables=4, diff=3, singletons=2, planted=True, neq_ratio=0.5),
    }

    def __init__(self, name, variables=0, diff=0, singletons=0, planted=True, neq_ratio=0.5):
        self.name = name
        self.variables = variables
        self.diff = diff
        self.singletons = singletons
        self.planted = planted
        self.neq_ratio = neq_ratio

    @classmethod
    def named(cls, name, **overrides):
        if name not in cls.DEFAULTS:
            raise UsageException("알 수 없는 프로필 '%s' (%s)" % (name, ", ".join(sorted(cls.DEFAULTS))))
        params = dict(cls.DEFAULTS[name])
        params.update(overrides)
        return cls(name, **params)

    @classmethod
    def parse(cls, text):
        '''
        "planted:vars=3,diff=2,singletons=1" 형식을 파싱합니다.
        '''
        (name, _, rest) = text.partition(':')
        overrides = {}
        keys = {'vars': ('variables', int), 'variables': ('variables', int), 'diff': ('diff', int),
                'singletons': ('singletons', int), 'neq': ('neq_ratio', float), 'neq_ratio': ('neq_ratio', float)}

        for item in filter(None, (s.strip() for s in rest.split(','))):
            (key, _, value) = item.partition('=')
            if key not in keys:
                raise UsageException("알 수 없는 프로필 항목 '%s'" % key)
            (attr, conv) = keys[key]
            try:
                overrides[attr] = conv(value)
            except ValueError:
                raise UsageException("프로필 항목 '%s'의 값이 잘못되었습니다: '%s'" % (key, value))

        return cls.named(name.strip(), **overrides)

    def __str__(self):
        return "%s:vars=%d,diff=%d,singletons=%d" % (self.name, self.variables, self.diff, self.singletons)


def _names(n):
    return [Var("v%d" % i) for i in range(1, n + 1)]


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _planted(rng, profile):
    names = _names(profile.variables)
    base = hf.enumerate_level(2).sets
    M = SetAssignment()
    literals = []
    singletons = profile.singletons
    diffs = profile.diff

    for (i, v) in enumerate(names):
        roll = rng.random()
        if i > 0 and singletons and roll < 0.5:
            y = _pick(rng, names[:i])
            M[v] = hf.singleton(M[y])
            literals.append(Singleton(v, y))
            singletons -= 1
        elif i > 1 and diffs and roll < 0.8:
            (a, b) = (_pick(rng, names[:i]), _pick(rng, names[:i]))
            M[v] = hf.diff(M[a], M[b])
            literals.append(DiffEq(v, a, b))
            diffs -= 1
        else:
            M[v] = _pick(rng, base)

    # 남은 싱글톤은 이미 심은 값 중 x = {My}가 성립하는 쌍에서만 냅니다.
    pairs = [(x, y) for x in names for y in names if M[x] is hf.singleton(M[y])]
    while singletons and pairs:
        (x, y) = _pick(rng, pairs)
        literals.append(Singleton(x, y))
        singletons -= 1

    while diffs and names:
        (x, y, z) = (_pick(rng, names), _pick(rng, names), _pick(rng, names))
        if M[x] is hf.diff(M[y], M[z]):
            literals.append(DiffEq(x, y, z))
        else:
            literals.append(DiffNeq(x, y, z))
        diffs -= 1

    p = Problem(literals)
    p.certificate = M.restrict(p.vars)
    return p


def _random(rng, profile):
    names = _names(profile.variables)
    literals = []

    for _ in range(profile.diff):
        args = [_pick(rng, names) for _ in range(3)]
        cls = DiffNeq if rng.random() < profile.neq_ratio else DiffEq
        literals.append(cls(*args))
    for _ in range(profile.singletons):
        literals.append(Singleton(_pick(rng, names), _pick(rng, names)))

    order = rng.permutation(len(literals))
    return Problem([literals[i] for i in order])


def generate(seed, profile):
    '''
    재현 가능한 임의 문제를 만듭니다. 심은 모델은 problem.certificate에 남습니다.

    @seed    - 정수 시드.
    @profile - Profile 또는 프로필 문자열.
    '''
    if not isinstance(profile, Profile):
        profile = Profile.parse(profile)

    if profile.variables == 0:
        p = Problem()
        p.certificate = SetAssignment()
        return p

    rng = np.random.default_rng(seed)
    p = _planted(rng, profile) if profile.planted else _random(rng, profile)
    common.debug("generate(%d, %s): %s" % (seed, profile, p))
    return p


def random_literal(rng, variables, classes=FLAT_LITERALS):
    cls = _pick(rng, classes)
    return cls(*[_pick(rng, variables) for _ in range(cls.ARITY)])


def random_formula(rng, variables, atoms, depth):
    '''
    원자 atoms개 이하, 깊이 depth 이하의 임의 평탄 식.
    '''
    variables = [Var(v) for v in variables]
    if depth <= 0 or atoms <= 1:
        return random_literal(rng, variables)

    kind = int(rng.integers(5))
    if kind == 0:
        return Not(random_formula(rng, variables, atoms, depth - 1))

    left = max(1, atoms // 2)
    lhs = random_formula(rng, variables, left, depth - 1)
    rhs = random_formula(rng, variables, atoms - left, depth - 1)
    return (And, Or, Implies, Iff)[kind - 1](lhs, rhs)


def random_flat_conjunction(rng, variables, atoms):
    variables = [Var(v) for v in variables]
    return And(*[random_literal(rng, variables) for _ in range(atoms)])


def flat_atoms(variables):
    '''
    주어진 변수들 위의 모든 평탄 원자 (리터럴 종류 순, 인자 튜플의 사전 순).
    '''
    variables = [Var(v) for v in variables]
    return [cls(*args) for cls in FLAT_LITERALS for args in itertools.product(variables, repeat=cls.ARITY)]
