# 유전적 유한(HF) 집합 커널입니다.
# 모든 HFSet은 해시 컨싱으로 인터닝되므로, 외연이 같은 두 집합은 항상 동일한 객체입니다.
# 따라서 동등 비교는 `is`로 충분하며, 깊은 체인을 공유하는 모델도 메모리를 적게 씁니다.

import weakref
import threading
from bstkit.core.common import Report
from bstkit.core.exceptions import ParserException, PreconditionViolated, BudgetExceeded

# enumerate_level이 허용하는 최대 레벨. |V_5| = 65536이 실질적인 한계입니다.
LEVEL_LIMIT = 4

# level_size가 계산할 수 있는 최대 지수 비트 수
EXPONENT_LIMIT = 1 << 20

_TABLE = weakref.WeakValueDictionary()
_LOCK = threading.RLock()


class HFSet(object):
    '''
    불변, 정규형의 HF 집합.

    members는 (rank, 구조 키) 순으로 정렬된 중복 없는 튜플이고, rank는 캐시됩니다.
    직접 생성하지 말고 hfset(), singleton() 등의 함수를 사용하십시오.
    '''

    __slots__ = ('members', 'rank', 'key', '_hash', '_set', '__weakref__')

    def __init__(self, members):
        self.members = members
        self.rank = max(m.rank for m in members) + 1 if members else 0
        # 구조 키: 같은 rank 안에서의 전순서. 인터닝된 하위 키 튜플은 공유되므로 비교가 빠릅니다.
        self.key = (self.rank, len(members), tuple(m.key for m in members))
        self._hash = hash(tuple(m._hash for m in members)) ^ 0x5bd1e995
        self._set = frozenset(members)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __bool__(self):
        return bool(self.members)

    def __contains__(self, item):
        return item in self._set

    def __sub__(self, other):
        return diff(self, other)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return inter(self, other)

    def __le__(self, other):
        return subset(self, other)

    def __lt__(self, other):
        return self is not other and subset(self, other)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "HFSet('%s')" % render(self)

    def __reduce__(self):
        # 피클링 후에도 인터닝이 유지되도록 중괄호 표기를 통해 다시 만듭니다.
        return (from_braces, (render(self),))


def _intern_sorted(members):
    '''
    이미 정규 순서로 정렬된 멤버 튜플을 인터닝합니다.
    '''
    with _LOCK:
        node = _TABLE.get(members)
        if node is None:
            node = HFSet(members)
            _TABLE[members] = node
    return node


def make(members):
    '''
    임의의 HFSet 반복 가능 객체로부터 정규 집합을 만듭니다.
    '''
    unique = set(members)
    for m in unique:
        if not isinstance(m, HFSet):
            raise TypeError("HF 집합의 원소는 HFSet이어야 합니다: %r" % (m,))
    return _intern_sorted(tuple(sorted(unique, key=_order_key)))


def hfset(*members):
    return make(members)


def _order_key(s):
    return s.key


EMPTY = _intern_sorted(())


def diff(a, b):
    if not b.members or not a.members:
        return a
    return _intern_sorted(tuple(m for m in a.members if m not in b._set))


def union(a, b):
    if not b.members:
        return a
    if not a.members:
        return b
    return _intern_sorted(tuple(sorted(a._set | b._set, key=_order_key)))


def inter(a, b):
    if len(b.members) < len(a.members):
        a, b = b, a
    return _intern_sorted(tuple(m for m in a.members if m in b._set))


def singleton(a):
    return _intern_sorted((a,))


def member(a, b):
    return a in b._set


def subset(a, b):
    if len(a.members) > len(b.members):
        return False
    return all(m in b._set for m in a.members)


def rank(s):
    return s.rank


_CHAINS = [EMPTY]


def chain(k):
    '''
    체르멜로 체인: chain(0) = {}, chain(k+1) = {chain(k)}. rank(chain(k)) = k.
    '''
    if k < 0:
        raise PreconditionViolated(k, "chain의 인자는 음수일 수 없습니다: %d" % k)

    with _LOCK:
        while len(_CHAINS) <= k:
            _CHAINS.append(singleton(_CHAINS[-1]))
        return _CHAINS[k]


def im_inject(w_index, flat_rank):
    '''
    비어 있지 않은 변수 부분집합(비트마스크 w_index)을 rank가 정확히 flat_rank인 집합으로 보냅니다.

        s_J = {chain(flat_rank - 1)} U {chain(j) : j in J}

    J는 w_index의 이진 분해입니다. w_index < 2^(flat_rank - 1) 이어야 하며, 0은 허용되지 않습니다.
    '''
    if flat_rank < 1:
        raise PreconditionViolated(flat_rank, "flat rank는 1 이상이어야 합니다: %d" % flat_rank)
    if w_index < 1 or w_index >= (1 << (flat_rank - 1)):
        raise PreconditionViolated(w_index, "영역 인덱스 %d이(가) [1, 2^%d - 1] 범위를 벗어났습니다" % (w_index, flat_rank - 1))

    members = [chain(flat_rank - 1)]
    j = 0
    while w_index:
        if w_index & 1:
            members.append(chain(j))
        w_index >>= 1
        j += 1

    return make(members)


def render(s):
    '''
    정규 멤버 순서의 중괄호 표기. 예: {{},{{}}}
    재귀 깊이 제한을 피하기 위해 명시적 스택을 사용합니다.
    '''
    done = {}
    stack = [s]

    while stack:
        node = stack[-1]
        if node in done:
            stack.pop()
            continue
        pending = [m for m in node.members if m not in done]
        if pending:
            stack.extend(pending)
        else:
            done[node] = "{" + ",".join(done[m] for m in node.members) + "}"
            stack.pop()

    return done[s]


def from_braces(text):
    '''
    중괄호 표기를 HFSet으로 파싱합니다. 공백은 무시됩니다.
    '''
    stack = []
    result = None

    for (column, c) in enumerate(text, 1):
        if c == '{':
            if result is not None:
                raise ParserException("집합 뒤에 추가 문자가 있습니다", 1, column)
            stack.append([])
        elif c == '}':
            if not stack:
                raise ParserException("짝이 맞지 않는 '}'", 1, column)
            node = make(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                result = node
        elif c == ',' or c.isspace():
            continue
        else:
            raise ParserException("예상하지 못한 문자 '%s'" % c, 1, column)

    if stack or result is None:
        raise ParserException("완결되지 않은 집합 표기: '%s'" % text, 1, len(text))

    return result


class LevelTable(object):
    '''
    폰 노이만 레벨 V_n의 모든 집합. sets[i]는 V_(n-1)에 대한 비트마스크 i의 부분집합입니다.
    '''

    def __init__(self, n, sets):
        self.n = n
        self.sets = sets

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return s.rank < self.n


_LEVELS = {0: LevelTable(0, [])}


def enumerate_level(n):
    '''
    V_0 = {}, V_(n+1) = P(V_n). n은 LEVEL_LIMIT 이하여야 합니다.
    '''
    if n < 0:
        raise PreconditionViolated(n, "레벨은 음수일 수 없습니다: %d" % n)
    if n > LEVEL_LIMIT:
        raise BudgetExceeded("V_%d은(는) 열거할 수 없습니다 (최대 %d)" % (n, LEVEL_LIMIT))

    with _LOCK:
        if n not in _LEVELS:
            below = enumerate_level(n - 1).sets
            sets = []
            for mask in range(1 << len(below)):
                sets.append(make(below[i] for i in range(len(below)) if mask >> i & 1))
            _LEVELS[n] = LevelTable(n, sets)
        return _LEVELS[n]


def level_size(n):
    '''
    |V_n|을 큰 정수로 계산합니다. |V_0| = 0, |V_(n+1)| = 2^|V_n|.
    '''
    size = 0
    for _ in range(n):
        if size > EXPONENT_LIMIT:
            raise BudgetExceeded("|V_%d|은(는) 너무 커서 표현할 수 없습니다" % n)
        size = 1 << size
    return size


def sharp_size(n):
    '''
    rank가 정확히 n인 집합의 수: |V#_n| = 2^|V_n| - |V_n|.
    '''
    size = level_size(n)
    if size > EXPONENT_LIMIT:
        raise BudgetExceeded("|V#_%d|은(는) 너무 커서 표현할 수 없습니다" % n)
    return (1 << size) - size


def enumerate_sharp(n):
    '''
    V_n의 부분집합 비트마스크를 모두 열거하면서 rank가 정확히 n인 것의 수를 셉니다 (n <= 4).
    '''
    if n < 1:
        return 1 if n == 0 else 0
    below = enumerate_level(n).sets
    top = 0
    for (i, s) in enumerate(below):
        if s.rank == n - 1:
            top |= 1 << i
    return sum(1 for mask in range(1 << len(below)) if mask & top)


def bound_checks(n_max):
    '''
    부록의 두 부등식을 검사합니다.

        2^(2^n) >= 3 * 2^n - 2n          (1 <= n <= n_max)
        |V#_n| >= 2^(n-1)                (n <= 4는 열거, n <= 6은 점화식)

    위반된 경우를 담은 Report를 반환합니다.
    '''
    report = Report("appendix bounds")

    for n in range(1, n_max + 1):
        report.checked += 1
        lhs = 1 << (1 << n)
        rhs = 3 * (1 << n) - 2 * n
        if lhs < rhs:
            report.violation(("power", n))

    for n in range(1, min(n_max, 6) + 1):
        report.checked += 1
        bound = 1 << (n - 1)
        if n <= LEVEL_LIMIT:
            count = enumerate_sharp(n)
            report.details['sharp_%d' % n] = count
            if count != sharp_size(n) or count < bound:
                report.violation(("rank count", n, count))
        else:
            size = level_size(n)
            if size <= EXPONENT_LIMIT:
                holds = sharp_size(n) >= bound
                report.details['sharp_%d' % n] = "exact"
            else:
                # 2^k - k >= 2^(k-1) >= 2^(n-1) for k >= n
                holds = size >= n
                report.details['sharp_%d' % n] = "monotone"
            if not holds:
                report.violation(("rank count", n))

    return report


AXIOMS = (
    ("x\\(y\\y) = x", lambda x, y, z: diff(x, diff(y, y)) is x),
    ("(x\\y)\\z = (x\\z)\\y", lambda x, y, z: diff(diff(x, y), z) is diff(diff(x, z), y)),
    ("x\\(x\\y) = y\\(y\\x)", lambda x, y, z: diff(x, diff(x, y)) is diff(y, diff(y, x))),
    ("(x\\y)\\y = x\\y", lambda x, y, z: diff(diff(x, y), y) is diff(x, y)),
)


def check_axioms(sample):
    '''
    차집합 대수의 네 공리를 (x, y, z) 삼중쌍 표본에서 검사합니다.
    '''
    report = Report("difference axioms")

    for (x, y, z) in sample:
        report.checked += 1
        for (name, holds) in AXIOMS:
            if not holds(x, y, z):
                report.violation((name, render(x), render(y), render(z)))

    return report
