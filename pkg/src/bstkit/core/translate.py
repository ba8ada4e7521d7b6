# 중첩 문제 phi /\ psi를 평탄 논리곱 Xi로 옮깁니다.
# 출력 순서는 고정되어 있습니다:
#
#   (a) x = {y} in psi 마다         x nsub y
#   (b) x = {y} in psi, v in Vars 마다
#                                   ndisj(x,v) -> x sub v
#                                   ndisj(x,v) -> ~y ssub ~v
#   (c) psi 원자 쌍 (비순서)         y = y' <-> x = x'
#   (d) 변수 쌍 (비순서)             x = y -> ~x = ~y
#
# 전체 크기는 p + 2pn + p(p-1)/2 + n(n-1)/2 입니다.

import bstkit.core.common as common
from bstkit.core.syntax import (And, Iff, Implies, NotDisj, NotSubseteq, StrictSub,
                                Subseteq, VarEq, unparse)

FAMILIES = ('a', 'b', 'c', 'd')


class XiFormula(object):
    '''
    번역 결과.

        conjuncts - 순서가 있는 논리곱 항 목록
        tilde     - Vars(phi /\\ psi)의 각 변수 -> 대응하는 틸드 변수
        variables - Vars(phi /\\ psi), 처음 등장 순서
        families  - 항 묶음(a~d)별 개수
    '''

    def __init__(self, conjuncts, tilde, variables, families):
        self.conjuncts = conjuncts
        self.tilde = tilde
        self.variables = variables
        self.families = families

    def __len__(self):
        return len(self.conjuncts)

    def __iter__(self):
        return iter(self.conjuncts)

    def auxiliary(self):
        return [self.tilde[v] for v in self.variables]

    def all_variables(self):
        '''
        Vars(phi /\\ Xi): 원래 변수 다음에 모든 틸드 변수 (틸드 변수는 항상 실체화됩니다).
        '''
        return list(self.variables) + self.auxiliary()

    def atoms(self):
        for c in self.conjuncts:
            for a in c.atoms():
                yield a

    def formula(self, phi=()):
        '''
        decide에 넘길 phi /\\ Xi 논리곱을 만듭니다.
        '''
        return And(*(list(phi) + list(self.conjuncts)))

    def holds(self, M):
        return all(c.holds(M) for c in self.conjuncts)

    def __str__(self):
        return unparse(self)


def translate(p):
    '''
    문제 p에 대한 Xi를 계산합니다. 입력 순서가 같으면 출력도 바이트 단위로 같습니다.

    @p - bstkit.core.syntax.Problem.

    XiFormula를 반환합니다.
    '''
    variables = p.variables()
    psi = list(p.psi)
    tilde = dict((v, v.tilde()) for v in variables)
    conjuncts = []
    families = dict((f, 0) for f in FAMILIES)

    def emit(family, conjunct):
        conjuncts.append(conjunct)
        families[family] += 1

    # (a)
    for atom in psi:
        (x, y) = atom.args
        emit('a', NotSubseteq(x, y))

    # (b)
    for atom in psi:
        (x, y) = atom.args
        for v in variables:
            emit('b', Implies(NotDisj(x, v), Subseteq(x, v)))
            emit('b', Implies(NotDisj(x, v), StrictSub(tilde[y], tilde[v])))

    # (c)
    for i in range(len(psi)):
        (x, y) = psi[i].args
        for j in range(i + 1, len(psi)):
            (x2, y2) = psi[j].args
            emit('c', Iff(VarEq(y, y2), VarEq(x, x2)))

    # (d)
    for i in range(len(variables)):
        for j in range(i + 1, len(variables)):
            (u, v) = (variables[i], variables[j])
            emit('d', Implies(VarEq(u, v), VarEq(tilde[u], tilde[v])))

    common.debug("translate: n=%d p=%d -> %d conjuncts %s" % (len(variables), len(psi), len(conjuncts), families))

    return XiFormula(conjuncts, tilde, variables, families)


def translate_size(n, p):
    '''
    |Xi| = p + 2pn + p(p-1)/2 + n(n-1)/2.
    '''
    return p + 2 * p * n + p * (p - 1) // 2 + n * (n - 1) // 2
