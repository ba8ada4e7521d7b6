# 평탄 원자(BST+와 목록 (2)의 관계, 등식)의 명제 결합을 판정합니다.
#
# 모든 기본 원자는 원소별 전칭 조건 "모든 원소 e에 대해 P_A(e의 멤버십 행)"입니다.
# 따라서 원자 A가 거짓이려면 증인 원소 하나면 충분하고, 원소 예산은 서로 다른 원자의 수 k로 충분합니다.
# 원소 i는 원자 i의 전용 증인입니다. 원래 모델에서 증인 행을 복사해 오면 되고,
# 다른 원소의 행은 전칭 원자의 진리값을 바꾸지 않기 때문입니다.

import itertools
import bstkit.core.common as common
from bstkit.core.module import Result
from bstkit.core.sat import CnfInstance, Solver
from bstkit.core.exceptions import EncodingException, SolverException
from bstkit.core.syntax import (Literal, Connective, And, Or, Not, Implies, Iff, Singleton,
                                DiffEq, DiffNeq, Empty, NotEmpty, Subseteq, NotSubseteq, StrictSub,
                                InterEq, InterNeq, UnionEq, UnionNeq, Disj, NotDisj, VarEq, VarNeq)

# 부정형 리터럴 -> 양의 기본 원자 클래스
NEGATIVE_FORMS = {
    DiffNeq: DiffEq,
    NotEmpty: Empty,
    NotSubseteq: Subseteq,
    InterNeq: InterEq,
    UnionNeq: UnionEq,
    NotDisj: Disj,
    VarNeq: VarEq,
}

# 출현 극성 비트
POSITIVE = 1
NEGATIVE = 2
BOTH = POSITIVE | NEGATIVE


def _canonical(atom):
    '''
    대칭인 원자의 인자 순서를 정규화합니다.
    '''
    cls = type(atom)
    if cls in (Disj, VarEq):
        return cls(*sorted(atom.args))
    if cls in (InterEq, UnionEq):
        (x, y, z) = atom.args
        return cls(x, *sorted((y, z)))
    return atom


def normalize(f):
    '''
    부정형 리터럴을 Not(기본 원자)로, StrictSub를 포함 두 개로 바꾸고 대칭 원자를 정규화합니다.
    '''
    if isinstance(f, Singleton):
        raise EncodingException("평탄 식에 싱글톤 원자 '%s'이(가) 있습니다" % f)

    if isinstance(f, Literal):
        cls = type(f)
        if cls is StrictSub:
            (x, y) = f.args
            return And(Subseteq(x, y), Not(Subseteq(y, x)))
        if cls in NEGATIVE_FORMS:
            return Not(_canonical(NEGATIVE_FORMS[cls](*f.args)))
        return _canonical(f)

    if isinstance(f, Not):
        inner = normalize(f.args[0])
        # 이중 부정 제거
        if isinstance(inner, Not):
            return inner.args[0]
        return Not(inner)

    if isinstance(f, Connective):
        return type(f)(*[normalize(a) for a in f.args])

    raise TypeError("정규화할 수 없는 객체: %r" % (f,))


def truth_table(atom):
    '''
    원자의 원소별 조건 P_A를 (변수 목록, 참인 행 목록, 거짓인 행 목록)으로 계산합니다.
    각 행은 변수 -> 0/1 딕셔너리입니다.
    '''
    variables = atom.variables()
    true_rows = []
    false_rows = []

    for bits in itertools.product((0, 1), repeat=len(variables)):
        row = dict(zip(variables, bits))
        if atom.test(row, 1):
            true_rows.append(row)
        else:
            false_rows.append(row)

    return (variables, true_rows, false_rows)


class Encoding(object):
    '''
    encode()의 결과.

        cnf        - CnfInstance
        atoms      - 정규화된 기본 원자 -> 지시 변수 b_A
        elements   - 실체화된 원소의 소유 원자 목록 (원소 인덱스 순)
        membership - (원소 인덱스, 집합 변수) -> 멤버십 변수
        variables  - 식의 집합 변수 (처음 등장 순서)
        polarity   - 원자 -> 출현 극성 비트
    '''

    def __init__(self, cnf, atoms, elements, membership, variables, polarity):
        self.cnf = cnf
        self.atoms = atoms
        self.elements = elements
        self.membership = membership
        self.variables = variables
        self.polarity = polarity

    @property
    def budget(self):
        return len(self.atoms)

    def decode(self, result):
        '''
        SAT 할당을 AbstractModel로 해석합니다.
        '''
        columns = dict((v, 0) for v in self.variables)
        for e in range(len(self.elements)):
            for v in self.variables:
                if result.value(self.membership[(e, v)]):
                    columns[v] |= 1 << e
        return AbstractModel(self.variables, columns, len(self.elements))


class _Encoder(object):

    def __init__(self, f, polarity):
        self.formula = normalize(f)
        self.full = not polarity
        self.cnf = CnfInstance()
        self.atoms = {}
        self.order = []
        self.occurs = {}

    def _atom_var(self, atom, pol):
        if atom not in self.atoms:
            self.atoms[atom] = self.cnf.new_var()
            self.order.append(atom)
            self.occurs[atom] = 0
        self.occurs[atom] |= pol
        return self.atoms[atom]

    def _lit(self, node, pol):
        '''
        Tseitin 변환. pol은 이 노드가 나타나는 극성이며, 전체 인코딩에서는 항상 BOTH입니다.
        '''
        if self.full:
            pol = BOTH

        if isinstance(node, Literal):
            return self._atom_var(node, pol)

        if isinstance(node, Not):
            flipped = ((pol & POSITIVE) and NEGATIVE) | ((pol & NEGATIVE) and POSITIVE)
            return -self._lit(node.args[0], flipped)

        if isinstance(node, Implies):
            (lhs, rhs) = node.args
            node = Or(Not(lhs), rhs)

        if isinstance(node, Iff):
            a = self._lit(node.args[0], BOTH)
            b = self._lit(node.args[1], BOTH)
            t = self.cnf.new_var()
            if pol & POSITIVE:
                self.cnf.add_clause([-t, -a, b])
                self.cnf.add_clause([-t, a, -b])
            if pol & NEGATIVE:
                self.cnf.add_clause([t, a, b])
                self.cnf.add_clause([t, -a, -b])
            return t

        children = [self._lit(a, pol) for a in node.args]
        t = self.cnf.new_var()

        if isinstance(node, And):
            if pol & POSITIVE:
                for c in children:
                    self.cnf.add_clause([-t, c])
            if pol & NEGATIVE:
                self.cnf.add_clause([t] + [-c for c in children])
        elif isinstance(node, Or):
            if pol & POSITIVE:
                self.cnf.add_clause([-t] + children)
            if pol & NEGATIVE:
                for c in children:
                    self.cnf.add_clause([t, -c])
        else:
            raise TypeError("알 수 없는 결합자: %r" % (node,))

        return t

    def encode(self):
        top = self.formula.args if isinstance(self.formula, And) else (self.formula,)
        for conjunct in top:
            self.cnf.add_clause([self._lit(conjunct, POSITIVE)])

        if self.full:
            elements = list(self.order)
        else:
            elements = [a for a in self.order if self.occurs[a] & NEGATIVE]

        variables = self.formula.variables()
        membership = {}
        for e in range(len(elements)):
            for v in variables:
                membership[(e, v)] = self.cnf.new_var()

        def block(e, row):
            return [-membership[(e, v)] if bit else membership[(e, v)] for (v, bit) in row.items()]

        for atom in self.order:
            b = self.atoms[atom]
            (_, true_rows, false_rows) = truth_table(atom)

            # b_A -> 모든 원소에서 P_A
            if self.full or self.occurs[atom] & POSITIVE:
                for e in range(len(elements)):
                    for row in false_rows:
                        self.cnf.add_clause([-b] + block(e, row))

            # not b_A -> 전용 증인 원소에서 not P_A
            if self.full or self.occurs[atom] & NEGATIVE:
                e = elements.index(atom)
                for row in true_rows:
                    self.cnf.add_clause([b] + block(e, row))

        return Encoding(self.cnf, self.atoms, elements, membership, variables, self.occurs)


def encode(f, polarity=True):
    '''
    증인 개수가 제한된 CNF 인코딩.

    @f        - 싱글톤이 없는 평탄 식.
    @polarity - True이면 출현 극성에 필요한 방향의 절만 만듭니다 (Plaisted-Greenbaum).
                False이면 모든 원자에 대해 양방향 절과 k개 원소를 모두 만듭니다.

    Encoding을 반환합니다.
    '''
    encoding = _Encoder(f, polarity).encode()
    common.debug("encode: %d atoms, %d elements, %d vars, %d clauses" %
                 (len(encoding.atoms), len(encoding.elements), encoding.cnf.num_vars, len(encoding.cnf.clauses)))
    return encoding


class AbstractModel(object):
    '''
    원소 식별을 제외하고 집합 할당을 유한하게 표현합니다.
    columns[v]는 변수 v에 속한 원소들의 비트마스크입니다. 비활성 원소는 어떤 변수에도 속하지 않습니다.
    '''

    def __init__(self, variables, columns, size):
        self.variables = list(variables)
        self.columns = columns
        self.size = size

    @property
    def elements(self):
        return list(range(self.size))

    @property
    def full(self):
        return (1 << self.size) - 1

    def member(self, e, v):
        return bool(self.columns.get(v, 0) >> e & 1)

    def signature(self, e, variables=None):
        '''
        원소 e의 서명: variables(기본값: 모델의 변수 목록) 인덱스에 대한 비트마스크.
        '''
        if variables is None:
            variables = self.variables
        w = 0
        for (i, v) in enumerate(variables):
            if self.member(e, v):
                w |= 1 << i
        return w

    def active(self, e):
        return any(self.member(e, v) for v in self.variables)

    def regions(self, variables=None):
        '''
        실현된 비어 있지 않은 서명들의 집합.
        '''
        return set(w for w in (self.signature(e, variables) for e in self.elements) if w)

    def evaluate(self, f):
        '''
        원소별 의미론으로 f의 진리값을 계산합니다.
        '''
        return bool(f.test(self.columns, self.full))

    def __str__(self):
        lines = []
        for v in self.variables:
            lines.append("%s: %s" % (v, [e for e in self.elements if self.member(e, v)]))
        return "\n".join(lines)


class Decision(Result):
    '''
    decide()의 결과. sat, model(AbstractModel 또는 None), encoding, stats 속성을 가집니다.
    '''

    def __str__(self):
        return "SAT" if self.sat else "UNSAT"


def decide(f, activity=False, polarity=True, dump_cnf=None):
    '''
    평탄 식 f의 만족 가능성을 판정합니다.

    @f        - 싱글톤 원자가 없는 Formula.
    @activity - VSIDS 분기 사용 여부.
    @polarity - 극성 기반 인코딩 사용 여부 (encode 참조).
    @dump_cnf - 주어지면 DIMACS CNF를 이 경로에 씁니다.

    Decision을 반환합니다. SAT이면 디코딩한 모델로 f를 다시 평가하며, 거짓이면 SolverException이 발생합니다.
    '''
    encoding = encode(f, polarity=polarity)

    if dump_cnf:
        with open(dump_cnf, "w") as fp:
            fp.write(encoding.cnf.to_dimacs(comments=["bstkit: %d atoms, %d elements" %
                                                      (len(encoding.atoms), len(encoding.elements))]))

    result = Solver(encoding.cnf, activity=activity).solve()

    stats = dict(result.stats)
    stats.update({
        'atoms': len(encoding.atoms),
        'elements': len(encoding.elements),
        'cnf_vars': encoding.cnf.num_vars,
        'cnf_clauses': len(encoding.cnf.clauses),
    })

    model = None
    if result.sat:
        model = encoding.decode(result)
        if not model.evaluate(f):
            raise SolverException("디코딩한 모델이 식을 만족하지 않습니다:\n%s" % model)

    common.debug("decide: %s %s" % ("SAT" if result.sat else "UNSAT", stats))

    return Decision(sat=result.sat, model=model, encoding=encoding, stats=stats)
