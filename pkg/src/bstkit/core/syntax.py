# 제약 AST, 텍스트 입력 형식의 파서, 프리티 프린터, 파생 리터럴의 디슈가링을 담당합니다.
#
# 입력 형식 (한 줄에 하나 또는 ';'로 구분):
#
#   x = y \ z     x != y \ z     x = { y }
#   x sub y       x nsub y       x ssub y
#   x = y & z     x != y & z     x = y | z     x != y | z
#   disj(x,y)     ndisj(x,y)     x = 0         x != 0
#   x = y         x != y
#
# BST+ 파일은 추가로 and, or, not, ->, <-> 와 괄호를 허용합니다. '#'부터 줄 끝까지는 주석입니다.

import re
import threading
import numpy as np
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, UnexpectedEOF, VisitError
import bstkit.core.hf as hf
from bstkit.core.exceptions import ParserException, EncodingException, MissingVariable


class Var(object):
    '''
    집합 변수. 동등성은 이름으로 판단하며, 같은 이름의 문자열과도 같게 취급됩니다
    (따라서 할당 딕셔너리를 M['x']처럼 조회할 수 있습니다).

    예약 접두사: '~'는 틸드(보조) 변수, '_'는 디슈가링이 만든 새 변수입니다.
    '''

    __slots__ = ('name', 'kind')

    USER = 'user'
    AUXILIARY = 'auxiliary'
    FRESH = 'fresh'

    TILDE_PREFIX = '~'
    FRESH_PREFIX = '_'

    # 문법의 예약어. 변수 이름으로 쓰면 다시 파싱할 수 없습니다.
    KEYWORDS = frozenset(["not", "and", "or", "sub", "nsub", "ssub", "disj", "ndisj"])

    def __init__(self, name):
        if isinstance(name, Var):
            name = name.name
        elif name in self.KEYWORDS:
            raise ParserException("예약어 '%s'은(는) 변수 이름으로 쓸 수 없습니다" % name)
        self.name = name
        if name.startswith(self.TILDE_PREFIX):
            self.kind = self.AUXILIARY
        elif name.startswith(self.FRESH_PREFIX):
            self.kind = self.FRESH
        else:
            self.kind = self.USER

    def tilde(self):
        return Var(self.TILDE_PREFIX + self.name)

    @property
    def is_user(self):
        return self.kind == self.USER

    def __eq__(self, other):
        if isinstance(other, Var):
            return self.name == other.name
        if isinstance(other, str):
            return self.name == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.name)

    def __lt__(self, other):
        return self.name < Var(other).name

    def __str__(self):
        return self.name

    def __repr__(self):
        return "Var(%r)" % self.name


def _var(v):
    return v if isinstance(v, Var) else Var(v)


def _ordered_unique(items):
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out


class Formula(object):
    '''
    모든 AST 노드의 기본 클래스. 불변이며 구조적으로 비교/해시됩니다.
    '''

    __slots__ = ('args', '_hash')

    PRECEDENCE = 6

    def __eq__(self, other):
        return type(self) is type(other) and self.args == other.args

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def atoms(self):
        '''
        식에 나타나는 리터럴들을 왼쪽에서 오른쪽 순서로 생성합니다.
        '''
        stack = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Literal):
                yield node
            else:
                stack.extend(reversed(node.args))

    def variables(self):
        '''
        처음 등장한 순서의 변수 목록.
        '''
        return _ordered_unique(v for atom in self.atoms() for v in atom.args)

    def __str__(self):
        return unparse(self)

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, ", ".join(repr(a) for a in self.args))


class Literal(Formula):
    '''
    집합 변수 1~3개에 대한 원자 또는 그 부정.

    test(env, full)은 각 변수가 k원소 우주의 부분집합(비트마스크)을 나타낼 때의 진리값입니다.
    env 값은 파이썬 정수 또는 numpy 정수 배열일 수 있습니다.
    holds(M)은 HF 집합 할당에서의 진리값입니다.
    '''

    __slots__ = ()

    ARITY = 0
    FORMAT = ""

    def __init__(self, *args):
        if len(args) != self.ARITY:
            raise TypeError("%s은(는) 변수 %d개가 필요합니다" % (self.__class__.__name__, self.ARITY))
        self.args = tuple(_var(a) for a in args)
        self._hash = hash((self.__class__.__name__,) + self.args)

    def atoms(self):
        yield self

    def variables(self):
        return _ordered_unique(self.args)

    def rename(self, mapping):
        return self.__class__(*[mapping.get(v, v) for v in self.args])

    def test(self, env, full):
        raise NotImplementedError()

    def holds(self, M):
        raise NotImplementedError()

    def __str__(self):
        return self.FORMAT % tuple(v.name for v in self.args)


def _value(M, v):
    try:
        return M[v]
    except KeyError:
        raise MissingVariable(v)


class DiffEq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s = %s \\ %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] == (env[y] & ~env[z] & full)

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is hf.diff(_value(M, y), _value(M, z))


class DiffNeq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s != %s \\ %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] != (env[y] & ~env[z] & full)

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is not hf.diff(_value(M, y), _value(M, z))


class Singleton(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s = { %s }"

    def test(self, env, full):
        raise EncodingException("싱글톤 원자 '%s'은(는) 평탄 의미론이 없습니다" % self)

    def holds(self, M):
        (x, y) = self.args
        return _value(M, x) is hf.singleton(_value(M, y))


class Empty(Literal):
    __slots__ = ()
    ARITY = 1
    FORMAT = "%s = 0"

    def test(self, env, full):
        return env[self.args[0]] == 0

    def holds(self, M):
        return _value(M, self.args[0]) is hf.EMPTY


class NotEmpty(Literal):
    __slots__ = ()
    ARITY = 1
    FORMAT = "%s != 0"

    def test(self, env, full):
        return env[self.args[0]] != 0

    def holds(self, M):
        return _value(M, self.args[0]) is not hf.EMPTY


class Subseteq(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s sub %s"

    def test(self, env, full):
        (x, y) = self.args
        return (env[x] & ~env[y] & full) == 0

    def holds(self, M):
        (x, y) = self.args
        return hf.subset(_value(M, x), _value(M, y))


class NotSubseteq(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s nsub %s"

    def test(self, env, full):
        (x, y) = self.args
        return (env[x] & ~env[y] & full) != 0

    def holds(self, M):
        (x, y) = self.args
        return not hf.subset(_value(M, x), _value(M, y))


class StrictSub(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s ssub %s"

    def test(self, env, full):
        (x, y) = self.args
        return np.logical_and((env[x] & ~env[y] & full) == 0, env[x] != env[y])

    def holds(self, M):
        (x, y) = self.args
        (a, b) = (_value(M, x), _value(M, y))
        return a is not b and hf.subset(a, b)


class InterEq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s = %s & %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] == (env[y] & env[z])

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is hf.inter(_value(M, y), _value(M, z))


class InterNeq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s != %s & %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] != (env[y] & env[z])

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is not hf.inter(_value(M, y), _value(M, z))


class UnionEq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s = %s | %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] == (env[y] | env[z])

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is hf.union(_value(M, y), _value(M, z))


class UnionNeq(Literal):
    __slots__ = ()
    ARITY = 3
    FORMAT = "%s != %s | %s"

    def test(self, env, full):
        (x, y, z) = self.args
        return env[x] != (env[y] | env[z])

    def holds(self, M):
        (x, y, z) = self.args
        return _value(M, x) is not hf.union(_value(M, y), _value(M, z))


class Disj(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "disj(%s,%s)"

    def test(self, env, full):
        (x, y) = self.args
        return (env[x] & env[y]) == 0

    def holds(self, M):
        (x, y) = self.args
        return not hf.inter(_value(M, x), _value(M, y))


class NotDisj(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "ndisj(%s,%s)"

    def test(self, env, full):
        (x, y) = self.args
        return (env[x] & env[y]) != 0

    def holds(self, M):
        (x, y) = self.args
        return bool(hf.inter(_value(M, x), _value(M, y)))


class VarEq(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s = %s"

    def test(self, env, full):
        (x, y) = self.args
        return env[x] == env[y]

    def holds(self, M):
        (x, y) = self.args
        return _value(M, x) is _value(M, y)


class VarNeq(Literal):
    __slots__ = ()
    ARITY = 2
    FORMAT = "%s != %s"

    def test(self, env, full):
        (x, y) = self.args
        return env[x] != env[y]

    def holds(self, M):
        (x, y) = self.args
        return _value(M, x) is not _value(M, y)


# 기본 BST 리터럴
CORE_LITERALS = (DiffEq, DiffNeq)

# 파생(목록 (2)) 리터럴과 등식
DERIVED_LITERALS = (Empty, NotEmpty, Subseteq, NotSubseteq, InterEq, InterNeq,
                    UnionEq, UnionNeq, Disj, NotDisj, StrictSub, VarEq, VarNeq)

ALL_LITERALS = CORE_LITERALS + (Singleton,) + DERIVED_LITERALS


class Connective(Formula):
    __slots__ = ()

    def __init__(self, *args):
        for a in args:
            if not isinstance(a, Formula):
                raise TypeError("명제 결합자의 인자는 Formula여야 합니다: %r" % (a,))
        self.args = tuple(args)
        self._hash = hash((self.__class__.__name__,) + self.args)

    def holds(self, M):
        return bool(self.combine([a.holds(M) for a in self.args]))

    def test(self, env, full):
        return self.combine([a.test(env, full) for a in self.args])


class And(Connective):
    __slots__ = ()
    PRECEDENCE = 4

    def combine(self, values):
        result = True
        for v in values:
            result = np.logical_and(result, v)
        return result

    def holds(self, M):
        # 단락 평가
        return all(a.holds(M) for a in self.args)


class Or(Connective):
    __slots__ = ()
    PRECEDENCE = 3

    def combine(self, values):
        result = False
        for v in values:
            result = np.logical_or(result, v)
        return result

    def holds(self, M):
        return any(a.holds(M) for a in self.args)


class Not(Connective):
    __slots__ = ()
    PRECEDENCE = 5

    def __init__(self, arg):
        Connective.__init__(self, arg)

    def combine(self, values):
        return np.logical_not(values[0])


class Implies(Connective):
    __slots__ = ()
    PRECEDENCE = 2

    def __init__(self, lhs, rhs):
        Connective.__init__(self, lhs, rhs)

    def combine(self, values):
        return np.logical_or(np.logical_not(values[0]), values[1])

    def holds(self, M):
        return not self.args[0].holds(M) or self.args[1].holds(M)


class Iff(Connective):
    __slots__ = ()
    PRECEDENCE = 1

    def __init__(self, lhs, rhs):
        Connective.__init__(self, lhs, rhs)

    def combine(self, values):
        return np.equal(values[0], values[1])


def conjoin(items):
    '''
    항목이 하나면 그대로, 아니면 And로 묶습니다.
    '''
    items = list(items)
    if len(items) == 1:
        return items[0]
    return And(*items)


class FreshNames(object):
    '''
    디슈가링용 새 변수 이름 공급기. 문제마다 하나씩 만들어 이름을 결정적으로 유지합니다.
    '''

    def __init__(self, prefix="_d", start=1):
        self.prefix = prefix
        self.counter = start
        self.lock = threading.Lock()

    def __call__(self):
        with self.lock:
            name = "%s%d" % (self.prefix, self.counter)
            self.counter += 1
        return Var(name)


# 문제 밖에서 desugar를 직접 호출할 때 사용하는 전역 공급기
_GLOBAL_FRESH = FreshNames(prefix="_g")


def desugar(lit, fresh=None, definitions=None):
    '''
    파생 리터럴을 (새 변수 위에서의) 기본 BST 리터럴 목록으로 펼칩니다.
    새 변수들에 대해 존재 양화하면 원래 리터럴과 동치입니다.

    @lit         - 파생 리터럴.
    @fresh       - FreshNames 인스턴스 (생략 시 전역 공급기).
    @definitions - 주어지면 새 변수마다 증인 값을 정의하는 항 ('diff', a, b) / ('union', a, b) / ('empty',)을 기록합니다.

    리터럴 목록을 반환합니다.
    '''
    if fresh is None:
        fresh = _GLOBAL_FRESH
    if definitions is None:
        definitions = {}

    def new(*term):
        v = fresh()
        definitions[v] = term
        return v

    cls = type(lit)

    if cls in (DiffEq, DiffNeq, Singleton):
        return [lit]

    if cls in (Empty, NotEmpty):
        (x,) = lit.args
        return [(DiffEq if cls is Empty else DiffNeq)(x, x, x)]

    if cls in (Subseteq, NotSubseteq):
        (x, y) = lit.args
        d = new('diff', x, y)
        return [DiffEq(d, x, y), (DiffEq if cls is Subseteq else DiffNeq)(d, d, d)]

    if cls in (InterEq, InterNeq):
        (x, y, z) = lit.args
        d = new('diff', y, z)
        return [DiffEq(d, y, z), (DiffEq if cls is InterEq else DiffNeq)(x, y, d)]

    if cls is UnionEq:
        (x, y, z) = lit.args
        out = []
        for (a, b) in ((y, x), (z, x)):
            d = new('diff', a, b)
            out += [DiffEq(d, a, b), DiffEq(d, d, d)]
        d3 = new('diff', x, y)
        d4 = new('diff', d3, z)
        return out + [DiffEq(d3, x, y), DiffEq(d4, d3, z), DiffEq(d4, d4, d4)]

    if cls is UnionNeq:
        (x, y, z) = lit.args
        w = new('union', y, z)
        return desugar(UnionEq(w, y, z), fresh, definitions) + desugar(VarNeq(x, w), fresh, definitions)

    if cls in (Disj, NotDisj):
        (x, y) = lit.args
        d = new('diff', x, y)
        e = new('diff', x, d)
        return [DiffEq(d, x, y), DiffEq(e, x, d), (DiffEq if cls is Disj else DiffNeq)(e, e, e)]

    if cls is StrictSub:
        (x, y) = lit.args
        return desugar(Subseteq(x, y), fresh, definitions) + desugar(NotSubseteq(y, x), fresh, definitions)

    if cls in (VarEq, VarNeq):
        (x, y) = lit.args
        d = new('empty')
        return [DiffEq(d, d, d), (DiffEq if cls is VarEq else DiffNeq)(x, y, d)]

    raise TypeError("알 수 없는 리터럴: %r" % (lit,))


def evaluate_definition(term, values):
    '''
    desugar가 기록한 정의 항을 HF 값 할당 values에서 계산합니다.
    '''
    if term[0] == 'empty':
        return hf.EMPTY
    (a, b) = (_value(values, term[1]), _value(values, term[2]))
    if term[0] == 'diff':
        return hf.diff(a, b)
    return hf.union(a, b)


class Problem(object):
    '''
    중첩 문제 phi /\\ psi.

        literals - 원본 순서의 최상위 리터럴 (psi 중복 제거됨)
        phi      - 디슈가링된 BST 논리곱 (DiffEq/DiffNeq만)
        psi      - 중복 없는 Singleton 원자 목록
        vars     - 사용자 변수, 처음 등장 순서
    '''

    def __init__(self, literals=()):
        kept = []
        seen = set()

        for lit in literals:
            if not isinstance(lit, Literal):
                raise TypeError("Problem에는 리터럴만 올 수 있습니다: %r" % (lit,))
            if isinstance(lit, Singleton):
                if lit in seen:
                    continue
                seen.add(lit)
            kept.append(lit)

        self.literals = tuple(kept)
        self.psi = tuple(lit for lit in kept if isinstance(lit, Singleton))
        self.definitions = {}
        self.certificate = None

        fresh = FreshNames()
        phi = []
        for lit in kept:
            if not isinstance(lit, Singleton):
                phi += desugar(lit, fresh, self.definitions)
        self.phi = tuple(phi)

        self._variables = _ordered_unique([v for lit in self.phi for v in lit.args] +
                                          [v for lit in self.psi for v in lit.args])
        self.vars = [v for v in self._variables if v.is_user]

    def variables(self):
        '''
        Vars(phi /\\ psi): 디슈가링된 phi 먼저, 그다음 psi. 새 변수도 포함합니다.
        '''
        return list(self._variables)

    def complete(self, values):
        '''
        사용자 변수 할당을 새 변수의 증인 값으로 확장한 새 딕셔너리를 반환합니다.
        '''
        out = dict(values)
        for (v, term) in self.definitions.items():
            if v not in out:
                out[v] = evaluate_definition(term, out)
        return out

    def __eq__(self, other):
        return isinstance(other, Problem) and self.literals == other.literals

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.literals)

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return unparse(self)

    def __repr__(self):
        return "Problem(%r)" % (unparse(self),)


def _wrap(node, needs_parens):
    text = unparse(node)
    return "(" + text + ")" if needs_parens else text


def unparse(f):
    '''
    Formula 또는 Problem을 입력 문법 텍스트로 출력합니다. parse(unparse(f)) == f.
    Problem은 원본 순서를 유지하며 ' ; '로 이어 붙입니다.
    '''
    if isinstance(f, Problem):
        return " ; ".join(str(lit) for lit in f.literals)

    if isinstance(f, Literal):
        return str(f)

    if isinstance(f, Not):
        return "not " + _wrap(f.args[0], f.args[0].PRECEDENCE < Not.PRECEDENCE)

    if isinstance(f, (And, Or)):
        word = " and " if isinstance(f, And) else " or "
        return word.join(_wrap(a, a.PRECEDENCE <= f.PRECEDENCE) for a in f.args)

    if isinstance(f, Implies):
        (lhs, rhs) = f.args
        return _wrap(lhs, lhs.PRECEDENCE <= Implies.PRECEDENCE) + " -> " + _wrap(rhs, rhs.PRECEDENCE < Implies.PRECEDENCE)

    if isinstance(f, Iff):
        (lhs, rhs) = f.args
        return _wrap(lhs, lhs.PRECEDENCE <= Iff.PRECEDENCE) + " <-> " + _wrap(rhs, rhs.PRECEDENCE <= Iff.PRECEDENCE)

    if hasattr(f, 'conjuncts'):
        return "\n".join(unparse(c) for c in f.conjuncts)

    raise TypeError("출력할 수 없는 객체: %r" % (f,))


GRAMMAR = r'''
    start: _item (_SEP _item)*
    _item: statement?

    ?statement: iff

    ?iff: implies ("<->" implies)*
    ?implies: or_expr ("->" implies)?
    ?or_expr: and_expr ("or" and_expr)*
    ?and_expr: neg ("and" neg)*
    ?neg: "not" neg             -> not_
        | "(" iff ")"           -> paren
        | atom

    ?atom: NAME "=" NAME "\\" NAME      -> diff_eq
         | NAME "!=" NAME "\\" NAME     -> diff_neq
         | NAME "=" "{" NAME "}"        -> singleton
         | NAME "sub" NAME              -> subseteq
         | NAME "nsub" NAME             -> not_subseteq
         | NAME "ssub" NAME             -> strict_sub
         | NAME "=" NAME "&" NAME       -> inter_eq
         | NAME "!=" NAME "&" NAME      -> inter_neq
         | NAME "=" NAME "|" NAME       -> union_eq
         | NAME "!=" NAME "|" NAME      -> union_neq
         | "disj" "(" NAME "," NAME ")"  -> disj
         | "ndisj" "(" NAME "," NAME ")" -> not_disj
         | NAME "=" "0"                 -> empty
         | NAME "!=" "0"                -> not_empty
         | NAME "=" NAME                -> var_eq
         | NAME "!=" NAME               -> var_neq

    NAME: /[~_]?[A-Za-z_][A-Za-z0-9_]*/
    _SEP: /;|\n/
    COMMENT: /#[^\n]*/

    %ignore /[ \t\f\r]+/
    %ignore COMMENT
'''

_PARSER = None
_PARSER_LOCK = threading.Lock()


def _parser():
    global _PARSER
    with _PARSER_LOCK:
        if _PARSER is None:
            _PARSER = Lark(GRAMMAR, parser='lalr', propagate_positions=True, maybe_placeholders=False)
        return _PARSER


def _atom(cls):
    def callback(self, *names):
        return cls(*[self.name(n) for n in names])
    return callback


@v_args(inline=True)
class _ToAst(Transformer):

    def __init__(self, allow_reserved=False):
        Transformer.__init__(self)
        self.allow_reserved = allow_reserved

    def name(self, token):
        text = str(token)
        if not self.allow_reserved and not text[0].isalpha():
            raise ParserException("예약된 접두사로 시작하는 변수 이름은 쓸 수 없습니다: '%s'" % text,
                                  token.line, token.column)
        if text in Var.KEYWORDS:
            raise ParserException("예약어 '%s'은(는) 변수 이름으로 쓸 수 없습니다" % text, token.line, token.column)
        return Var(text)

    diff_eq = _atom(DiffEq)
    diff_neq = _atom(DiffNeq)
    singleton = _atom(Singleton)
    subseteq = _atom(Subseteq)
    not_subseteq = _atom(NotSubseteq)
    strict_sub = _atom(StrictSub)
    inter_eq = _atom(InterEq)
    inter_neq = _atom(InterNeq)
    union_eq = _atom(UnionEq)
    union_neq = _atom(UnionNeq)
    disj = _atom(Disj)
    not_disj = _atom(NotDisj)
    empty = _atom(Empty)
    not_empty = _atom(NotEmpty)
    var_eq = _atom(VarEq)
    var_neq = _atom(VarNeq)

    def _no_singleton(self, meta, args):
        for a in args:
            if isinstance(a, Singleton):
                raise ParserException("싱글톤 원자 '%s'은(는) 명제 결합자 안에 올 수 없습니다" % a,
                                      getattr(meta, 'line', None), getattr(meta, 'column', None))

    @v_args(meta=True)
    def paren(self, meta, children):
        self._no_singleton(meta, children)
        return children[0]

    @v_args(meta=True)
    def not_(self, meta, children):
        self._no_singleton(meta, children)
        return Not(children[0])

    @v_args(meta=True)
    def and_expr(self, meta, children):
        self._no_singleton(meta, children)
        return And(*children)

    @v_args(meta=True)
    def or_expr(self, meta, children):
        self._no_singleton(meta, children)
        return Or(*children)

    @v_args(meta=True)
    def implies(self, meta, children):
        self._no_singleton(meta, children)
        return Implies(children[0], children[1])

    @v_args(meta=True)
    def iff(self, meta, children):
        self._no_singleton(meta, children)
        result = children[0]
        for c in children[1:]:
            result = Iff(result, c)
        return result

    def start(self, *statements):
        return list(statements)


def _parse_statements(text, allow_reserved):
    try:
        tree = _parser().parse(text)
        return _ToAst(allow_reserved).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ParserException):
            raise e.orig_exc
        raise
    except UnexpectedInput as e:
        (line, column) = (getattr(e, 'line', None), getattr(e, 'column', None))
        if isinstance(e, UnexpectedEOF) or not line or line < 1:
            # 입력 끝에서 발생한 오류는 마지막 위치로 보고합니다.
            lines = text.splitlines() or [""]
            raise ParserException("예상하지 못한 입력 끝", len(lines), len(lines[-1]) + 1)
        keyword = _keyword_as_name(text, line, column)
        if keyword is not None:
            raise ParserException("예약어 '%s'은(는) 변수 이름으로 쓸 수 없습니다" % keyword[0], line, keyword[1])
        raise ParserException("구문 오류 또는 알 수 없는 연산자: %s" % _context(text, e), line, column)


_KEYWORD_LHS = re.compile(r'(?:^|;)\s*(?:not\s+)*(%s)\s*(?:!?=|n?sub\b|ssub\b)' % "|".join(sorted(Var.KEYWORDS)))


def _keyword_as_name(text, line, column):
    '''
    오류 위치 직전의 문장이 예약어를 좌변 변수로 쓰고 있으면 (예약어, 열)을 반환합니다.
    '''
    lines = text.splitlines()
    if not 1 <= line <= len(lines):
        return None
    head = lines[line - 1][:column - 1 + 4]
    found = None
    for m in _KEYWORD_LHS.finditer(head):
        found = (m.group(1), m.start(1) + 1)
    return found


def _context(text, e):
    try:
        return repr(e.get_context(text).strip().splitlines()[0])
    except Exception:
        return "?"


def parse(text, allow_reserved=False):
    '''
    제약 텍스트를 파싱합니다.

    모든 문장이 리터럴이면 Problem을, 명제 결합자가 하나라도 있으면 BST+ Formula를 반환합니다.
    BST+ 파일에는 최상위 싱글톤 원자도 올 수 없습니다.

    @text           - 입력 텍스트.
    @allow_reserved - True이면 '~', '_'로 시작하는 이름을 허용합니다 (출력된 Xi를 다시 읽을 때).
    '''
    statements = _parse_statements(text, allow_reserved)

    if all(isinstance(s, Literal) for s in statements):
        return Problem(statements)

    return _formula_from(statements)


def parse_formula(text, allow_reserved=False):
    '''
    텍스트를 항상 평탄 Formula로 읽습니다 (여러 문장은 And로 묶음, 빈 입력은 빈 And).
    '''
    return _formula_from(_parse_statements(text, allow_reserved))


def _formula_from(statements):
    for s in statements:
        if isinstance(s, Singleton):
            raise ParserException("싱글톤 원자 '%s'은(는) BST+ 식에 올 수 없습니다" % s)
    if len(statements) == 1:
        return statements[0]
    return And(*statements)
