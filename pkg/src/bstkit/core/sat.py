# 자체 포함된 CDCL SAT 솔버와 CNF 인스턴스 표현입니다.
#
# 리터럴은 DIMACS처럼 0이 아닌 정수(+v / -v)입니다. 솔버는 두 감시 리터럴로
# 단위 전파를 하고, 충돌 시 첫 번째 UIP 절을 학습한 뒤 백점프합니다.
# 분기는 기본적으로 가장 작은 미할당 변수를 거짓 위상으로 고르므로 결과가 결정적입니다.

import re
import bstkit.core.common as common
from bstkit.core.exceptions import ParserException

# SAT 솔버 관례에 따른 종료 코드
EXIT_SAT = 10
EXIT_UNSAT = 20

# VSIDS 점수 감쇠율과 재조정 임계값
ACTIVITY_DECAY = 0.95
ACTIVITY_LIMIT = 1e100


class CnfInstance(object):
    '''
    CNF 인스턴스: 변수 수와 정수 리터럴 절 목록.
    '''

    def __init__(self, num_vars=0, clauses=None):
        self.num_vars = num_vars
        self.clauses = clauses if clauses is not None else []

    def new_var(self):
        self.num_vars += 1
        return self.num_vars

    def add_clause(self, lits):
        lits = list(lits)
        for lit in lits:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError("잘못된 리터럴 %d (변수 %d개)" % (lit, self.num_vars))
        self.clauses.append(lits)

    def __len__(self):
        return len(self.clauses)

    def to_dimacs(self, comments=()):
        '''
        DIMACS CNF 텍스트를 반환합니다.

        @comments - 'c' 줄로 앞에 붙일 문자열 목록.
        '''
        lines = ["c %s" % c for c in comments]
        lines.append("p cnf %d %d" % (self.num_vars, len(self.clauses)))
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dimacs(cls, text):
        '''
        DIMACS CNF 텍스트를 파싱합니다. 절은 여러 줄에 걸칠 수 있습니다.
        '''
        header = None
        clauses = []
        pending = []

        for (lineno, line) in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith('c') or line.startswith('%'):
                continue
            if header is None:
                m = re.match(r'p\s+cnf\s+(\d+)\s+(\d+)$', line)
                if m is None:
                    raise ParserException("DIMACS 헤더가 필요합니다: '%s'" % line, lineno, 1)
                header = (int(m.group(1)), int(m.group(2)))
                continue
            for token in line.split():
                try:
                    lit = int(token)
                except ValueError:
                    raise ParserException("정수가 아닌 리터럴 '%s'" % token, lineno, line.find(token) + 1)
                if lit == 0:
                    clauses.append(pending)
                    pending = []
                else:
                    if abs(lit) > header[0]:
                        raise ParserException("변수 %d이(가) 헤더의 변수 수를 넘습니다" % abs(lit), lineno, line.find(token) + 1)
                    pending.append(lit)

        if header is None:
            raise ParserException("DIMACS 헤더가 없습니다", 1, 1)
        if pending:
            clauses.append(pending)
        if len(clauses) != header[1]:
            common.warning("DIMACS 헤더의 절 수(%d)와 실제 절 수(%d)가 다릅니다" % (header[1], len(clauses)))

        return cls(header[0], clauses)


class SatResult(object):
    '''
    solve()의 결과.

        sat        - 만족 가능 여부
        assignment - SAT인 경우 변수 1..n에 대한 리터럴 목록 (DIMACS 'v' 줄 순서)
        stats      - decisions / conflicts / propagations / learned 카운트
    '''

    def __init__(self, sat, assignment=None, stats=None):
        self.sat = sat
        self.assignment = assignment if assignment is not None else []
        self.stats = stats if stats is not None else {}
        self._true = set(lit for lit in self.assignment if lit > 0)

    def value(self, lit):
        '''
        리터럴의 진리값. SAT 결과에서만 의미가 있습니다.
        '''
        if lit > 0:
            return lit in self._true
        return -lit not in self._true

    @property
    def exit_code(self):
        return EXIT_SAT if self.sat else EXIT_UNSAT

    def __bool__(self):
        return self.sat

    def __str__(self):
        return "SAT" if self.sat else "UNSAT"


class Solver(object):
    '''
    충돌 기반 DPLL 솔버. 인스턴스는 하나의 스레드 안에서만 사용해야 합니다.
    '''

    def __init__(self, cnf, activity=False):
        '''
        클래스 생성자.

        @cnf      - CnfInstance.
        @activity - True이면 VSIDS 점수로 분기 변수를 고릅니다.
        '''
        n = cnf.num_vars
        self.num_vars = n
        self.use_activity = activity

        # 0: 미할당, 1: 참, -1: 거짓
        self.values = [0] * (n + 1)
        self.levels = [0] * (n + 1)
        self.reasons = [None] * (n + 1)
        self.activity = [0.0] * (n + 1)
        self.activity_inc = 1.0

        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.hint = 1

        self.watches = dict((lit, []) for v in range(1, n + 1) for lit in (v, -v))
        self.learnts = []
        self.stats = {'decisions': 0, 'conflicts': 0, 'propagations': 0, 'learned': 0}
        self.ok = True

        for clause in cnf.clauses:
            self._add_clause(clause)
            if not self.ok:
                break

    def _lit_value(self, lit):
        v = self.values[abs(lit)]
        return v if lit > 0 else -v

    def _decision_level(self):
        return len(self.trail_lim)

    def _enqueue(self, lit, reason):
        var = abs(lit)
        self.values[var] = 1 if lit > 0 else -1
        self.levels[var] = self._decision_level()
        self.reasons[var] = reason
        self.trail.append(lit)

    def _add_clause(self, lits):
        clause = []
        for lit in lits:
            if -lit in clause:
                # 항진 절
                return
            if lit not in clause:
                clause.append(lit)

        if not clause:
            self.ok = False
        elif len(clause) == 1:
            value = self._lit_value(clause[0])
            if value == -1:
                self.ok = False
            elif value == 0:
                self._enqueue(clause[0], None)
        else:
            self.watches[clause[0]].append(clause)
            self.watches[clause[1]].append(clause)

    def _propagate(self):
        '''
        단위 전파. 충돌 절을 반환하거나, 충돌이 없으면 None을 반환합니다.
        '''
        conflict = None

        while self.qhead < len(self.trail) and conflict is None:
            p = self.trail[self.qhead]
            self.qhead += 1
            self.stats['propagations'] += 1

            false_lit = -p
            watchers = self.watches[false_lit]
            kept = []

            for (i, clause) in enumerate(watchers):
                if conflict is not None:
                    kept.extend(watchers[i:])
                    break

                # 거짓이 된 감시 리터럴을 clause[1]에 둡니다.
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]

                if self._lit_value(clause[0]) == 1:
                    kept.append(clause)
                    continue

                for k in range(2, len(clause)):
                    if self._lit_value(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches[clause[1]].append(clause)
                        break
                else:
                    kept.append(clause)
                    if self._lit_value(clause[0]) == -1:
                        conflict = clause
                    else:
                        self._enqueue(clause[0], clause)

            self.watches[false_lit] = kept

        return conflict

    def _bump(self, var):
        if not self.use_activity:
            return
        self.activity[var] += self.activity_inc
        if self.activity[var] > ACTIVITY_LIMIT:
            for v in range(1, self.num_vars + 1):
                self.activity[v] *= 1e-100
            self.activity_inc *= 1e-100

    def _analyze(self, conflict):
        '''
        첫 번째 UIP 학습 절과 백점프 레벨을 계산합니다.
        학습 절의 0번 리터럴은 백점프 후 단위가 되는 단언 리터럴입니다.
        '''
        seen = set()
        learnt = [None]
        level = self._decision_level()
        counter = 0
        p = None
        index = len(self.trail) - 1
        clause = conflict

        while True:
            for q in clause:
                if q == p:
                    continue
                var = abs(q)
                if var not in seen and self.levels[var] > 0:
                    seen.add(var)
                    self._bump(var)
                    if self.levels[var] == level:
                        counter += 1
                    else:
                        learnt.append(q)

            while abs(self.trail[index]) not in seen:
                index -= 1
            p = self.trail[index]
            index -= 1
            seen.discard(abs(p))
            counter -= 1
            if counter == 0:
                break
            clause = self.reasons[abs(p)]

        learnt[0] = -p

        backjump = 0
        if len(learnt) > 1:
            best = 1
            for i in range(2, len(learnt)):
                if self.levels[abs(learnt[i])] > self.levels[abs(learnt[best])]:
                    best = i
            learnt[1], learnt[best] = learnt[best], learnt[1]
            backjump = self.levels[abs(learnt[1])]

        return (learnt, backjump)

    def _backtrack(self, level):
        if self._decision_level() <= level:
            return
        limit = self.trail_lim[level]
        for lit in self.trail[limit:]:
            var = abs(lit)
            self.values[var] = 0
            self.reasons[var] = None
            if var < self.hint:
                self.hint = var
        del self.trail[limit:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _pick_branch(self):
        if self.use_activity:
            best = None
            for var in range(1, self.num_vars + 1):
                if self.values[var] == 0 and (best is None or self.activity[var] > self.activity[best]):
                    best = var
            return best

        var = self.hint
        while var <= self.num_vars and self.values[var] != 0:
            var += 1
        self.hint = var
        return var if var <= self.num_vars else None

    def solve(self):
        '''
        인스턴스를 풉니다. SatResult를 반환합니다.
        '''
        if not self.ok:
            return SatResult(False, stats=self.stats)

        while True:
            conflict = self._propagate()

            if conflict is not None:
                self.stats['conflicts'] += 1
                if self._decision_level() == 0:
                    return SatResult(False, stats=self.stats)

                (learnt, backjump) = self._analyze(conflict)
                self._backtrack(backjump)

                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self.learnts.append(learnt)
                    self._enqueue(learnt[0], learnt)

                self.stats['learned'] += 1
                self.activity_inc /= ACTIVITY_DECAY
            else:
                var = self._pick_branch()
                if var is None:
                    assignment = [v if self.values[v] == 1 else -v for v in range(1, self.num_vars + 1)]
                    return SatResult(True, assignment, self.stats)

                self.stats['decisions'] += 1
                self.trail_lim.append(len(self.trail))
                self._enqueue(-var, None)


def solve(cnf, activity=False):
    '''
    편의 함수: Solver(cnf, activity).solve().
    '''
    result = Solver(cnf, activity=activity).solve()
    common.debug("sat: %s vars=%d clauses=%d %s" % (result, cnf.num_vars, len(cnf.clauses), result.stats))
    return result


def pigeonhole(pigeons, holes):
    '''
    비둘기집 원리 인스턴스 PHP(pigeons, holes). pigeons > holes이면 UNSAT입니다.
    '''
    cnf = CnfInstance()
    var = {}
    for i in range(pigeons):
        for j in range(holes):
            var[(i, j)] = cnf.new_var()

    for i in range(pigeons):
        cnf.add_clause(var[(i, j)] for j in range(holes))
    for j in range(holes):
        for i in range(pigeons):
            for k in range(i + 1, pigeons):
                cnf.add_clause([-var[(i, j)], -var[(k, j)]])

    return cnf
