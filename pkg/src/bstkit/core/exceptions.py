class ParserException(Exception):

    '''
    제약 파일 파싱 오류와 관련된 예외입니다.
    줄/열 위치가 알려진 경우 메시지 앞에 "줄:열" 형태로 붙습니다.
    '''

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = "%d:%d: %s" % (line, column or 0, message)
        Exception.__init__(self, message)


class ModuleException(Exception):

    '''
    모듈 예외 클래스.
    이름 외에는 특별한 기능이 없습니다.
    '''
    pass


class UsageException(ModuleException):

    '''
    잘못된 명령줄 사용법. 종료 코드 2로 이어집니다.
    '''
    pass


class ModelException(Exception):

    '''
    집합 할당(모델) 구성 과정에서 발생하는 예외들의 기본 클래스입니다.
    '''
    pass


class MissingVariable(ModelException):

    '''
    평가하려는 식의 변수가 할당에 없습니다.
    '''

    def __init__(self, variable):
        self.variable = variable
        ModelException.__init__(self, "할당에 변수 '%s'이(가) 없습니다" % variable)


class CycleDetected(ModelException):

    '''
    싱글톤 원자 순서의 추이적 폐포가 반사적입니다.
    즉, 주어진 할당은 phi와 Xi를 동시에 만족하지 않습니다.
    '''

    def __init__(self, atoms):
        self.atoms = list(atoms)
        ModelException.__init__(self, "원자 순서에 순환이 있습니다: %s" % ", ".join(str(a) for a in self.atoms))


class PreconditionViolated(ModelException):

    '''
    변환/주입 연산의 선행 조건이 깨졌습니다. variable은 문제가 된 변수(또는 값)입니다.
    '''

    def __init__(self, variable, message=None):
        self.variable = variable
        if message is None:
            message = "변수 '%s'에서 선행 조건이 깨졌습니다" % variable
        ModelException.__init__(self, message)


class LiftInvariantBroken(ModelException):

    '''
    모델 리프팅 루프의 불변식이 깨졌습니다. 상위 단계의 버그를 의미합니다.
    '''
    pass


class ExtensionFailed(ModelException):

    '''
    틸드 변수로 확장한 할당이 Xi를 만족하지 않습니다.
    '''
    pass


class EncodingException(Exception):

    '''
    평탄 식을 CNF로 인코딩할 수 없습니다 (예: 싱글톤 원자 포함).
    '''
    pass


class SolverException(Exception):

    '''
    SAT 해로부터 복원한 모델이 자체 검사를 통과하지 못했습니다.
    '''
    pass


class BudgetExceeded(Exception):

    '''
    열거 한도를 넘는 요청입니다 (오라클, 레벨 열거).
    '''
    pass
