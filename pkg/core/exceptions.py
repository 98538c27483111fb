class BaseError(Exception):
    message = 'Произошла ошибка!'
    exit_code = 2

    def __init__(self, detail: str | None = None):
        self.detail = detail or self.message
        super().__init__(self.detail)

class UnsupportedOrderError(BaseError):

    def __init__(self, q: int):
        self.custom_detail = f'Поле порядка {q} не поддерживается! Допустимо: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16'
        super().__init__(detail=self.custom_detail)

class SpecMismatchError(BaseError):

    def __init__(self, left: int, right: int):
        self.custom_detail = f'Элементы из разных полей: GF({left}) и GF({right})!'
        super().__init__(detail=self.custom_detail)

class DivisionByZeroError(BaseError):
    message = 'Ноль не обратим!'

class ShapeMismatchError(BaseError):

    def __init__(self, detail: str | None = None):
        self.custom_detail = detail or 'Размеры матриц не согласованы!'
        super().__init__(detail=self.custom_detail)

class SingularMatrixError(BaseError):
    message = 'Матрица вырождена!'

class LengthMismatchError(BaseError):

    def __init__(self, expected: int, got: int):
        self.custom_detail = f'Ожидался вектор длины {expected}, получена длина {got}!'
        super().__init__(detail=self.custom_detail)

class TooLargeError(BaseError):
    exit_code = 3

    def __init__(self, detail: str | None = None):
        self.custom_detail = detail or 'Экземпляр слишком велик для полного перебора!'
        super().__init__(detail=self.custom_detail)

class AmbientMismatchError(BaseError):
    message = 'Подпространства лежат в разных объемлющих пространствах!'

class DimMismatchError(BaseError):

    def __init__(self, left: int, right: int):
        self.custom_detail = f'Размерности не совпадают: {left} и {right}!'
        super().__init__(detail=self.custom_detail)

class EqualDimensionError(BaseError):

    def __init__(self, k: int):
        self.custom_detail = f'Размерность плоскости совпадает с k = {k}, множество инцидентности не определено!'
        super().__init__(detail=self.custom_detail)

class OutOfRangeError(BaseError):

    def __init__(self, detail: str | None = None):
        self.custom_detail = detail or 'Параметр вне допустимого диапазона!'
        super().__init__(detail=self.custom_detail)

class InvalidPlaneSetError(BaseError):
    message = 'Индексы множества плоскостей должны строго возрастать и лежать в индексе!'

class NotBijectionError(BaseError):
    message = 'Таблица отображения не является биекцией!'

class SingularFormError(BaseError):
    message = 'Форма вырождена!'

class NotSymplecticError(BaseError):
    message = 'Форма не симплектическая!'

class UnsupportedAutomorphismError(BaseError):
    message = 'Классификация требует sigma1 = Id! Сначала нормализуйте форму (normalize_form).'

class NonIdentityAutomorphismError(BaseError):
    message = 'Обратный образ формы определён только для линейных отображений (sigma = Id)!'

class DomainMismatchError(BaseError):
    message = 'Область определения не совпадает с областью значений!'

class NotRegularError(BaseError):
    message = 'Множество не регулярно!'

class NotSupersetError(BaseError):
    message = 'Переданное множество не содержит исследуемое!'

class NotAssociatedError(BaseError):
    message = 'Система координат не ассоциирована с множеством!'

class NotIrregularError(BaseError):
    message = 'Множество не иррегулярно!'

class NotTransverseError(BaseError):
    message = 'Плоскости s и t пересекаются нетривиально!'

class BadDimensionsError(BaseError):

    def __init__(self, detail: str | None = None):
        self.custom_detail = detail or 'Неподходящие размерности плоскостей!'
        super().__init__(detail=self.custom_detail)

class NotIndependencePreservingError(BaseError):

    def __init__(self, hyperplane: int | None = None):
        self.custom_detail = 'Преобразование не сохраняет независимость прямых!'
        if hyperplane is not None:
            self.custom_detail += f' Гиперплоскость-свидетель: {hyperplane}'
        self.hyperplane = hyperplane
        super().__init__(detail=self.custom_detail)

class AutomorphismMismatchError(BaseError):
    message = 'Восстановленная функция не является автоморфизмом поля! Таблица повреждена.'

class NotDistancePreservingError(BaseError):

    def __init__(self, pair: tuple[int, int] | None = None):
        self.custom_detail = 'Преобразование не сохраняет смежность!'
        if pair is not None:
            self.custom_detail += f' Пара-свидетель: {pair[0]}, {pair[1]}'
        self.pair = pair
        super().__init__(detail=self.custom_detail)

class NotRegularTransformationError(BaseError):
    message = 'Преобразование не регулярно!'

class NTooSmallError(BaseError):

    def __init__(self, n: int):
        self.custom_detail = f'Требуется n >= 3, получено n = {n}!'
        super().__init__(detail=self.custom_detail)

class DichotomyViolationError(BaseError):

    def __init__(self, stars: int, total: int):
        self.custom_detail = f'Образы звёзд смешанные: {stars} из {total} переходят в звёзды! Классификация остановлена.'
        super().__init__(detail=self.custom_detail)

class VerificationError(BaseError):

    def __init__(self, detail: str | None = None):
        self.custom_detail = detail or 'Построенный объект не прошёл проверку!'
        super().__init__(detail=self.custom_detail)

class ParseError(BaseError):

    def __init__(self, detail: str | None = None, line: int | None = None):
        self.custom_detail = detail or 'Ошибка разбора файла!'
        if line is not None:
            self.custom_detail = f'Строка {line}: {self.custom_detail}'
        super().__init__(detail=self.custom_detail)

class InfeasibleScopeError(BaseError):
    exit_code = 3

    def __init__(self, check: str, envelope: str):
        self.custom_detail = f'Проверка {check} вне области выполнимости: {envelope}'
        self.envelope = envelope
        super().__init__(detail=self.custom_detail)

class UnknownCheckError(BaseError):

    def __init__(self, check: str):
        self.custom_detail = f'Неизвестная проверка: {check}!'
        super().__init__(detail=self.custom_detail)
