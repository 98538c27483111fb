from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar

from pydantic import ValidationError

from core.exceptions import BaseError, NotBijectionError, ParseError
from core.logger import get_logger
from models.grassmann import PlaneSet
from models.maps import GrassmannMap
from schemas.files import SMapTableHeader, SPlaneSetHeader
from service.gf import field_make
from service.grassmann import enumerate_grassmannian, subspace_make

logger = get_logger('files')

T = TypeVar('T')

def _ints(line: str, number: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise ParseError('ожидались десятичные целые числа', line=number)

def _header(model, line: str, fields: tuple[str, ...]):
    values = _ints(line, 1)
    if len(values) != len(fields):
        raise ParseError(f'заголовок должен содержать {len(fields)} числа: {" ".join(fields)}', line=1)
    try:
        return model(**dict(zip(fields, values)))
    except ValidationError as e:
        raise ParseError(e.errors()[0]['msg'], line=1)

class BaseFileRepository(ABC, Generic[T]):
    @abstractmethod
    def loads(self, text: str) -> T:
        return NotImplemented

    @abstractmethod
    def dumps(self, value: T) -> str:
        return NotImplemented

    def read(self, path: Path) -> T:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise ParseError(f'Не удалось прочитать {path}: {e.strerror}')
        if '\r' in text:
            raise ParseError('Допускаются только переводы строк LF!')
        value = self.loads(text)
        logger.debug('Прочитан файл %s', path)
        return value

    def write(self, path: Path, value: T) -> None:
        Path(path).write_text(self.dumps(value), encoding='utf-8', newline='\n')
        logger.debug('Записан файл %s', path)

class PlaneSetRepository(BaseFileRepository[PlaneSet]):
    """Заголовок "q n k count", далее count блоков по k строк из n кодов, блоки разделены пустой строкой."""

    def loads(self, text: str) -> PlaneSet:
        lines = text.split('\n')
        if not lines[0].strip():
            raise ParseError('пустой заголовок', line=1)
        header = _header(SPlaneSetHeader, lines[0], ('q', 'n', 'k', 'count'))
        if header.k < 1:
            raise ParseError('размерность плоскостей должна быть не меньше 1', line=1)
        spec = field_make(header.q)
        try:
            index = enumerate_grassmannian(header.n, header.k, spec)
        except BaseError as e:
            raise ParseError(e.detail, line=1)

        blocks: list[list[tuple[int, list[int]]]] = []
        current: list[tuple[int, list[int]]] = []
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                if current:
                    blocks.append(current)
                    current = []
                continue
            current.append((number, _ints(line, number)))
        if current:
            blocks.append(current)

        if len(blocks) != header.count:
            raise ParseError(f'в заголовке {header.count} плоскостей, в теле {len(blocks)}')
        members: list[int] = []
        for block in blocks:
            start = block[0][0]
            if len(block) != header.k:
                raise ParseError(f'блок должен содержать {header.k} строк, получено {len(block)}', line=start)
            for number, row in block:
                if len(row) != header.n:
                    raise ParseError(f'строка должна содержать {header.n} кодов', line=number)
                if any(not 0 <= code < header.q for code in row):
                    raise ParseError(f'код элемента вне диапазона 0..{header.q - 1}', line=number)
            plane = subspace_make([row for _, row in block], header.n, spec)
            if plane.k != header.k:
                raise ParseError(f'строки блока линейно зависимы: ранг {plane.k} < {header.k}', line=start)
            i = index.index(plane)
            if i in members:
                raise ParseError('плоскость повторяется', line=start)
            members.append(i)
        return PlaneSet.of(index, members)

    def dumps(self, value: PlaneSet) -> str:
        index = value.index
        header = SPlaneSetHeader(q=index.spec.q, n=index.n, k=index.k, count=len(value))
        blocks = ['\n'.join(' '.join(map(str, row)) for row in plane.basis.to_rows())
                  for plane in value.planes()]
        if not blocks:
            return header.line() + '\n'
        return header.line() + '\n' + '\n\n'.join(blocks) + '\n'

class MapTableRepository(BaseFileRepository[GrassmannMap]):
    """Заголовок "q n k k'", далее по строке на каждый индекс области определения."""

    def loads(self, text: str) -> GrassmannMap:
        lines = text.split('\n')
        header = _header(SMapTableHeader, lines[0], ('q', 'n', 'k', 'k_prime'))
        spec = field_make(header.q)
        try:
            domain = enumerate_grassmannian(header.n, header.k, spec)
            codomain = enumerate_grassmannian(header.n, header.k_prime, spec)
        except BaseError as e:
            raise ParseError(e.detail, line=1)

        table: list[int] = []
        seen: dict[int, int] = {}
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            values = _ints(line, number)
            if len(values) != 1:
                raise ParseError('ожидался один индекс в строке', line=number)
            j = values[0]
            if not 0 <= j < len(codomain):
                raise ParseError(f'индекс {j} вне диапазона 0..{len(codomain) - 1}', line=number)
            if j in seen:
                raise ParseError(f'индекс {j} уже встречался в строке {seen[j]}', line=number)
            seen[j] = number
            table.append(j)
        if len(table) != len(domain) or len(domain) != len(codomain):
            raise ParseError(f'ожидалось {len(domain)} строк биекции на {len(codomain)} индексов, получено {len(table)}')
        try:
            return GrassmannMap(domain, codomain, tuple(table))
        except NotBijectionError as e:
            raise ParseError(e.detail)

    def dumps(self, value: GrassmannMap) -> str:
        header = SMapTableHeader(q=value.domain.spec.q, n=value.domain.n,
                                 k=value.domain.k, k_prime=value.codomain.k)
        return header.line() + '\n' + ''.join(f'{j}\n' for j in value.table)

def get_plane_set_repository() -> PlaneSetRepository:
    return PlaneSetRepository()

def get_map_table_repository() -> MapTableRepository:
    return MapTableRepository()
