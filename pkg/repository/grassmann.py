from threading import RLock
from typing import Any, Callable, Hashable, TypeVar

from models.field import FieldSpec
from models.grassmann import GrassmannianIndex

T = TypeVar('T')

class Cache:
    _fields: dict[int, FieldSpec] = {}
    _indices: dict[tuple[int, int, int], GrassmannianIndex] = {}
    _tables: dict[Hashable, Any] = {}
    _lock = RLock()

    @classmethod
    def get_field(cls, q: int, factory: Callable[[], FieldSpec]) -> FieldSpec:
        if q not in cls._fields:
            with cls._lock:
                if q not in cls._fields:
                    cls._fields[q] = factory()
        return cls._fields[q]

    @classmethod
    def get_index(cls, key: tuple[int, int, int], factory: Callable[[], GrassmannianIndex]) -> GrassmannianIndex:
        if key not in cls._indices:
            with cls._lock:
                if key not in cls._indices:
                    cls._indices[key] = factory()
        return cls._indices[key]

    @classmethod
    def remember(cls, key: Hashable, factory: Callable[[], T]) -> T:
        # таблицы инцидентности, соединения прямых, системы координат.
        # Кэш живёт весь процесс: ключи ограничены MAX_N и MAX_INDEX_SIZE, сброс только через clear()
        if key not in cls._tables:
            with cls._lock:
                if key not in cls._tables:
                    cls._tables[key] = factory()
        return cls._tables[key]

    @classmethod
    def size(cls) -> dict[str, int]:
        return {'fields': len(cls._fields),
                'indices': len(cls._indices),
                'tables': len(cls._tables)}

    @classmethod
    def clear(cls) -> None:
        with cls._lock:
            cls._fields = {}
            cls._indices = {}
            cls._tables = {}
