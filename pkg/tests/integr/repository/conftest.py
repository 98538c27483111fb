import pytest
from repository.files import get_map_table_repository, get_plane_set_repository
from service.gf import field_make
from service.grassmann import enumerate_grassmannian

@pytest.fixture(scope='function')
def PlaneRepo():
    return get_plane_set_repository()

@pytest.fixture(scope='function')
def MapRepo():
    return get_map_table_repository()

@pytest.fixture(scope='function')
def g24():
    return enumerate_grassmannian(4, 2, field_make(2))

@pytest.fixture(scope='function')
def file_of(tmp_path):
    def write(text, name='input.txt'):
        path = tmp_path / name
        path.write_bytes(text.encode('utf-8'))
        return path
    return write
