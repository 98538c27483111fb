import pytest
from core.exceptions import ParseError
from models.grassmann import PlaneSet
from models.maps import GrassmannMap
from service.gf import field_make
from service.grassmann import enumerate_grassmannian, subspace_make
from service.maps import identity_table, swap_table

@pytest.mark.repository
def test_plane_set_dumps(PlaneRepo, g24):
    text = PlaneRepo.dumps(PlaneSet(g24, (0,)))

    assert text == '2 4 2 1\n0 0 1 0\n0 0 0 1\n'

@pytest.mark.repository
def test_plane_set_dumps_empty(PlaneRepo, g24):
    text = PlaneRepo.dumps(PlaneSet(g24))

    assert text == '2 4 2 0\n'
    assert PlaneRepo.loads(text) == PlaneSet(g24)

@pytest.mark.repository
def test_plane_set_write_read(PlaneRepo, g24, tmp_path):
    planes = PlaneSet(g24, (0, 5, 17, 34))
    path = tmp_path / 'planes.txt'

    PlaneRepo.write(path, planes)

    assert PlaneRepo.read(path) == planes
    assert b'\r' not in path.read_bytes()

@pytest.mark.repository
def test_plane_set_any_basis(PlaneRepo, g24):
    planes = PlaneRepo.loads('2 4 2 1\n1 1 0 0\n0 1 0 0\n')
    plane = subspace_make([[1, 0, 0, 0], [0, 1, 0, 0]], 4, field_make(2))

    assert list(planes.indices) == [g24.index(plane)]

@pytest.mark.repository
@pytest.mark.parametrize('text, detail', [
    ('\n', 'Строка 1: пустой заголовок'),
    ('2 4 2\n', 'Строка 1: заголовок должен содержать 4 числа: q n k count'),
    ('2 4 2 x\n', 'Строка 1: ожидались десятичные целые числа'),
    ('2 4 0 0\n', 'Строка 1: размерность плоскостей должна быть не меньше 1'),
    ('2 4 2 2\n0 0 1 0\n0 0 0 1\n', 'в заголовке 2 плоскостей, в теле 1'),
    ('2 4 2 1\n0 0 1 0\n', 'Строка 2: блок должен содержать 2 строк, получено 1'),
    ('2 4 2 1\n0 0 1 0\n0 0 1\n', 'Строка 3: строка должна содержать 4 кодов'),
    ('2 4 2 1\n0 0 2 0\n0 0 0 1\n', 'Строка 2: код элемента вне диапазона 0..1'),
    ('2 4 2 1\n1 0 0 0\n1 0 0 0\n', 'Строка 2: строки блока линейно зависимы: ранг 1 < 2'),
    ('2 4 2 2\n0 0 1 0\n0 0 0 1\n\n0 0 0 1\n0 0 1 0\n', 'Строка 5: плоскость повторяется')
])
def test_plane_set_parse_errors(PlaneRepo, text, detail):
    with pytest.raises(ParseError) as excinfo:
        PlaneRepo.loads(text)

    assert excinfo.value.detail == detail
    assert excinfo.value.exit_code == 2

@pytest.mark.repository
@pytest.mark.parametrize('text, fragment', [
    ('6 4 2 0\n', 'Поле порядка 6 не поддерживается!'),
    ('2 7 2 0\n', 'n = 7 больше допустимого 6!'),
    ('2 4 5 0\n', 'k = 5 больше n = 4!')
])
def test_plane_set_bad_header(PlaneRepo, text, fragment):
    with pytest.raises(ParseError) as excinfo:
        PlaneRepo.loads(text)

    assert excinfo.value.detail.startswith('Строка 1: ')
    assert fragment in excinfo.value.detail

@pytest.mark.repository
def test_read_crlf(PlaneRepo, file_of):
    path = file_of('2 4 2 1\r\n0 0 1 0\r\n0 0 0 1\r\n')

    with pytest.raises(ParseError) as excinfo:
        PlaneRepo.read(path)

    assert excinfo.value.detail == 'Допускаются только переводы строк LF!'

@pytest.mark.repository
def test_read_missing(PlaneRepo, tmp_path):
    with pytest.raises(ParseError) as excinfo:
        PlaneRepo.read(tmp_path / 'missing.txt')

    assert excinfo.value.detail.startswith('Не удалось прочитать')

@pytest.mark.repository
def test_map_table_dumps(MapRepo):
    lines = enumerate_grassmannian(3, 1, field_make(2))

    text = MapRepo.dumps(identity_table(lines))

    assert text == '2 3 1 1\n0\n1\n2\n3\n4\n5\n6\n'

@pytest.mark.repository
def test_map_table_write_read(MapRepo, g24, tmp_path):
    f = swap_table(g24, 3, 20)
    path = tmp_path / 'map.txt'

    MapRepo.write(path, f)

    assert MapRepo.read(path) == f

@pytest.mark.repository
def test_map_table_between_grassmannians(MapRepo, file_of):
    path = file_of('2 3 1 2\n' + ''.join(f'{j}\n' for j in range(7)))

    f = MapRepo.read(path)

    assert isinstance(f, GrassmannMap)
    assert (f.domain.k, f.codomain.k) == (1, 2)
    assert not f.is_transformation

@pytest.mark.repository
@pytest.mark.parametrize('text, detail', [
    ('2 3 1\n', 'Строка 1: заголовок должен содержать 4 числа: q n k k_prime'),
    ('2 3 1 1\n0 1\n', 'Строка 2: ожидался один индекс в строке'),
    ('2 3 1 1\n7\n', 'Строка 2: индекс 7 вне диапазона 0..6'),
    ('2 3 1 1\n0\n1\n0\n', 'Строка 4: индекс 0 уже встречался в строке 2'),
    ('2 3 1 1\n0\n1\n', 'ожидалось 7 строк биекции на 7 индексов, получено 2'),
    ('2 4 1 2\n0\n', 'ожидалось 15 строк биекции на 35 индексов, получено 1')
])
def test_map_table_parse_errors(MapRepo, text, detail):
    with pytest.raises(ParseError) as excinfo:
        MapRepo.loads(text)

    assert excinfo.value.detail == detail
