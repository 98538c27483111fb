from concurrent.futures import ThreadPoolExecutor

import pytest
from repository.grassmann import Cache

@pytest.mark.repository
def test_remember_builds_once(mocker):
    factory = mocker.Mock(return_value=[1, 2, 3])
    key = ('remember_once', 1)

    with ThreadPoolExecutor(max_workers=8) as pool:
        values = list(pool.map(lambda _: Cache.remember(key, factory), range(32)))

    factory.assert_called_once()
    assert all(value is values[0] for value in values)

@pytest.mark.repository
def test_remember_size(mocker):
    before = Cache.size()['tables']

    Cache.remember(('remember_size', 1), mocker.Mock(return_value='a'))
    Cache.remember(('remember_size', 1), mocker.Mock(return_value='b'))

    assert Cache.size()['tables'] == before + 1
    assert Cache.remember(('remember_size', 1), mocker.Mock()) == 'a'
