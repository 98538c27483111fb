from pathlib import Path

import pytest
from core.exceptions import OutOfRangeError, TooLargeError
from models.grassmann import PlaneSet
from models.maps import GrassmannMap
from repository.files import MapTableRepository, PlaneSetRepository
from service.analysis import AnalysisService
from service.grassmann import enumerate_grassmannian
from service.irregularity import x_set
from service.maps import induced_map, random_semilinear
from service.regularity import coordinate_planes, degree, hyperplane_pair_set

PATH = Path('planes.txt')

@pytest.fixture(scope='function')
def m_plane_repo(mocker):
    return mocker.Mock(spec=PlaneSetRepository)

@pytest.fixture(scope='function')
def m_map_repo(mocker):
    return mocker.Mock(spec=MapTableRepository)

@pytest.fixture(scope='function')
def analysis(m_plane_repo, m_map_repo):
    return AnalysisService(m_plane_repo, m_map_repo)

@pytest.mark.regularity
def test_enumerate(analysis):
    report = analysis.enumerate(2, 4, 2)

    assert report.command == 'enumerate'
    assert report.verdicts == {'count': 35}
    assert len(report.certificates['planes']) == 35
    assert report.certificates['planes'][0] == [[0, 0, 1, 0], [0, 0, 0, 1]]

@pytest.mark.regularity
def test_enumerate_count_only(analysis):
    report = analysis.enumerate(3, 5, 2, count_only=True)

    assert report.verdicts == {'count': 1210}
    assert 'planes' not in report.certificates

@pytest.mark.regularity
def test_enumerate_too_large(analysis):
    with pytest.raises(TooLargeError) as excinfo:
        analysis.enumerate(2, 7, 3)

    assert excinfo.value.exit_code == 3

@pytest.mark.regularity
def test_analyze_regular(analysis, m_plane_repo, std4):
    m_plane_repo.read.return_value = coordinate_planes(std4, 2)

    report = analysis.analyze(PATH, 'regular')

    m_plane_repo.read.assert_called_once_with(PATH)
    assert report.verdicts == {'regular': True, 'maximal': True, 'exact': True}
    assert report.certificates['coordinate_system']['lines'] == list(std4.lines)
    assert report.parameters['count'] == 6
    assert report.parameters['mode'] == 'regular'

@pytest.mark.regularity
def test_analyze_degree(analysis, m_plane_repo, std4):
    R = hyperplane_pair_set(std4, 0, 1, 2)
    m_plane_repo.read.return_value = R

    report = analysis.analyze(PATH, 'degree')

    assert report.verdicts == {'degree': 1, 'exact': False}
    assert report.certificates['exact_superset'] == list(degree(R)[1].indices)

@pytest.mark.irregularity
def test_analyze_irregular(analysis, m_plane_repo, gf2, span_axes):
    m_plane_repo.read.return_value = x_set(span_axes(gf2, 4, 0, 1), 2)

    report = analysis.analyze(PATH, 'irregular')

    assert report.verdicts == {'irregular': True, 'maximal': True, 'n_1': 2, 'n_hyper': 2}
    assert report.certificates['characteristics']['s_1'] == [[1, 0, 0, 0], [0, 1, 0, 0]]

@pytest.mark.irregularity
@pytest.mark.parametrize('full, reason', [(False, 'regular'), (True, 'contains_maximal_regular')])
def test_analyze_not_irregular(analysis, m_plane_repo, std4, g24, full, reason):
    m_plane_repo.read.return_value = PlaneSet.full(g24) if full else coordinate_planes(std4, 2)

    report = analysis.analyze(PATH, 'irregular')

    assert report.verdicts == {'irregular': False, 'reason': reason}
    assert 'coordinate_system' in report.certificates

@pytest.mark.irregularity
def test_analyze_characteristics(analysis, m_plane_repo, g24):
    m_plane_repo.read.return_value = PlaneSet(g24)

    report = analysis.analyze(PATH, 'characteristics')

    assert report.verdicts == {'n_1': 0, 'n_hyper': 4}
    assert report.certificates['characteristics']['s_1'] is None

@pytest.mark.regularity
def test_analyze_unknown_mode(analysis, m_plane_repo, g24):
    m_plane_repo.read.return_value = PlaneSet(g24)

    with pytest.raises(OutOfRangeError) as excinfo:
        analysis.analyze(PATH, 'bogus')

    assert excinfo.value.detail == 'Неизвестный режим анализа: bogus!'

@pytest.mark.reconstruction
def test_classify_linear(analysis, m_map_repo, gf2, rng):
    m_map_repo.read.return_value = induced_map(random_semilinear(gf2, 4, rng), 2)

    report = analysis.classify(Path('map.txt'))

    assert report.verdicts == {'variant': 'linear', 'verified': True}
    assert report.certificates['classification']['sigma_exponent'] == 0
    assert report.parameters['k_prime'] == 2

@pytest.mark.reconstruction
def test_classify_between_grassmannians(analysis, m_map_repo, gf2):
    lines, planes = enumerate_grassmannian(3, 1, gf2), enumerate_grassmannian(3, 2, gf2)
    m_map_repo.read.return_value = GrassmannMap(lines, planes, tuple(range(7)))

    with pytest.raises(OutOfRangeError) as excinfo:
        analysis.classify(Path('map.txt'))

    assert excinfo.value.detail == "Классифицируются только преобразования: k = 1, k' = 2!"
