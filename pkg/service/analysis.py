from pathlib import Path
from typing import Literal

from core.exceptions import OutOfRangeError
from core.logger import get_logger
from models.grassmann import PlaneSet
from repository.files import (MapTableRepository, PlaneSetRepository, get_map_table_repository,
                              get_plane_set_repository)
from schemas.report import SCharacteristics, SClassification, SCoordinateSystem, SReport
from service.gf import field_make
from service.grassmann import enumerate_grassmannian
from service.irregularity import characteristics, contains_maximal_regular, is_maximal_irregular
from service.reconstruction import classify_transformation
from service.regularity import degree, is_exact, is_maximal_regular, is_regular
from utils import timed

logger = get_logger('analysis')

AnalyzeMode = Literal['regular', 'irregular', 'characteristics', 'degree']

class AnalysisService:
    def __init__(self, plane_repo: PlaneSetRepository, map_repo: MapTableRepository):
        self.plane_repo = plane_repo
        self.map_repo = map_repo

    @timed
    def enumerate(self, q: int, n: int, k: int, count_only: bool = False) -> SReport:
        index = enumerate_grassmannian(n, k, field_make(q))
        report = SReport(command='enumerate',
                         parameters={'q': q, 'n': n, 'k': k, 'count_only': count_only},
                         verdicts={'count': len(index)})
        if not count_only:
            report.certificates['planes'] = [[list(row) for row in s.basis.to_rows()] for s in index]
        return report

    def _regular(self, I: PlaneSet, report: SReport) -> None:
        C = is_regular(I)
        report.verdicts['regular'] = C is not None
        if C is None:
            return
        report.verdicts['maximal'] = is_maximal_regular(I)
        report.verdicts['exact'] = is_exact(I)
        report.certificates['coordinate_system'] = SCoordinateSystem.of(C).model_dump()

    def _irregular(self, I: PlaneSet, report: SReport) -> None:
        C = is_regular(I)
        reason = 'regular'
        if C is None:
            C = contains_maximal_regular(I)
            reason = 'contains_maximal_regular'
        report.verdicts['irregular'] = C is None
        if C is not None:
            report.verdicts['reason'] = reason
            report.certificates['coordinate_system'] = SCoordinateSystem.of(C).model_dump()
            return
        report.verdicts['maximal'] = is_maximal_irregular(I)
        self._characteristics(I, report)

    def _characteristics(self, I: PlaneSet, report: SReport) -> None:
        record = characteristics(I)
        report.verdicts['n_1'] = record.n_1
        report.verdicts['n_hyper'] = record.n_hyper
        report.certificates['characteristics'] = SCharacteristics.of(record).model_dump()

    def _degree(self, I: PlaneSet, report: SReport) -> None:
        d, witness = degree(I)
        report.verdicts['degree'] = d
        report.verdicts['exact'] = d == 0
        report.certificates['exact_superset'] = list(witness.indices)

    @timed
    def analyze(self, path: Path, mode: AnalyzeMode = 'regular') -> SReport:
        I = self.plane_repo.read(path)
        index = I.index
        report = SReport(command='analyze',
                         parameters={'in': str(path), 'mode': mode, 'q': index.spec.q,
                                     'n': index.n, 'k': index.k, 'count': len(I)})
        handlers = {
            'regular': self._regular,
            'irregular': self._irregular,
            'characteristics': self._characteristics,
            'degree': self._degree,
        }
        if mode not in handlers:
            raise OutOfRangeError(f'Неизвестный режим анализа: {mode}!')
        handlers[mode](I, report)
        logger.info('analyze %s: %s', mode, report.verdicts)
        return report

    @timed
    def classify(self, path: Path) -> SReport:
        f = self.map_repo.read(path)
        n, k, k_prime = f.domain.n, f.domain.k, f.codomain.k
        report = SReport(command='classify',
                         parameters={'in': str(path), 'q': f.domain.spec.q, 'n': n, 'k': k, 'k_prime': k_prime})
        if k != k_prime:
            raise OutOfRangeError(f"Классифицируются только преобразования: k = {k}, k' = {k_prime}!")
        result = classify_transformation(f)
        report.verdicts['variant'] = result.variant
        report.verdicts['verified'] = result.verified
        report.certificates['classification'] = SClassification.of(result).model_dump()
        return report

def get_analysis_service() -> AnalysisService:
    return AnalysisService(get_plane_set_repository(), get_map_table_repository())
