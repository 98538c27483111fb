import json

import pytest
from click.testing import CliRunner
from commands.grassmann import REPORT_MARKER
from service.analysis import AnalysisService
from service.verification import VerificationService

@pytest.fixture(scope='function')
def runner():
    return CliRunner()

@pytest.fixture(scope='function')
def m_analysis(mocker):
    return mocker.Mock(spec=AnalysisService)

@pytest.fixture(scope='function')
def m_verification(mocker):
    return mocker.Mock(spec=VerificationService)

@pytest.fixture(scope='function')
def services(m_analysis, m_verification):
    return {'analysis': m_analysis, 'verification': m_verification}

@pytest.fixture(scope='function')
def report_of():
    def parse(result):
        text, _, payload = result.stdout.partition(REPORT_MARKER)
        return text, json.loads(payload)
    return parse
