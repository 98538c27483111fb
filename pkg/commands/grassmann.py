import sys
from functools import wraps
from pathlib import Path

import click

from core.exceptions import BaseError
from core.logger import get_logger
from schemas.report import SReport

logger = get_logger('commands')

REPORT_MARKER = '--- report ---'

def handle_errors(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BaseError as e:
            logger.debug('%s: %s', type(e).__name__, e.detail)
            click.echo(f'Ошибка: {e.detail}', err=True)
            sys.exit(e.exit_code)
    return wrapper

def emit(lines: list[str], report: SReport, code: int = 0) -> None:
    for line in lines:
        click.echo(line)
    click.echo(REPORT_MARKER)
    click.echo(report.model_dump_json(indent=2))
    sys.exit(code)

@click.command('enumerate')
@click.option('--q', 'q', type=int, required=True, help='Порядок поля')
@click.option('--n', 'n', type=int, required=True, help='Размерность пространства')
@click.option('--k', 'k', type=int, required=True, help='Размерность плоскостей')
@click.option('--count-only', is_flag=True, help='Только число плоскостей')
@click.pass_obj
@handle_errors
def enumerate_planes(services: dict, q: int, n: int, k: int, count_only: bool):
    """Канонический список плоскостей G_k^n(GF(q))."""
    report = services['analysis'].enumerate(q, n, k, count_only)
    emit([f'|G_{k}^{n}(GF({q}))| = {report.verdicts["count"]}'], report)

@click.command('analyze')
@click.option('--in', 'path', type=click.Path(path_type=Path), required=True, help='Файл множества плоскостей')
@click.option('--mode', type=click.Choice(['regular', 'irregular', 'characteristics', 'degree']),
              default='regular', show_default=True)
@click.pass_obj
@handle_errors
def analyze(services: dict, path: Path, mode: str):
    """Регулярность, иррегулярность, характеристики или степень неточности множества плоскостей."""
    report = services['analysis'].analyze(path, mode)
    emit([f'{key}: {value}' for key, value in report.verdicts.items()], report)

@click.command('classify')
@click.option('--in', 'path', type=click.Path(path_type=Path), required=True, help='Файл таблицы отображения')
@click.pass_obj
@handle_errors
def classify(services: dict, path: Path):
    """Классификация преобразования многообразия Грассмана по таблице."""
    report = services['analysis'].classify(path)
    certificate = report.certificates['classification']
    lines = [f'variant: {certificate["variant"]}']
    if certificate['sigma_exponent'] is not None:
        lines.append(f'sigma: Frob^{certificate["sigma_exponent"]}')
    if certificate['reason']:
        lines.append(f'reason: {certificate["reason"]}')
    emit(lines, report, 1 if certificate['variant'] == 'not_classifiable' else 0)

@click.command('verify')
@click.option('--check', '--theorem', 'check', required=True,
              help='Идентификатор проверки или all')
@click.option('--q', 'q', type=int, required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--k', 'k', type=int, required=True)
@click.pass_obj
@handle_errors
def verify(services: dict, check: str, q: int, n: int, k: int):
    """Проверка утверждения на всех экземплярах в пределах области выполнимости."""
    service = services['verification']
    if check == 'all':
        report = service.verify_all(q, n, k)
    else:
        report = service.verify(check, q, n, k)
    lines = []
    for name, passed in report.verdicts.items():
        result = report.certificates[name]
        lines.append(f'{name}: {"PASS" if passed else "FAIL"} ({result["examined"]} проверено; {result["scope"]})')
    for name in report.parameters.get('skipped', []):
        lines.append(f'{name}: пропущена, вне области выполнимости')
    emit(lines, report, 0 if all(report.verdicts.values()) else 1)

COMMANDS = (enumerate_planes, analyze, classify, verify)
