import click

from commands.grassmann import COMMANDS
from core.logger import setup_logging
from service.analysis import get_analysis_service
from service.verification import get_verification_service

@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Подробный журнал в stderr')
@click.pass_context
def app(ctx: click.Context, verbose: bool):
    """Точные вычисления на многообразиях Грассмана над GF(q)."""
    setup_logging(verbose)
    # тесты подставляют свои сервисы через obj
    if ctx.obj is None:
        ctx.obj = {'analysis': get_analysis_service(),
                   'verification': get_verification_service()}

for command in COMMANDS:
    app.add_command(command)

if __name__ == '__main__':
    app()
