import click

from pcn_bench.helpers.constants import OutputFormat, Technique
from pcn_bench.helpers.decorators import BaseCommand, ResponseDecorator
from pcn_bench.helpers.log_helper import get_logger, init_console_handler
from pcn_bench.services import SERVICE_PROVIDER
from pcn_bench.version import __version__
from pcn_bench_cli.pcn_handler.bench_handler import BenchHandler
from pcn_bench_cli.pcn_handler.run_handler import RunHandler

_LOG = get_logger(__name__)

TECHNIQUES = [t.value for t in Technique]


def run_handler_instance():
    return RunHandler(
        scenario_service=SERVICE_PROVIDER.scenario_service,
        bench_service=SERVICE_PROVIDER.bench_service,
    )


def bench_handler_instance():
    return BenchHandler(
        scenario_service=SERVICE_PROVIDER.scenario_service,
        bench_service=SERVICE_PROVIDER.bench_service,
    )


def scenario_options(fn):
    """
    Options shared by every command that resolves a single scenario
    """
    options = (
        click.option('--technique', '-t', type=click.Choice(TECHNIQUES),
                     help='Metering technique'),
        click.option('--bandwidth', '-b', type=str,
                     help='Total bandwidth, e.g. 50mbps'),
        click.option('--duration', '-d', type=str,
                     help='Simulated seconds, e.g. 60 or 500ms'),
        click.option('--seed', '-s', type=int, help='Random seed'),
        click.option('--config', '-c', 'config_path', type=str,
                     help='Path to a key=value scenario file'),
        click.option('--override', '-o', 'overrides', multiple=True,
                     help='key=value applied over the file and flags. '
                          'Can be repeated'),
    )
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group()
@click.version_option(__version__, '-v', '--version')
def pcn():
    """
    Pre-congestion notification metering benchmark
    """


@pcn.command(cls=BaseCommand, name='run')
@scenario_options
@click.option('--out', 'out_path', type=str,
              help='Also write the record as CSV to this path')
@click.option('--verbose', is_flag=True, help='Print logs to the console')
@ResponseDecorator(click.echo, 'Can not run scenario')
def run(technique, bandwidth, duration, seed, config_path, overrides,
        out_path, verbose):
    """
    Runs one scenario and prints its metrics
    """
    if verbose:
        init_console_handler()
    return run_handler_instance().run_handler(
        technique=technique, bandwidth=bandwidth, duration=duration,
        seed=seed, config_path=config_path, overrides=overrides,
        out_path=out_path)


@pcn.command(name='bench')
@click.option('--bandwidth', '-b', 'bandwidths', multiple=True, type=str,
              help='Bandwidth tier. Can be repeated. Default: 30, 40 and '
                   '50 Mbps')
@click.option('--seeds', type=str,
              help='Seeds as 1,2,3 or 1-5. Default: 1-5')
@click.option('--duration', '-d', type=str,
              help='Simulated seconds per scenario')
@click.option('--config', '-c', 'config_path', type=str,
              help='Path to a key=value scenario file')
@click.option('--override', '-o', 'overrides', multiple=True,
              help='key=value applied to every scenario. Can be repeated')
@click.option('--output', type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.TABLE.value, show_default=True,
              help='What to print')
@click.option('--out', 'out_path', type=str,
              help='Write the per-run CSV to this path')
@click.option('--strict', is_flag=True,
              help='Exit with an error if a trend claim fails')
@click.option('--verbose', is_flag=True, help='Print logs to the console')
@ResponseDecorator(click.echo, 'Can not run benchmark', custom_view=True)
def bench(bandwidths, seeds, duration, config_path, overrides, output,
          out_path, strict, verbose):
    """
    Runs every technique at every tier for every seed, prints the benchmark
    table, the trend check and the per-run CSV
    """
    if verbose:
        init_console_handler()
    return bench_handler_instance().bench_handler(
        bandwidths=bandwidths, seeds=seeds, duration=duration,
        config_path=config_path, overrides=overrides, output=output,
        out_path=out_path, strict=strict)


@pcn.command(cls=BaseCommand, name='validate')
@scenario_options
@ResponseDecorator(click.echo, 'Invalid scenario')
def validate(technique, bandwidth, duration, seed, config_path, overrides):
    """
    Prints the resolved scenario without running it
    """
    return run_handler_instance().validate_handler(
        technique=technique, bandwidth=bandwidth, duration=duration,
        seed=seed, config_path=config_path, overrides=overrides)
