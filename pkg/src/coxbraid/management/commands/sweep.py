import io
from django.core.management.base import CommandError

from ...params import CSV_FORMAT, EXIT_COUNTEREXAMPLE, JSON_FORMAT
from ...parsers import SweepConfigParser
from ...serializers import SweepConfigSerializer
from ...sweeps import InstanceSpec, run_sweep
from ...tasks import generate_report_content
from ..base import BraidCommand

import logging
log = logging.getLogger(__name__)


class Command (BraidCommand):
    help = ('Run a conjecture sweep described by a JSON config file. Exits 2 when a '
            'counterexample is found.')
    formats = (JSON_FORMAT, CSV_FORMAT)
    uses_system = False

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--config', required=True, help='Sweep config JSON file.')

    def load_config(self, path):
        with open(path, 'rb') as f:
            data = SweepConfigParser().parse(io.BytesIO(f.read()))
        serializer = SweepConfigSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def run(self, **options):
        config = self.load_config(options['config'])
        spec = InstanceSpec.from_config(config, seed=options['seed'], explore=options['explore'],
                                        budget=options['budget'])
        report = run_sweep(spec)

        format = options['format']
        self.emit(generate_report_content(report, [format])[format], options)

        if report.has_counterexamples:
            raise CommandError('%d counterexample(s) found; see the report for reproduction data.'
                               % len(report.counterexamples), returncode=EXIT_COUNTEREXAMPLE)
