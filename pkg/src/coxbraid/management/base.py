"""
Shared plumbing for the coxbraid management commands: the common options,
system resolution, output, and the mapping from library errors onto exit
codes (see params.EXIT_CODES).
"""
import sys
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError

from ..coxeter import resolve_system
from ..exceptions import BudgetExceeded, CoxbraidError, InvariantViolation, SystemSpecError
from ..params import EXIT_BUDGET, EXIT_INVARIANT, EXIT_USAGE, JSON_FORMAT, TEXT_FORMAT
from ..renderers import JSONRenderer, TextRenderer

import logging
log = logging.getLogger(__name__)


class BraidCommand (BaseCommand):
    formats = (TEXT_FORMAT, JSON_FORMAT)
    uses_system = True

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(BraidCommand, self).create_parser(prog_name, subcommand, **kwargs)
        # Bad arguments exit 1 through CommandError, not 2 through argparse.
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super(BraidCommand, self).run_from_argv(argv)
        except CommandError as e:
            self.stderr.write('%s: %s' % (e.__class__.__name__, e))
            sys.exit(e.returncode)

    def add_arguments(self, parser):
        if self.uses_system:
            source = parser.add_mutually_exclusive_group(required=True)
            source.add_argument('--system', help='Named system FAMILY:RANK (e.g. D:4, affA:2) '
                                'or a system specification such as "n=3; 3: (1,2)(2,3)".')
            source.add_argument('--system-file', help='File holding a system specification.')
        parser.add_argument('--format', choices=self.formats, default=self.formats[0])
        parser.add_argument('--budget', type=int, default=None,
                            help='Closure node budget; overrides COXBRAID_BUDGET.')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--explore', action='store_true', default=None,
                            help='Run triangle-free checks on other systems as observations.')
        parser.add_argument('--output', default=None, help='Write to this file, not stdout.')

    def get_system(self, options):
        if options.get('system_file'):
            try:
                with open(options['system_file']) as f:
                    text = f.read()
            except OSError as e:
                raise SystemSpecError('Cannot read system file %s: %s'
                                      % (options['system_file'], e.strerror))
            return resolve_system(text)
        return resolve_system(options['system'])

    def emit(self, content, options):
        """
        Write rendered bytes to --output or stdout.
        """
        path = options.get('output')
        if path:
            with open(path, 'wb') as f:
                f.write(content)
            log.info('Wrote %d bytes to %s', len(content), path)
        else:
            self.stdout.write(content.decode('utf-8'), ending='')

    def render(self, data, options, renderer_context=None):
        renderer = JSONRenderer() if options['format'] == JSON_FORMAT else TextRenderer()
        return renderer.render(data, renderer_context=renderer_context)

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except BudgetExceeded as e:
            raise CommandError(str(e), returncode=EXIT_BUDGET)
        except InvariantViolation as e:
            log.error('Invariant violated: %s (witness: %r)', e, e.witness)
            raise CommandError('Internal invariant violated, which is a bug in coxbraid: %s'
                               % (e,), returncode=EXIT_INVARIANT)
        except (CoxbraidError, ParseError) as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except ValidationError as e:
            raise CommandError('Invalid input: %s' % (e.detail,), returncode=EXIT_USAGE)
        except OSError as e:
            raise CommandError('%s: %s' % (e.filename or 'I/O error', e.strerror),
                               returncode=EXIT_USAGE)

    def run(self, **options):
        raise NotImplementedError()
