from django.core.management.base import CommandError

from ...braids import braid_graph
from ...checks import majority, median_via_majority
from ...links import Signature
from ...params import EXIT_USAGE
from ...serializers import MedianSerializer
from ..base import BraidCommand


class Command (BraidCommand):
    help = 'Print the median of three braid-equivalent reduced words and its signature.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--word', action='append', required=True,
                            help='Give exactly three times.')

    def run(self, **options):
        if len(options['word']) != 3:
            raise CommandError('median needs exactly three --word options; got %d.'
                               % len(options['word']), returncode=EXIT_USAGE)
        system = self.get_system(options)
        a, b, c = [system.parse_word(text) for text in options['word']]

        bg = braid_graph(system, a, options['budget'])
        median = median_via_majority(system, a, b, c, bg=bg, explore=options['explore'])
        vote = majority(*[bg.center_letters(bg.vertex(w)) for w in (a, b, c)])

        data = MedianSerializer({
            'system': str(system),
            'words': [system.format_word(w) for w in (a, b, c)],
            'majority': str(vote),
            'median': system.format_word(median) if median is not None else None,
            'signature': (str(Signature(bg.center_letters(bg.vertex(median))))
                          if median is not None else None),
        }).data
        self.emit(self.render(data, options), options)
