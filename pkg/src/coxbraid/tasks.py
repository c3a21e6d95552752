from celery import shared_task
from .coxeter import CoxeterSystem
from .renderers import CSVRenderer, JSONRenderer
from .serializers import SweepReportSerializer, SweepRowSerializer, sweep_rows
from .sweeps import check_instance

import logging
log = logging.getLogger(__name__)


# =========================================================
# Rendering sweep reports
#

def generate_report_content(report, formats=('json', 'csv')):
    """
    Render a finished SweepReport in each of the given formats. JSON holds
    the whole report; CSV holds one row per instance and check.
    """
    content = {}
    for format in formats:
        if format == 'csv':
            data = SweepRowSerializer(sweep_rows(report), many=True).data
            content[format] = CSVRenderer().render(data)
        else:
            data = SweepReportSerializer(report).data
            content[format] = JSONRenderer().render(data)
    return content


# =========================================================
# Checking instances
#

@shared_task
def check_instance_task(system, word, checks=(), caps=None, seed=0, explore=False, exports=(),
                        budget=None):
    """
    Check the braid class of one word. ``system`` is CoxeterSystem.to_dict()
    output and ``word`` a word literal, so the arguments survive the JSON
    serializer.
    """
    system = CoxeterSystem.from_dict(system)
    log.debug('Checking [%s] in %s with seed %s' % (word, system, seed))
    return check_instance(system, system.parse_word(word), checks, caps, seed, explore,
                          exports, budget)


@shared_task
def check_batch_task(system, words, seeds, checks=(), caps=None, explore=False, exports=(),
                     budget=None):
    """
    Check a batch of words, one seed each, in a single task. Sweeps send
    their classes in batches of COXBRAID_SWEEP_BATCH.
    """
    system = CoxeterSystem.from_dict(system)
    log.debug('Checking %d words in %s' % (len(words), system))
    return [check_instance(system, system.parse_word(word), checks, caps, seed, explore,
                           exports, budget)
            for word, seed in zip(words, seeds)]
