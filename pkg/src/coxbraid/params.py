from django.conf import settings

# Exit codes of the management commands
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4

EXIT_CODES = {
    'ok': EXIT_OK,
    'usage': EXIT_USAGE,
    'counterexample': EXIT_COUNTEREXAMPLE,
    'invariant': EXIT_INVARIANT,
    'budget': EXIT_BUDGET,
}

# Output formats
TEXT_FORMAT = 'text'
JSON_FORMAT = 'json'
DOT_FORMAT = 'dot'
CSV_FORMAT = 'csv'

# Graph kinds for the graph command
BRAID_GRAPH = 'braid'
MATSUMOTO_GRAPH = 'matsumoto'

# Sweep config keys
SWEEP_CONFIG_KEYS = ('system', 'mode', 'L', 'seed', 'count', 'checks', 'caps', 'min_dimension',
                     'links_only', 'explore', 'exports')
MAX_SWEEP_LENGTH = lambda: settings.COXBRAID_MAX_SWEEP_LENGTH
