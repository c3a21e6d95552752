from os import environ

DEBUG = True

ADMINS = (
    # ('Your Name', 'your_email@example.com'),
)

MANAGERS = ADMINS

# Nothing is stored; Django only wants a database configured.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

###############################################################################
#
# Server Configuration
#

ALLOWED_HOSTS = []
SECRET_KEY = 'coxbraid-has-no-web-surface-so-this-key-signs-nothing'
DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

TIME_ZONE = 'UTC'
USE_TZ = True

###############################################################################
#
# Braid classes and sweeps
# ------------------------
# Every COXBRAID_* value can be overridden with local_settings.py; the ones
# read from the environment below are the ones worth changing per run.
#

# Largest closure (reduced expressions, braid or commutation class) a single
# search may build before raising BudgetExceeded. The --budget option of the
# management commands overrides it per run.
COXBRAID_BUDGET = 10 ** 6

# With commutation moves turned off every m=2 pair behaves as m=infinity, so
# only braid moves connect reduced words.
COXBRAID_COMMUTATION_MOVES = True

# Run the triangle-free checks on other systems, reporting what they observe
# instead of refusing.
COXBRAID_EXPLORE = False

# Graph checks
COXBRAID_MEDIAN_VERTEX_CAP = 2000
COXBRAID_MEDIAN_SAMPLES = 100
COXBRAID_CYCLE_CAP = 10 ** 4
COXBRAID_GEODESIC_CAP = 10 ** 4

# Sweeps
COXBRAID_TRIPLE_CAP = 10 ** 5
COXBRAID_MAX_SWEEP_LENGTH = 16
COXBRAID_SWEEP_WORD_BUDGET = 10 ** 6
# Braid classes checked per Celery task. Workers pick batches up in parallel
# when a broker is configured.
COXBRAID_SWEEP_BATCH = 200

###############################################################################
#
# Django Rest Framework
#
# Serializers and renderers only; there are no API views.
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

###############################################################################
#
# Pluggable Applications
#

INSTALLED_APPS = (
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # =================================
    # 3rd-party reusaple apps
    # =================================
    'rest_framework',

    # =================================
    # Project apps
    # =================================
    'coxbraid',
)


###############################################################################
#
# Background task processing
#
# Sweeps send one task per braid class. Without a broker the tasks run
# eagerly in the calling process.

CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']


################################################################################
#
# Logging Configuration
#
# Everything goes to stderr; stdout carries command output only.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(name)s: %(message)s %(process)d %(thread)d'
        },
        'moderate': {
            'format': '%(levelname)s %(asctime)s %(name)s: %(message)s'
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'moderate'
        },
    },
    'loggers': {
        'coxbraid': {
            'handlers': ['console'],
            'level': 'DEBUG',
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True,
        },
    }
}

##############################################################################
# Environment loading

if 'DEBUG' in environ:
    DEBUG = (environ['DEBUG'].lower() == 'true')

if 'COXBRAID_BUDGET' in environ:
    COXBRAID_BUDGET = int(environ['COXBRAID_BUDGET'])

if environ.get('COXBRAID_DISABLE_COMMUTATION', '').lower() in ('1', 'true', 'yes'):
    COXBRAID_COMMUTATION_MOVES = False

if environ.get('COXBRAID_EXPLORE', '').lower() in ('1', 'true', 'yes'):
    COXBRAID_EXPLORE = True

# Look for the following redis environment variables, in order
for REDIS_URL_ENVVAR in ('REDIS_URL', 'OPENREDIS_URL'):
    if REDIS_URL_ENVVAR in environ: break
else:
    REDIS_URL_ENVVAR = None

if REDIS_URL_ENVVAR:
    # Celery broker and results; tasks go to workers started with
    # `celery -A project worker`.
    CELERY_BROKER_URL = environ[REDIS_URL_ENVVAR].strip('/') + '/1'
    CELERY_RESULT_BACKEND = environ[REDIS_URL_ENVVAR].strip('/') + '/2'
    CELERY_TASK_ALWAYS_EAGER = False

if 'CONSOLE_LOG_LEVEL' in environ:
    LOGGING['handlers']['console']['level'] = environ.get('CONSOLE_LOG_LEVEL')


##############################################################################
# Local settings overrides
# ------------------------
# Override settings values by importing the local_settings.py module.

try:
    from .local_settings import *
except ImportError:
    pass
