import hashlib
from django.conf import settings
from functools import wraps


def memo(f):
    """
    A memoization decorator for methods of immutable objects. Results are
    kept per instance in ``self._method_memos``.

    You can create a memoized property like:

        @property
        @memo
        def attr(self):
            ...

    """
    @wraps(f)
    def get(self, *args, **kwargs):
        key = (f.__name__, args, tuple(kwargs.items()))
        try:
            return self._method_memos[key]
        except AttributeError:
            self._method_memos = {}
            x = self._method_memos[key] = f(self, *args, **kwargs)
            return x
        except KeyError:
            x = self._method_memos[key] = f(self, *args, **kwargs)
            return x

    return get


def memoized(obj, key, compute):
    """
    The function-call counterpart of ``memo``: return the result kept on
    ``obj`` under ``key``, calling ``compute()`` the first time.
    """
    try:
        memos = obj._method_memos
    except AttributeError:
        memos = obj._method_memos = {}
    try:
        return memos[key]
    except KeyError:
        x = memos[key] = compute()
        return x


def setting_or(name, value):
    """
    Return ``value`` unless it is None, in which case fall back to the
    ``COXBRAID_<name>`` setting.
    """
    if value is not None:
        return value
    return getattr(settings, 'COXBRAID_' + name)


def derive_seed(master_seed, key):
    """
    Derive a reproducible 64-bit seed for a work item from the master seed
    and a stable key (usually a word literal). The result does not depend on
    the order in which work items are scheduled.
    """
    digest = hashlib.sha256(('%s:%s' % (master_seed, key)).encode('utf-8')).hexdigest()
    return int(digest[:16], 16)


def popcount(mask):
    return bin(mask).count('1')


def bits(mask):
    """
    Yield the indexes of the set bits of an integer, lowest first.
    """
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1
