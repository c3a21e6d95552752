"""
Errors raised by the coxbraid library.

Management commands map these onto exit codes (see params.EXIT_CODES), so
keep new errors inside this hierarchy.
"""


class CoxbraidError (Exception):
    pass


class SystemSpecError (CoxbraidError, ValueError):
    pass


class InvalidWord (CoxbraidError, ValueError):
    pass


class InvalidMove (CoxbraidError, ValueError):
    pass


class NotReduced (CoxbraidError, ValueError):
    def __init__(self, word, witness=None):
        self.word = word
        self.witness = witness
        message = 'The word %r is not reduced.' % (str(word),)
        if witness is not None:
            message += ' It is move-equivalent to %r, which repeats a letter at positions %d and %d.' % (
                str(witness[0]), witness[1], witness[1] + 1)
        super(NotReduced, self).__init__(message)


class NotBraidEquivalent (CoxbraidError, ValueError):
    pass


class OutsideHypotheses (CoxbraidError):
    """
    Raised when a check that depends on the system being triangle free is
    requested for a system that is not, and exploration is off.
    """
    pass


class GraphError (CoxbraidError, ValueError):
    pass


class DisconnectedGraph (GraphError):
    pass


class NotAnEdge (GraphError):
    pass


class NotACycle (GraphError):
    pass


class NotConvex (GraphError):
    pass


class NotAPartialCube (GraphError):
    pass


class GraphTooLarge (GraphError):
    pass


class BudgetExceeded (CoxbraidError):
    @classmethod
    def of(cls, budget, what='words'):
        return cls('Search exceeded the budget of %d %s. Raise COXBRAID_BUDGET or pass '
                   '--budget to allow a larger search.' % (budget, what))


class InvariantViolation (CoxbraidError, AssertionError):
    """
    A property that always holds for braid classes did not hold. This means a
    bug in this package, never an interesting counterexample.
    """
    def __init__(self, message, witness=None):
        self.witness = witness
        super(InvariantViolation, self).__init__(message)


class OutOfRange (CoxbraidError, ValueError):
    pass


class LengthMismatch (CoxbraidError, ValueError):
    pass


class SweepConfigError (CoxbraidError, ValueError):
    pass
