'''Error types raised by the engine.

Every error carries a short ``kind`` token so the command line front end can
emit a structured record without inspecting messages.
'''


class DPOrdersError(Exception):
    '''Base class for all engine errors.'''

    kind = "error"


class DimensionError(DPOrdersError):
    '''Two classes live on different surfaces (basis mismatch).'''

    kind = "dimension"


class LineageError(DPOrdersError):
    '''A surface is not an ancestor or descendant of another as required.'''

    kind = "lineage"


class IncidenceError(DPOrdersError):
    '''An incidence references an unknown point or curve.'''

    kind = "incidence"


class InvalidConfiguration(DPOrdersError):
    '''Declared data violates a structural rule (proximity, node degrees, ...).'''

    kind = "invalid-configuration"


class BudgetExceeded(DPOrdersError):
    '''Too many blowups for the bounded generator enumeration.'''

    kind = "budget"


class NotApplicable(DPOrdersError):
    '''A criterion was asked of an order outside its hypotheses.'''

    kind = "not-applicable"


class PredicateViolation(DPOrdersError):
    '''An operation required a predicate (e.g. almost del Pezzo) that fails.'''

    kind = "predicate"


class UnsupportedContraction(DPOrdersError):
    '''The requested curve is not a contractible leaf of the blowup forest.'''

    kind = "unsupported-contraction"


class FlavorMismatch(DPOrdersError):
    '''A position flavor was requested on an incompatible base surface.'''

    kind = "flavor"


class UnknownFixture(DPOrdersError):
    '''No catalog entry with the requested id.'''

    kind = "unknown-fixture"


class ParseError(DPOrdersError):
    '''Input text is not a well formed order description.'''

    kind = "parse"
