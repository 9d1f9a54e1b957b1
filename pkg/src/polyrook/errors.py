"""Exception hierarchy shared by all polyrook modules."""


class PolyrookError(Exception):
    """Base class for all errors raised by this package."""


# -- grid construction -------------------------------------------------------

class EmptyCellSet(PolyrookError):
    pass


class DisconnectedCells(PolyrookError):
    def __init__(self, cell_a, cell_b):
        self.cell_a = cell_a
        self.cell_b = cell_b
        super().__init__(f"cells {cell_a} and {cell_b} lie in distinct components")


# -- families ----------------------------------------------------------------

class EndpointMismatch(PolyrookError):
    pass


class PathsCross(PolyrookError):
    pass


class EmptyRegion(PolyrookError):
    pass


class SpecViolation(PolyrookError):
    pass


class NotAFrame(PolyrookError):
    pass


class NotParallelogram(PolyrookError):
    pass


# -- ideal / polynomial machinery ---------------------------------------------

class OrderContradiction(PolyrookError):
    pass


class UnstableTail(PolyrookError):
    pass


class InconsistentDimension(PolyrookError):
    pass


# -- simplicial complex --------------------------------------------------------

class NotAFacet(PolyrookError):
    pass


class CardinalityMismatch(PolyrookError):
    pass


class NotPure(PolyrookError):
    pass


class NotShellable(PolyrookError):
    pass


# -- rooks ---------------------------------------------------------------------

class CellNotInPolyomino(PolyrookError):
    pass


class InvalidMove(PolyrookError):
    pass


class ResultAttacks(PolyrookError):
    """A switch produced an attacking pair; signals a policy inconsistency."""


class NoCanonicalInClass(PolyrookError):
    pass


# -- correspondence --------------------------------------------------------------

class LemmaViolation(PolyrookError):
    """A structural guarantee of the facet-to-rooks construction failed."""


# -- budgets / io -----------------------------------------------------------------

class BudgetExceeded(PolyrookError):
    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} units, budget is {budget}")


class OverlayOutOfRange(PolyrookError):
    pass


class ParseError(PolyrookError):
    pass
