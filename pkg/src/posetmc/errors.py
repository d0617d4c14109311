"""Exception types raised across the package."""


class PosetmcError(Exception):
    """Base class for all errors raised by posetmc."""


class CycleError(PosetmcError, ValueError):
    """The order pairs close into a relation that is not antisymmetric."""

    def __init__(self, cycle, names=None):
        self.cycle = list(cycle)
        label = (lambda i: names[i]) if names is not None else str
        shown = " < ".join(label(i) for i in self.cycle + self.cycle[:1])
        super().__init__(f"order pairs contain a cycle: {shown}")

    @property
    def pair(self):
        """Two distinct elements p, q with p <= q <= p."""
        return self.cycle[0], self.cycle[1]


class PosetFormatError(PosetmcError, ValueError):
    pass


class SentenceSyntaxError(PosetmcError, SyntaxError):
    def __init__(self, message, text="", position=0):
        self.position = position
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.offset = position + 1


class UnboundVariableError(PosetmcError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"variable {name!r} is not quantified")


class DuplicateVariableError(PosetmcError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"variable {name!r} is quantified more than once")


class EmptyDomainError(PosetmcError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"variable {name!r} has an empty domain")


class TrivialPosetError(PosetmcError, ValueError):
    pass


class BudgetExceededError(PosetmcError, RuntimeError):
    pass


class IllFormedHypergraphError(PosetmcError, ValueError):
    pass
