class LatticeSchemeError(Exception):
    """Base error for every failure the library reports"""
    pass


class PreconditionError(LatticeSchemeError, ValueError):
    """An operation was called outside its domain (zero, unit, wrong prime class...)"""
    pass


class SchemeConsistencyError(LatticeSchemeError):
    """A computed structure is not an association scheme"""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class OrderingError(LatticeSchemeError):
    pass


class ConfigurationError(LatticeSchemeError):
    pass
