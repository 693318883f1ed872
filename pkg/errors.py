"""
Exception hierarchy for conic-net classification.

Every error carries the exit code the CLI returns when it escapes a command.
"""


class ConicNetsError(Exception):
    """Base class. Subclasses set a distinct nonzero exit_code."""
    exit_code = 1


# --- Field construction ---

class CompositeModulus(ConicNetsError):
    exit_code = 10


class SmallCharacteristic(ConicNetsError):
    exit_code = 11


class IrreducibleSearchFailed(ConicNetsError):
    exit_code = 12


class UnsupportedField(ConicNetsError):
    exit_code = 13


class DivisionByZero(ConicNetsError, ZeroDivisionError):
    exit_code = 14


# --- Forms and cubic taxonomy ---

class ZeroForm(ConicNetsError):
    exit_code = 20


class NonReducedInput(ConicNetsError):
    exit_code = 21


class JUndefined(ConicNetsError):
    exit_code = 22


# --- Subspaces and orbits ---

class SingularMatrix(ConicNetsError):
    exit_code = 30


class NotSymmetric(ConicNetsError):
    exit_code = 31


class DependentBasis(ConicNetsError):
    exit_code = 32


class UnrecognizedPencil(ConicNetsError):
    exit_code = 33


class ImpossibleDiscriminant(ConicNetsError):
    exit_code = 34


# --- Algebras ---

class WrongHilbert(ConicNetsError):
    exit_code = 40


class NotLocal(ConicNetsError):
    exit_code = 41


class CharacteristicObstruction(ConicNetsError):
    exit_code = 42


class NotType33(ConicNetsError):
    exit_code = 43


# --- Oracle and CLI ---

class ConsistencyFailure(ConicNetsError):
    exit_code = 50

    def __init__(self, message, subspace=None):
        super().__init__(message)
        self.subspace = subspace


class ParseError(ConicNetsError):
    exit_code = 60


def exit_code_table():
    """(exit code, error name) pairs for every error class, sorted by code."""
    table = []
    pending = list(ConicNetsError.__subclasses__())
    while pending:
        cls = pending.pop()
        table.append((cls.exit_code, cls.__name__))
        pending.extend(cls.__subclasses__())
    return sorted(table)
