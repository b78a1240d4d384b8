"""Exception hierarchy shared by all cycloclass modules."""


class CycloclassError(Exception):
    """Base class for every error raised by this package."""


class NotOddPrime(CycloclassError):
    """The conductor of a prime cyclotomic field must be an odd prime."""


class RamifiedPrime(CycloclassError):
    """Multiplicative order was requested for a prime dividing the conductor."""


class NotADivisor(CycloclassError):
    """A residue degree f was given that does not divide the group order."""


class NotCoprime(CycloclassError):
    """An index a was given that shares a factor with the conductor."""


class IndexOutOfRange(CycloclassError):
    """A Kummer basis element index outside 1..(ell-1)/2 was requested."""


class ModulusMismatch(CycloclassError):
    """Two group-ring values over different conductors were combined."""


class ParseError(CycloclassError):
    """A textual group-ring element or rational could not be parsed."""


class DimensionMismatch(CycloclassError):
    """Matrix/vector shapes do not line up."""


class NotSquare(CycloclassError):
    """A determinant was requested for a non-square matrix."""


class MalformedTable(CycloclassError):
    """The class-number table file violates its format or invariants."""


class MissingPrime(CycloclassError):
    """The class-number table has no record for the requested prime."""


class InexactDivision(CycloclassError):
    """The Maillet determinant was not divisible by the expected prime power."""


class HPlusUnknown(CycloclassError):
    """h+ = 1 is not established for this conductor and was not assumed."""


class CertificateError(CycloclassError):
    """An internally produced certificate failed re-verification (a bug)."""
