"""Exception types shared across the package."""


class IcatError(Exception):
    """Base class for all structured errors raised by icat."""


class ShapeMismatch(IcatError):
    """Structure matrices have dimensions inconsistent with the declared data."""


class NoFactorization(IcatError):
    """A map does not factor through the given inclusion (or projection)."""


class NotInvertible(IcatError):
    """A square matrix (or algebra element / convolution element) has no inverse."""


class ComonoidMismatch(IcatError):
    """Cotensor factors do not share their middle comonoid."""


class DomainMismatch(IcatError):
    """Cells being composed are not chainable."""


class NotComonoidMap(IcatError):
    """A matrix fails the comonoid-morphism laws."""


class GodementMismatch(IcatError):
    """The two defining expressions of a horizontal composite disagree."""


class IdentityMismatch(IcatError):
    """The two formulas for an identity natural transformation disagree."""


class NotPhiImage(IcatError):
    """A KL cell is not carried by the image of the functor embedding."""


class NotBiNatural(IcatError):
    """A candidate map fails the bi-naturality diagrams."""


class NotTAlgebra(IcatError):
    """A pair (y, sigma) fails the algebra laws over a monad."""


class NotIsomorphism(IcatError):
    """A comparison map fails to be an isomorphism of internal categories."""


class NotCentral(IcatError):
    """An element lies outside the computed centralizer subspace."""


class NotConvolutionInvertible(IcatError):
    """An element of a convolution algebra has no convolution inverse."""


class NotGalois(IcatError):
    """The canonical map of a comodule algebra is not bijective."""


class NotGrouplike(IcatError):
    """An element is not group-like."""


class LawViolation(IcatError):
    """Finite-category or monad tables violate their defining laws."""


class Mismatch(IcatError):
    """No basis bijection matches an internal category with classical tables."""


class ParseError(IcatError):
    """Malformed input document."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnresolvedReference(IcatError):
    """A document refers to a name that is not defined."""


class BadScalar(IcatError):
    """A scalar literal does not denote an element of the document's field."""
