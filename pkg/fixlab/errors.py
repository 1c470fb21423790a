"""Business logic exceptions for the fixlab package."""

from typing_extensions import override


class FixlabError(Exception):
    """Base class for exceptions in this package."""


class VacuityWarning(UserWarning):
    """Warning issued when a result holds only because nothing is checked."""


# kernel


class MissingAssignment(FixlabError):
    """Exception raised when a function table leaves an element unassigned."""

    @override
    def __init__(self, element: str) -> None:
        self.element = element
        super().__init__(f"No image assigned to domain element {element!r}")


class ForeignElement(FixlabError):
    """Exception raised when a label does not belong to the expected set."""

    @override
    def __init__(self, element: str, *, where: str = "codomain") -> None:
        self.element = element
        super().__init__(f"Element {element!r} is not in the {where}")


class CompositionMismatch(FixlabError):
    """Exception raised when composing functions that do not line up."""

    @override
    def __init__(self, left: object, right: object) -> None:
        super().__init__(
            f"Cannot compose {left!r} after {right!r}: "
            "codomain and domain differ"
        )


class SizeLimitExceeded(FixlabError):
    """Exception raised when an enumeration would exceed the budget."""

    @override
    def __init__(self, size: int, cap: int) -> None:
        self.size = size
        self.cap = cap
        super().__init__(
            f"Enumeration of {size} items exceeds the configured cap {cap}"
        )


# instances


class InvalidSpec(FixlabError):
    """Exception raised when an instance specification is not valid."""


class NotAMorphism(FixlabError):
    """Exception raised when a function is rejected by the hom predicate."""

    @override
    def __init__(self, function: object, *, source: str, target: str) -> None:
        self.function = function
        super().__init__(
            f"{function!r} is not a morphism {source} -> {target}"
        )


class MissingDiagonal(FixlabError):
    """Exception raised when a diagonal is undefined on an object."""

    @override
    def __init__(self, obj: str) -> None:
        self.obj = obj
        super().__init__(f"Diagonal is not defined on object {obj!r}")


class MissingProjection(FixlabError):
    """Exception raised when an instance has no right projections."""

    @override
    def __init__(self, variant: str) -> None:
        super().__init__(f"Instance {variant!r} supplies no right projection")


class MissingInternalHom(FixlabError):
    """Exception raised when an instance has no internal hom recipe."""

    @override
    def __init__(self, variant: str) -> None:
        super().__init__(f"Instance {variant!r} has no internal hom recipe")


class NotNatural(FixlabError):
    """Exception raised when a family of morphisms fails naturality."""

    @override
    def __init__(self, family: str, morphism: object) -> None:
        self.morphism = morphism
        super().__init__(f"{family} is not natural at {morphism!r}")


class MissingComultiplication(FixlabError):
    """Exception raised when a flat endofunctor carries no comultiplication."""

    @override
    def __init__(self) -> None:
        super().__init__("Flat endofunctor has no comultiplication")


# theorems


class NotTFree(FixlabError):
    """Exception raised when an endomorphism fixes some t-point."""

    @override
    def __init__(self, witness: object) -> None:
        self.witness = witness
        super().__init__(f"Endomorphism is not t-free: it fixes {witness!r}")


class NotASection(FixlabError):
    """Exception raised when a claimed section does not split its map."""

    @override
    def __init__(self, retraction: str, section: str) -> None:
        super().__init__(f"{section} is not a section of {retraction}")


class HypothesisFailed(FixlabError):
    """Exception raised when a theorem hypothesis fails on some input."""

    @override
    def __init__(self, hypothesis: str, witness: object) -> None:
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(f"Hypothesis {hypothesis!r} fails at {witness!r}")


class NotPointSurjective(FixlabError):
    """Exception raised when a t-point does not lift along a morphism."""

    @override
    def __init__(self, point: object) -> None:
        self.point = point
        super().__init__(f"t-point {point!r} has no lift")


class NotRegularEpi(FixlabError):
    """Exception raised when t' -> 1 is not a regular epimorphism."""

    @override
    def __init__(self, obj: str) -> None:
        super().__init__(
            f"Map from {obj!r} to the terminal object is not a regular epi"
        )


# uniform


class NotRepresentable(FixlabError):
    """Exception raised when a hom candidate fails its certificate."""

    @override
    def __init__(self, probe: str, reason: str, morphism: object) -> None:
        self.probe = probe
        self.morphism = morphism
        super().__init__(
            f"Candidate is not representing at probe {probe!r}: "
            f"{reason} {morphism!r}"
        )


class NoSolution(FixlabError):
    """Exception raised when curry finds no transpose."""

    @override
    def __init__(self, morphism: object) -> None:
        self.morphism = morphism
        super().__init__(f"No morphism curries to {morphism!r}")


class MultipleSolutions(FixlabError):
    """Exception raised when curry finds more than one transpose."""

    @override
    def __init__(self, morphism: object, count: int) -> None:
        self.morphism = morphism
        self.count = count
        super().__init__(f"{count} morphisms curry to {morphism!r}")


# parsing and input


class TermSyntaxError(FixlabError, ValueError):
    """Exception raised when a combinator term cannot be parsed."""

    @override
    def __init__(self, text: str, position: int) -> None:
        self.text = text
        self.position = position
        super().__init__(
            f"Syntax error in term {text!r} at position {position}"
        )


class ObjectExpressionError(FixlabError, ValueError):
    """Exception raised when an object expression cannot be parsed."""

    @override
    def __init__(self, text: str) -> None:
        super().__init__(f"Invalid object expression: {text!r}")


class InputError(FixlabError):
    """Exception raised when command-line input cannot be used."""

    @override
    def __init__(
        self, path: str, reason: str, *, line: int | None = None
    ) -> None:
        self.path = path
        self.line = line
        where = path if line is None else f"{path}:{line}"
        super().__init__(f"{where}: {reason}")
