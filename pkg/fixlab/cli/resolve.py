"""Resolve command-line arguments against an instance file."""

import logging

from fixlab import errors, uniform
from fixlab.category import Magmoid, Morphism, Obj
from fixlab.instances.build import Instance, build_instance
from fixlab.instances.spec import load_spec


logger = logging.getLogger(__name__)


class Resolver:
    """Looks up the objects and morphisms an instance file names.

    Every lookup failure is reported as an `InputError` against the file.
    """

    def __init__(self, path: str) -> None:
        self.path = path
        spec = load_spec(path)

        try:
            self.instance: Instance = build_instance(spec)
        except (
            errors.InvalidSpec,
            errors.NotAMorphism,
            errors.NotNatural,
            errors.ObjectExpressionError,
            errors.MissingInternalHom,
        ) as e:
            raise errors.InputError(path, str(e)) from None

        logger.debug("Loaded %r", self.instance.category)

    @property
    def category(self) -> Magmoid:
        """The category the file describes."""
        return self.instance.category

    def obj(self, text: str, /) -> Obj:
        """Evaluate an object expression."""
        try:
            return self.instance.object(text)
        except (
            errors.InvalidSpec,
            errors.ObjectExpressionError,
            errors.MissingInternalHom,
        ) as e:
            raise errors.InputError(self.path, str(e)) from None

    def morphism(self, name: str, /) -> Morphism:
        """Look up a named morphism."""
        try:
            return self.instance.morphisms[name]
        except KeyError:
            msg = f"No morphism named {name!r}"
            raise errors.InputError(self.path, msg) from None

    def probes(self, probe_set: str) -> list[Obj] | None:
        """Resolve `--probe-set`: `all` or comma-separated expressions."""
        if probe_set == "all":
            return None

        return [self.obj(text.strip()) for text in probe_set.split(",")]

    def hom(
        self,
        name: str | None,
        *,
        source: Obj,
        target: Obj,
        probe_set: str = "all",
    ) -> uniform.InternalHomWitness:
        """Certify a declared hom candidate, or the instance's own recipe.

        Raises:
            InputError: If the named candidate is missing or is not the
                internal hom from `source` to `target`.
            NotRepresentable: If certification fails.

        """
        C = self.category
        probes = self.probes(probe_set)

        if name is None:
            try:
                return uniform.canonical_hom(C, source, target, probes=probes)
            except errors.MissingInternalHom as e:
                raise errors.InputError(self.path, str(e)) from None

        try:
            candidate = self.instance.homs[name]
        except KeyError:
            msg = f"No internal hom candidate named {name!r}"
            raise errors.InputError(self.path, msg) from None

        if (candidate.source, candidate.target) != (source, target):
            msg = (
                f"Candidate {name!r} is {candidate.target}^{candidate.source}"
                f", expected {target}^{source}"
            )
            raise errors.InputError(self.path, msg)

        return uniform.check_internal_hom(
            C, source, target, (candidate.obj, candidate.ev), probes
        )
