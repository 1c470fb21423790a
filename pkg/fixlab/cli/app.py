"""The `fixlab` command-line interface.

Every command prints a report and exits with 0 when everything it checked
holds, 1 when a check or hypothesis fails, 2 when a budget stopped it, and
3 when its input (an instance file, a term, an option) is unusable.
"""

import logging
import sys
from collections.abc import Callable

import click
from typing_extensions import Any, Final, Literal, NoReturn, cast, override

from fixlab import errors, theorems, uniform
from fixlab.category import fixed_t_points, is_t_free, t_points
from fixlab.checks import (
    check_bifunctoriality,
    check_diagonal_naturality,
    check_hom_closure,
)
from fixlab.cli.resolve import Resolver
from fixlab.cli.run import ExitCode, Outcome, RunConfig, run
from fixlab.combinators.basis import basis_of
from fixlab.combinators.joinability import (
    NotWithinBudget,
    check_fpc,
    joinable,
)
from fixlab.combinators.parse import parse_term
from fixlab.combinators.reduction import normalize
from fixlab.instances.flat import (
    check_copointed,
    check_idempotent_comonad,
    make_flat,
)
from fixlab.quotient import concrete_quotient


class _Command(click.Command):
    """A command whose usage errors exit with the input-error code."""

    @override
    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: Any,
    ) -> click.Context:
        try:
            return super().make_context(info_name, args, parent, **extra)
        except click.UsageError as e:
            e.exit_code = ExitCode.INPUT_ERROR
            raise


class _Group(_Command, click.Group):
    command_class = _Command

    @override
    def resolve_command(
        self, ctx: click.Context, args: list[str]
    ) -> tuple[str | None, click.Command | None, list[str]]:
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as e:
            e.exit_code = ExitCode.INPUT_ERROR
            raise


def _usage_error(message: str) -> NoReturn:
    error = click.UsageError(message)
    error.exit_code = ExitCode.INPUT_ERROR
    raise error


def _finish(
    ctx: click.Context,
    inputs: list[str],
    action: Callable[[], Outcome],
    *,
    theorem: str,
) -> NoReturn:
    config = cast(RunConfig, ctx.obj).model_copy(
        update={
            "command": " ".join(ctx.command_path.split()[1:]),
            "theorem": theorem,
            "inputs": inputs,
        }
    )
    code, text = run(config, action)
    click.echo(text)
    ctx.exit(code)


def _probe_set(ctx: click.Context) -> str:
    return cast(RunConfig, ctx.obj).probe_set


_REGULAR_FIXED_POINT: Final = (
    "fixed-point theorem from a regular epimorphism t' -> 1"
)
_UNIFORM: Final = {
    "plain": "uniform fixed-point construction",
    "crisp_section": "uniform fixed-point construction, crisp section",
    "crisp_index": "uniform fixed-point construction, crisp index",
}
_SPLIT_EPI: Final = {
    False: "fixed points from a split epimorphism A -> C^A",
    True: "fixed points in a reflexive object",
}


_INSTANCE: Final = click.argument(
    "instance", type=click.Path(dir_okay=False)
)


@click.group(cls=_Group)
@click.option(
    "--budget",
    "enumeration_cap",
    type=click.IntRange(min=1),
    help="Largest number of functions enumerated for one hom-set.",
)
@click.option(
    "--fuel",
    type=click.IntRange(min=1),
    help="Reduction steps per term.",
)
@click.option(
    "--width",
    type=click.IntRange(min=1),
    help="Largest breadth-first frontier in joinability search.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "structured"]),
    default="text",
    show_default=True,
)
@click.option(
    "--probe-set",
    default="all",
    show_default=True,
    help="Probe objects for internal hom certificates: `all` or a "
    "comma-separated list of object expressions.",
)
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
@click.version_option(package_name="fixlab")
@click.pass_context
def cli(
    ctx: click.Context,
    enumeration_cap: int | None,
    fuel: int | None,
    width: int | None,
    output_format: Literal["text", "structured"],
    probe_set: str,
    verbose: bool,
) -> None:
    """Check magmoidal instances, fixed-point theorems and combinators."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )

    ctx.obj = RunConfig(
        enumeration_cap=enumeration_cap,
        fuel=fuel,
        width=width,
        output_format=output_format,
        probe_set=probe_set,
    )


@cli.command()
@_INSTANCE
@click.pass_context
def check(ctx: click.Context, instance: str) -> None:
    """Check the axioms of an instance.

    Covers hom closure, bifunctoriality, naturality of the diagonal, right
    projections when the instance has them, and the laws of its ♭.
    """

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        flat = resolver.instance.flat
        reports = [
            check_hom_closure(C),
            check_bifunctoriality(C),
            check_diagonal_naturality(C),
        ]

        try:
            reports.append(theorems.check_right_projection(C))
        except errors.MissingProjection:
            projections = False
        else:
            projections = True

        if flat is not None:
            reports.append(check_copointed(flat))
            if flat.has_comultiplication:
                reports.append(check_idempotent_comonad(flat))

        return Outcome(
            "verified" if all(reports) else "failed",
            {
                "variant": C.variant,
                "right_projection": projections,
                "reports": [report.to_dict() for report in reports],
            },
        )

    _finish(ctx, [instance], action, theorem="magmoidal category axioms")


@cli.command()
@_INSTANCE
@click.argument("expression", metavar="OBJECT")
@click.option("--sigma", help="Endomorphism to test for t-freeness.")
@click.pass_context
def points(
    ctx: click.Context, instance: str, expression: str, sigma: str | None
) -> None:
    """List the t-points of an object."""

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        obj = resolver.obj(expression)
        payload: dict[str, object] = {
            "object": obj.name,
            "t_points": [x.describe() for x in t_points(C, obj)],
        }

        if sigma is not None:
            endo = resolver.morphism(sigma)
            payload["t_free"] = bool(is_t_free(C, endo))
            payload["fixed_t_points"] = [
                x.describe() for x in fixed_t_points(C, endo)
            ]

        return Outcome("verified", payload)

    _finish(ctx, [instance], action, theorem="t-points")


@cli.command()
@_INSTANCE
@click.pass_context
def quotient(ctx: click.Context, instance: str) -> None:
    """Build the extensional quotient and check that it is concrete."""

    def action() -> Outcome:
        q = concrete_quotient(Resolver(instance).category)
        reports = [q.verify(), q.verify_products()]
        return Outcome(
            "verified" if all(reports) else "failed",
            {
                "classes": {
                    f"{x.name} -> {y.name}": len(classes)
                    for (x, y), classes in q.classes.items()
                },
                "reports": [report.to_dict() for report in reports],
            },
        )

    _finish(ctx, [instance], action, theorem="concrete quotient")


@cli.command()
@_INSTANCE
@click.option("--object", "expression", help="The parameter object A.")
@click.option("--family", required=True, help="F: A#A -> C (or A#B -> C).")
@click.option("--sigma", required=True, help="A t-free endomorphism of C.")
@click.option("--retraction", help="p: B -> A, for the section variant.")
@click.option("--section", help="s: A -> B with p∘s = id.")
@click.pass_context
def diagonal(
    ctx: click.Context,
    instance: str,
    expression: str | None,
    family: str,
    sigma: str,
    retraction: str | None,
    section: str | None,
) -> None:
    """Run the diagonal argument: build a map F does not parametrise."""
    if (retraction is None) != (section is None):
        _usage_error("--retraction and --section go together")
    if retraction is None and expression is None:
        _usage_error("--object is required without --retraction")
    diagonal_theorem = (
        "diagonal argument"
        if retraction is None
        else "diagonal argument through a retraction"
    )

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        F = resolver.morphism(family)
        endo = resolver.morphism(sigma)

        if retraction is not None and section is not None:
            report = theorems.diagonal_argument_section(
                C,
                resolver.morphism(retraction),
                resolver.morphism(section),
                F,
                endo,
            )
        else:
            A = resolver.obj(cast(str, expression))
            report = theorems.diagonal_argument(C, A, F.target, F, endo)

        return Outcome(
            "verified" if report.verified else "failed", report.to_dict()
        )

    _finish(ctx, [instance], action, theorem=diagonal_theorem)


def _fixed_point_outcome(report: theorems.FixedPointReport) -> Outcome:
    holds = report.hypothesis_ok and report.conclusion_ok
    return Outcome("verified" if holds else "failed", report.to_dict())


@cli.command()
@_INSTANCE
@click.option("--object", "expression", help="The parameter object A.")
@click.option("--family", required=True, help="F: A#A -> C (or A#B -> C).")
@click.option("--sigma", required=True, help="An endomorphism of C.")
@click.option("--point", help="The t-point a₀ of A.")
@click.option("--search", is_flag=True, help="Search for a₀.")
@click.option("--retraction", help="p: B -> A, surjective on t-points.")
@click.pass_context
def fixpoint(
    ctx: click.Context,
    instance: str,
    expression: str | None,
    family: str,
    sigma: str,
    point: str | None,
    search: bool,
    retraction: str | None,
) -> None:
    """Construct a fixed point of σ from a parametrisation F."""
    if point is None and not search:
        _usage_error("Give --point or --search")
    if search and retraction is not None:
        _usage_error("--search does not combine with --retraction")
    if retraction is None and expression is None:
        _usage_error("--object is required without --retraction")
    fixed_point_theorem = (
        "fixed-point theorem"
        if retraction is None
        else "fixed-point theorem through a point-surjective retraction"
    )

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        F = resolver.morphism(family)
        endo = resolver.morphism(sigma)

        if retraction is not None:
            return _fixed_point_outcome(
                theorems.fixed_point_section(
                    C,
                    resolver.morphism(retraction),
                    F,
                    endo,
                    resolver.morphism(cast(str, point)),
                )
            )

        A = resolver.obj(cast(str, expression))
        if not search:
            return _fixed_point_outcome(
                theorems.fixed_point(
                    C,
                    A,
                    F.target,
                    F,
                    endo,
                    resolver.morphism(cast(str, point)),
                )
            )

        result = theorems.fixed_point_search(C, A, F.target, F, endo)
        if isinstance(result, theorems.NotFound):
            return Outcome("failed", result.to_dict())

        return _fixed_point_outcome(result)

    _finish(ctx, [instance], action, theorem=fixed_point_theorem)


@cli.command("fixpoint-regular")
@_INSTANCE
@click.option("--object", "expression", required=True, help="The object A.")
@click.option("--family", required=True, help="F: A#A -> C.")
@click.option("--sigma", required=True, help="An endomorphism of C.")
@click.option("--point", required=True, help="a₀: t' -> A.")
@click.option("--t-prime", required=True, help="The object t'.")
@click.pass_context
def fixpoint_regular(
    ctx: click.Context,
    instance: str,
    expression: str,
    family: str,
    sigma: str,
    point: str,
    t_prime: str,
) -> None:
    """Construct a fixed point using only diagonals and right projections."""

    def action() -> Outcome:
        resolver = Resolver(instance)
        F = resolver.morphism(family)
        report = theorems.fixed_point_regular(
            resolver.category,
            resolver.obj(expression),
            F.target,
            F,
            resolver.morphism(sigma),
            resolver.obj(t_prime),
            resolver.morphism(point),
        )
        return _fixed_point_outcome(report)

    _finish(ctx, [instance], action, theorem=_REGULAR_FIXED_POINT)


@cli.command("hom-check")
@_INSTANCE
@click.option("--source", required=True, help="The exponent X.")
@click.option("--target", required=True, help="The base Y.")
@click.option("--candidate", help="A declared candidate; default: recipe.")
@click.pass_context
def hom_check(
    ctx: click.Context,
    instance: str,
    source: str,
    target: str,
    candidate: str | None,
) -> None:
    """Certify an internal hom Y^X on the probe objects."""
    probe_set = _probe_set(ctx)

    def action() -> Outcome:
        resolver = Resolver(instance)
        witness = resolver.hom(
            candidate,
            source=resolver.obj(source),
            target=resolver.obj(target),
            probe_set=probe_set,
        )
        return Outcome("verified", witness.to_dict())

    _finish(ctx, [instance], action, theorem="internal hom")


@cli.command("uniform-fix")
@_INSTANCE
@click.option("--retraction", required=True, help="p: B -> A.")
@click.option("--section", required=True, help="s: A -> B or s♭: ♭A -> B.")
@click.option("--family", required=True, help="F: A#B -> C.")
@click.option("--index", required=True, help="idx: ♭(C^C) -> A.")
@click.option("--hom", help="A declared candidate for C^C; default: recipe.")
@click.option(
    "--variant",
    type=click.Choice(["plain", "crisp_section", "crisp_index"]),
    default="plain",
    show_default=True,
)
@click.pass_context
def uniform_fix(
    ctx: click.Context,
    instance: str,
    retraction: str,
    section: str,
    family: str,
    index: str,
    hom: str | None,
    variant: Literal["plain", "crisp_section", "crisp_index"],
) -> None:
    """Build the uniform fixed-point map ♭(C^C) -> C."""
    probe_set = _probe_set(ctx)

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        flat = resolver.instance.flat or make_flat(C, "identity")
        F = resolver.morphism(family)
        E_hom = resolver.hom(
            hom, source=F.target, target=F.target, probe_set=probe_set
        )
        p = resolver.morphism(retraction)
        s = resolver.morphism(section)
        idx = resolver.morphism(index)

        if variant == "plain":
            report = uniform.uniform_fix(C, flat, E_hom, p, s, F, idx)
        else:
            report = uniform.uniform_fix_crisp(
                C, flat, E_hom, p, s, F, idx, variant=variant
            )

        holds = report.hypothesis_ok and report.conclusion_ok
        return Outcome("verified" if holds else "failed", report.to_dict())

    _finish(ctx, [instance], action, theorem=_UNIFORM[variant])


@cli.command("fix-split-epi")
@_INSTANCE
@click.option("--object", "expression", help="The object A.")
@click.option("--target", required=True, help="The object C.")
@click.option("--alpha", required=True, help="α: A -> C^A (app).")
@click.option("--ell", required=True, help="ℓ: C^A -> A (lam).")
@click.option("--source-hom", help="A declared candidate for C^A.")
@click.option("--hom", help="A declared candidate for C^C.")
@click.option("--reflexive", is_flag=True, help="Take A = C.")
@click.pass_context
def fix_split_epi(
    ctx: click.Context,
    instance: str,
    expression: str | None,
    target: str,
    alpha: str,
    ell: str,
    source_hom: str | None,
    hom: str | None,
    reflexive: bool,
) -> None:
    """Build the fixed-point map C^C -> C from a split epi A -> C^A."""
    if not reflexive and expression is None:
        _usage_error("--object is required without --reflexive")
    probe_set = _probe_set(ctx)

    def action() -> Outcome:
        resolver = Resolver(instance)
        C = resolver.category
        Cobj = resolver.obj(target)
        CC_hom = resolver.hom(
            hom, source=Cobj, target=Cobj, probe_set=probe_set
        )
        first, second = resolver.morphism(alpha), resolver.morphism(ell)

        if reflexive:
            fix = uniform.fix_reflexive(C, Cobj, CC_hom, first, second)
            E = CC_hom.hom_object
            square = C.compose(
                CC_hom.ev,
                C.product_map(C.identity(E), fix),
                C.diagonal(E),
            )
            return Outcome(
                "verified" if square == fix else "failed",
                {"fix": fix.describe(), "fixed_point_square": square == fix},
            )

        A = resolver.obj(cast(str, expression))
        CA_hom = resolver.hom(
            source_hom, source=A, target=Cobj, probe_set=probe_set
        )
        result = uniform.fix_from_split_epi(
            C, A, Cobj, CA_hom, CC_hom, first, second
        )
        return Outcome(
            "verified" if result.report else "failed", result.to_dict()
        )

    _finish(ctx, [instance], action, theorem=_SPLIT_EPI[reflexive])


@cli.group(cls=_Group)
def comb() -> None:
    """Reduce, join and classify combinator terms."""


_STRATEGY: Final = click.option(
    "--strategy",
    type=click.Choice(["leftmost-outermost", "rightmost-innermost"]),
    default="leftmost-outermost",
    show_default=True,
)


@comb.command("reduce")
@click.argument("term")
@_STRATEGY
@click.pass_context
def comb_reduce(
    ctx: click.Context,
    term: str,
    strategy: Literal["leftmost-outermost", "rightmost-innermost"],
) -> None:
    """Normalize a term within the fuel budget."""

    def action() -> Outcome:
        trace = normalize(parse_term(term), strategy=strategy)
        if trace.status != "normal_form":
            return Outcome("inconclusive", trace.to_dict())

        return Outcome("verified", trace.to_dict())

    _finish(ctx, [term], action, theorem="combinatory reduction")


@comb.command("join")
@click.argument("first")
@click.argument("second")
@click.pass_context
def comb_join(ctx: click.Context, first: str, second: str) -> None:
    """Search for a common reduct of two terms."""

    def action() -> Outcome:
        result = joinable(parse_term(first), parse_term(second))
        if isinstance(result, NotWithinBudget):
            return Outcome("inconclusive", result.to_dict())

        return Outcome("verified", result.to_dict())

    _finish(ctx, [first, second], action, theorem="bounded joinability")


@comb.command("fpc")
@click.argument("term")
@click.pass_context
def comb_fpc(ctx: click.Context, term: str) -> None:
    """Check that f x and x (f x) are joinable for a fresh atom x."""

    def action() -> Outcome:
        result = check_fpc(parse_term(term))
        if isinstance(result, NotWithinBudget):
            return Outcome("inconclusive", result.to_dict())

        return Outcome("verified", result.to_dict())

    _finish(ctx, [term], action, theorem="fixed-point combinator")


@comb.command("basis")
@click.argument("term")
@click.pass_context
def comb_basis(ctx: click.Context, term: str) -> None:
    """Name the constants a term uses and their substructural logic."""

    def action() -> Outcome:
        return Outcome("verified", basis_of(parse_term(term)).to_dict())

    _finish(ctx, [term], action, theorem="basis and substructural logic")


def main() -> None:
    """Entry point of the `fixlab` script."""
    cli(prog_name="fixlab")
