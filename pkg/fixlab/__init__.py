"""Fixed-point and diagonal theorems for finite magmoidal categories.

This package builds finite categories whose product is not necessarily
cartesian, checks the laws those categories are supposed to satisfy, and
runs the diagonal and fixed-point constructions on them with every
hypothesis checked and every failure reported. A small combinatory-logic
engine verifies fixed-point combinators over substructural bases.

The package has a flat import structure, so you can import any symbol directly
by using the following syntax:
```
from fixlab import <symbol>
```

Some stuff to get you started:
- use `FinSet`, `FinInj`, `PointedSets` and friends (or `build_instance`
with an instance file) to get a category,
- use `check_hom_closure`, `check_bifunctoriality` and
`check_diagonal_naturality` to test its laws,
- use `diagonal_argument` and `fixed_point` to run the theorems,
- use `uniform_fix` and `fix_from_split_epi` for the closed constructions,
- use `parse_term`, `normalize` and `check_fpc` to work with combinators,
- use `Budget` to bound every enumeration and search.

Example usage:
```
>>> from fixlab import basis_of, check_fpc, parse_term
>>> term = parse_term("B (W W) (B W (B B B))")
>>> basis_of(term).logic
'FL_c'
>>> type(check_fpc(term)).__name__
'Verified'

```
"""

from importlib import metadata as __metadata

from typing_extensions import Final as __Final

from fixlab import errors, instances, theorems, uniform
from fixlab.budget import Budget, get_current_budget, set_budget
from fixlab.category import (
    CosemigroupObj,
    Magmoid,
    Morphism,
    Obj,
    PointedObj,
    SliceObj,
    fixed_t_points,
    is_t_free,
    restrict_diagonals,
    t_points,
)
from fixlab.checks import (
    check_bifunctoriality,
    check_diagonal_naturality,
    check_hom_closure,
    find_cartesian_projections,
)
from fixlab.combinators.basis import (
    basis_of,
    bracket_abstract,
    classify,
    ski_fixed_point,
    statman,
)
from fixlab.combinators.joinability import check_fpc, joinable
from fixlab.combinators.parse import parse_term
from fixlab.combinators.reduction import normalize, step
from fixlab.combinators.terms import App, Atom, Const
from fixlab.expressions import evaluate, parse_object_expression
from fixlab.instances.build import build_category, build_instance
from fixlab.instances.cosemigroup import Cosemigroups
from fixlab.instances.finset import FinInj, FinSet, finite_set
from fixlab.instances.flat import make_flat
from fixlab.instances.ordered import OrderedMagma
from fixlab.instances.pointed import PointedBottom, PointedSets, Smash
from fixlab.instances.slice import SliceCategory
from fixlab.instances.spec import load_spec
from fixlab.instances.twist import twist_by_endofunctor
from fixlab.quotient import concrete_quotient
from fixlab.reports import Report
from fixlab.theorems import (
    check_right_projection,
    diagonal_argument,
    diagonal_argument_section,
    fixed_point,
    fixed_point_regular,
    fixed_point_search,
    fixed_point_section,
)
from fixlab.uniform import (
    canonical_hom,
    check_internal_hom,
    curry,
    fix_from_split_epi,
    fix_reflexive,
    name_of,
    uncurry,
    uniform_fix,
    uniform_fix_crisp,
)


__all__: __Final = [
    "App",
    "Atom",
    "Budget",
    "Const",
    "CosemigroupObj",
    "Cosemigroups",
    "FinInj",
    "FinSet",
    "Magmoid",
    "Morphism",
    "Obj",
    "OrderedMagma",
    "PointedBottom",
    "PointedObj",
    "PointedSets",
    "Report",
    "SliceCategory",
    "SliceObj",
    "Smash",
    "basis_of",
    "bracket_abstract",
    "build_category",
    "build_instance",
    "canonical_hom",
    "check_bifunctoriality",
    "check_diagonal_naturality",
    "check_fpc",
    "check_hom_closure",
    "check_internal_hom",
    "check_right_projection",
    "classify",
    "concrete_quotient",
    "curry",
    "diagonal_argument",
    "diagonal_argument_section",
    "errors",
    "evaluate",
    "find_cartesian_projections",
    "finite_set",
    "fix_from_split_epi",
    "fix_reflexive",
    "fixed_point",
    "fixed_point_regular",
    "fixed_point_search",
    "fixed_point_section",
    "fixed_t_points",
    "get_current_budget",
    "instances",
    "is_t_free",
    "joinable",
    "load_spec",
    "make_flat",
    "name_of",
    "normalize",
    "parse_object_expression",
    "parse_term",
    "restrict_diagonals",
    "set_budget",
    "ski_fixed_point",
    "statman",
    "step",
    "t_points",
    "theorems",
    "twist_by_endofunctor",
    "uncurry",
    "uniform",
    "uniform_fix",
    "uniform_fix_crisp",
]

__version__: __Final = __metadata.version(__name__)
