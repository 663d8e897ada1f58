"""Exact computations with Drinfeld doubles of finite groups.

Builds D(kG) over cyclotomic numbers, enumerates its coideal
subalgebras and fusion subcategories, and cross-checks centralizers
and factorization identities by independent methods.
"""

__version__ = "0.1.0"

from .cyclo import CycloNumber
from .groups import Group, Subgroup, parse_group_spec
from .chartab import CharacterTable, character_table
from .hopf import (
    QTAlgebra,
    build_double,
    build_triangular,
    drinfeld_map,
    verify_axioms,
    verify_quasitriangular,
)
from .coideal import (
    CoidealSubalgebra,
    build_coideal,
    dual_coideal,
    enumerate_coideals,
)
from .fusion import (
    FusionSubcat,
    SimpleObject,
    centralizer,
    enumerate_subcats,
    smatrix,
)
from .verify import verify_identities, summarize
from .errors import HopfcatError

__all__ = [
    "CycloNumber",
    "Group",
    "Subgroup",
    "parse_group_spec",
    "CharacterTable",
    "character_table",
    "QTAlgebra",
    "build_double",
    "build_triangular",
    "drinfeld_map",
    "verify_axioms",
    "verify_quasitriangular",
    "CoidealSubalgebra",
    "build_coideal",
    "dual_coideal",
    "enumerate_coideals",
    "FusionSubcat",
    "SimpleObject",
    "centralizer",
    "enumerate_subcats",
    "smatrix",
    "verify_identities",
    "summarize",
    "HopfcatError",
    "__version__",
]
