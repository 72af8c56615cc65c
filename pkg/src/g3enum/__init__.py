"""Exact enumeration of genus-three plane curves with fixed complex structure."""

from .cr3 import Cr3Breakdown, Cr3Route, Report, breakdown, component_counts, cr3, n3d
from .descendant import Route, alternate_route, desc
from .errors import ConsistencyError, DomainError, G3EnumError, MemoConflictError, QueryError
from .gw_core import (
    ExactScalar,
    InvariantKey,
    Kind,
    MemoStore,
    compute_key,
    deg0_integral,
    get_store,
    kontsevich,
    primary,
    using_store,
)
from .rt import RTQuery, load_rt_overrides, rigid0, rt, rt_standard
from .singular import S12Route, nd22, s1_class, s12, s21, s22_a, s22_lambda
from .taut import ComponentSpec, Space, SpaceQuery, Term, evaluate, mpsi, tau3, v1_number, v2_number

__version__ = "0.1.0"

__all__ = [
    "ComponentSpec",
    "ConsistencyError",
    "Cr3Breakdown",
    "Cr3Route",
    "DomainError",
    "ExactScalar",
    "G3EnumError",
    "InvariantKey",
    "Kind",
    "MemoConflictError",
    "MemoStore",
    "QueryError",
    "RTQuery",
    "Report",
    "Route",
    "S12Route",
    "Space",
    "SpaceQuery",
    "Term",
    "alternate_route",
    "breakdown",
    "component_counts",
    "compute_key",
    "cr3",
    "deg0_integral",
    "desc",
    "evaluate",
    "get_store",
    "kontsevich",
    "load_rt_overrides",
    "mpsi",
    "n3d",
    "nd22",
    "primary",
    "rigid0",
    "rt",
    "rt_standard",
    "s1_class",
    "s12",
    "s21",
    "s22_a",
    "s22_lambda",
    "tau3",
    "using_store",
    "v1_number",
    "v2_number",
]
