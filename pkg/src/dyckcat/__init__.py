"""Bijections between lattice paths with catastrophes and pattern-restricted Dyck paths."""

from .bijections import (
    FirstReturnDecomposition,
    LastPassageDecomposition,
    chi,
    chi_inverse,
    decompose_first_return,
    decompose_last_passage,
    excursion_to_B,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .enumeration import (
    CountTable,
    count_dp,
    count_table,
    duu_class_check,
    duu_positions,
    enumerate_family,
    iter_family,
)
from .paths import (
    DOWN,
    FLAT,
    UP,
    Family,
    Occurrence,
    Path,
    PathSyntaxError,
    Step,
    catastrophe,
    find_occurrences,
    format_path,
    is_member,
    parse_path,
)
from .series import Series, check_identities, gf, series_compose_geom, series_sqrt

__version__ = "0.1.0"
