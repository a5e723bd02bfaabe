"""Link invariants from finite racks: counting invariants and their
2-cocycle enhancement, for classical and virtual links given as Gauss codes.
"""

from .cohomology import (
    Cochain,
    chi,
    cochain_from_support,
    delta1,
    delta2,
    enumerate_reduced_cocycles,
    is_cocycle,
    is_n_reduced,
    zero_cochain,
)
from .colorings import Coloring, boltzmann_weight, count_colorings, enumerate_colorings
from .diagrams import (
    GaussDiagram,
    add_kinks,
    arcs,
    braid_closure,
    framing_representatives,
    linking_number,
    parse,
    render,
    self_writhe,
)
from .invariants import (
    InadmissibleCocycle,
    PhiPolynomial,
    QPolynomial,
    classicality_obstruction,
    cocycle_invariant,
    constant_action_closed_form,
    find_distinguished_pair,
    integer_counting,
    polynomial_counting,
)
from .racks import (
    RackError,
    RackTable,
    cycle_permutation,
    make_constant_action,
    make_ts_rack,
    profile,
    trivial_quandle,
    validate_rack,
)

__version__ = "0.1.0"
