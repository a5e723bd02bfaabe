"""Racks: validating operation tables and reading off their profile.

Run with ``python3 demos/01_racks.py``.
"""

from rackcount import fixtures
from rackcount.racks import (
    RackError,
    cycle_notation,
    make_constant_action,
    make_ts_rack,
    operator_quotient,
    profile,
    validate_rack,
)

# A rack table lists x_i |> x_j in row i, column j.  The seven-element rack
# below has rank 2: its diagonal swaps 4<->6 and 5<->7.
t = fixtures.rack("t_ex6")
print(t.table)
prof = profile(t)
print("quandle:", prof.is_quandle, " rank N:", prof.rank)
print("diagonal:", cycle_notation(prof.diagonal))
print("exponents:", prof.exponents)

# Columns that agree define operator classes; collapsing them gives a quandle.
print("operator classes:", prof.operator_classes)
print("quotient table:", operator_quotient(t))

# Tables that break an axiom are rejected with a witness.
try:
    validate_rack([[1, 2], [1, 2]])
except RackError as exc:
    for v in exc.violations:
        print("rejected:", v)

# Two families built in: constant action racks and (t, s)-racks on Z_m.
print(make_constant_action([2, 3, 1]).table)
print(profile(make_ts_rack(8, 3, 2)).rank)
