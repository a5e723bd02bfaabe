"""Virtual links.

Any signed Gauss code is accepted; codes with no planar drawing denote
virtual links.  The constant action rack of an N-cycle detects some of them.
"""

from rackcount import fixtures
from rackcount.diagrams import linking_number, parse
from rackcount.invariants import (
    classicality_obstruction,
    cocycle_invariant,
    constant_action_closed_form,
    find_distinguished_pair,
    polynomial_counting,
)

m12 = fixtures.rack("m12")
hopf = fixtures.link("hopf")
vhopf = fixtures.link("virtual_hopf")  # one classical crossing

print("classical Hopf:", polynomial_counting(hopf, m12),
      " closed form:", constant_action_closed_form(2, linking_number(hopf, 1, 2)))
pr = polynomial_counting(vhopf, m12)
print("virtual Hopf:", pr, " not classical:", classicality_obstruction(pr))

# Two virtual links that PR cannot separate but Phi can.
m_t, phi = fixtures.rack("m_t"), fixtures.cochain("phi13_mt")
for name in ("virtual_hopf", "virtual_three"):
    d = fixtures.link(name)
    print(f"{name:14s} PR={polynomial_counting(d, m_t)}  Phi={cocycle_invariant(d, m_t, phi)}")

# Searching small codes finds such pairs automatically.
pair = find_distinguished_pair(m_t, phi, max_crossings=3)
print(pair.first, "/", pair.second, ":", pair.phi_first, "vs", pair.phi_second)
print(parse("O1+,O2+,U3+ | U1+,U2+,O3+"))
