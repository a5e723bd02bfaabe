"""Reduced 2-cocycles and the enhanced invariant Phi."""

from rackcount import fixtures
from rackcount.cohomology import (
    delta1,
    dumps_cochain,
    enumerate_reduced_cocycles,
    is_cocycle,
    is_n_reduced,
    Cochain,
)
from rackcount.invariants import InadmissibleCocycle, cocycle_invariant, polynomial_counting
from rackcount.diagrams import braid_closure

m_t = fixtures.rack("m_t")
phi = fixtures.cochain("phi13_mt")
print(dumps_cochain(phi))
print("cocycle:", is_cocycle(m_t, phi), " N-reduced:", is_n_reduced(m_t, phi))

# All reduced cocycles mod 13, as a Z_13-module.
sols = enumerate_reduced_cocycles(m_t, 13)
print("count:", sols.count, " generator orders:", sols.orders)

# Phi refines PR: the (4,2) torus link and the unlink look alike to PR.
t42, unlink = fixtures.link("t42"), fixtures.link("unlink2")
print("PR:", polynomial_counting(t42, m_t), "|", polynomial_counting(unlink, m_t))
print("Phi:", cocycle_invariant(t42, m_t, phi), "|", cocycle_invariant(unlink, m_t, phi))
print("Phi(mirror):", cocycle_invariant(braid_closure([-1] * 4, 2), m_t, phi))

# Cohomologous cocycles give the same invariant.
shifted = phi + delta1(m_t, Cochain(13, [1, 5, 0, 2]))
print("shifted:", cocycle_invariant(t42, m_t, shifted))

# Non-cocycles are refused, naming the failed check.
try:
    cocycle_invariant(t42, m_t, phi + Cochain(13, [[1, 0, 0, 0]] + [[0] * 4] * 3))
except InadmissibleCocycle as exc:
    print("refused:", exc.check, exc.witness)
