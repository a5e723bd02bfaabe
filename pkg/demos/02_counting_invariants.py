"""Counting invariants of knots and links.

Framed colorings are counted once per framing class mod the rack rank N,
which is what makes the totals invariant under all Reidemeister moves.
"""

from rackcount import fixtures
from rackcount.colorings import count_colorings, enumerate_colorings
from rackcount.diagrams import add_kinks, framing_representatives, parse, self_writhe
from rackcount.invariants import integer_counting, polynomial_counting

t = fixtures.rack("t_ex6")
unknot, trefoil = parse("0"), parse("O1+,U2+,O3+,U1+,O2+,U3+")

# Plain coloring counts depend on the framing ...
for name, d in [("unknot", unknot), ("kinked unknot", add_kinks(unknot, 1, 1)),
                ("trefoil", trefoil), ("trefoil + kink", add_kinks(trefoil, 1, 1))]:
    print(f"{name:16s} sw={self_writhe(d)}  colorings={count_colorings(d, t)}")

# ... so sum over one representative per framing class.
for w, rep in framing_representatives(trefoil, 2):
    print("framing", w, "->", count_colorings(rep, t))
print("IR(unknot) =", integer_counting(unknot, t))
print("IR(trefoil) =", integer_counting(trefoil, t))

# For links the framing vector is kept as q-exponents.
m12 = fixtures.rack("m12")
hopf, unlink = fixtures.link("hopf"), fixtures.link("unlink2")
print("IR:", integer_counting(hopf, m12), integer_counting(unlink, m12))
print("PR(hopf) =", polynomial_counting(hopf, m12))
print("PR(unlink) =", polynomial_counting(unlink, m12))

print("first trefoil colorings:", enumerate_colorings(trefoil, t)[:3])
