"""Rack counting invariants and the cocycle enhancement.

For a rack of rank N and a link with c components, every writhe vector
``w`` in ``(Z_N)^c`` is realized by a framing representative of the
diagram.  The invariants collect its coloring counts (and Boltzmann
weights) per ``w``:

    IR   = sum_w |Hom(FR(D, w), T)|
    PR   = sum_w |Hom(FR(D, w), T)| q^w
    Phi  = sum_w (sum_f z^{BW(f)}) q^w

Polynomials print the way they are written by hand, e.g. ``4q1q2`` or
``8 + 8z^12``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .cohomology import Cochain, cocycle_witness, reduced_witness
from .colorings import _search, _weight
from .diagrams import GaussDiagram, arcs, enumerate_gauss_codes, framing_representatives
from .racks import RackTable, profile


class InadmissibleCocycle(ValueError):
    """The cochain is not an N-reduced 2-cocycle; ``check`` names the failure."""

    def __init__(self, check: str, witness, message: str):
        super().__init__(message)
        self.check = check
        self.witness = witness


def _monomial(coeff: int, z: int, w: tuple[int, ...]) -> str:
    parts = []
    if z:
        parts.append("z" if z == 1 else f"z^{z}")
    for i, e in enumerate(w, start=1):
        if e:
            parts.append(f"q{i}" if e == 1 else f"q{i}^{e}")
    body = "".join(parts)
    if not body:
        return str(coeff)
    return body if coeff == 1 else f"{coeff}{body}"


@dataclass(frozen=True)
class QPolynomial:
    """``sum_w mult(w) q^w`` with ``w`` in ``(Z_N)^c``."""

    N: int
    c: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, ...], int] = {}
        for w, k in self.terms.items():
            w = tuple(x % self.N for x in w)
            if len(w) != self.c:
                raise ValueError(f"writhe vector {w} has wrong length")
            clean[w] = clean.get(w, 0) + k
        object.__setattr__(self, "terms", {w: k for w, k in sorted(clean.items()) if k})

    def __str__(self) -> str:
        return " + ".join(_monomial(k, 0, w) for w, k in self.terms.items()) or "0"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QPolynomial)
            and (self.N, self.c) == (other.N, other.c)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.N, self.c, tuple(self.terms.items())))

    def coefficient(self, w: Iterable[int]) -> int:
        return self.terms.get(tuple(x % self.N for x in w), 0)

    def total(self) -> int:
        """Specialize every ``q_i`` to 1."""
        return sum(self.terms.values())

    def triples(self) -> Iterator[tuple[tuple[int, ...], int, int]]:
        for w, k in self.terms.items():
            yield w, 0, k

    def machine_block(self) -> str:
        return _block(self.triples())


@dataclass(frozen=True)
class PhiPolynomial:
    """``sum_{(z, w)} mult z^z q^w`` with ``z`` in ``Z_m``."""

    N: int
    c: int
    m: int
    terms: Mapping[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[tuple[int, ...], int], int] = {}
        for (z, w), k in self.terms.items():
            key = (tuple(x % self.N for x in w), z % self.m)
            clean[key] = clean.get(key, 0) + k
        # stored keyed (z, w) but ordered by writhe vector first, then z
        ordered = {(z, w): k for (w, z), k in sorted(clean.items()) if k}
        object.__setattr__(self, "terms", ordered)

    def __str__(self) -> str:
        return " + ".join(_monomial(k, z, w) for (z, w), k in self.terms.items()) or "0"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PhiPolynomial)
            and (self.N, self.c, self.m) == (other.N, other.c, other.m)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.N, self.c, self.m, tuple(self.terms.items())))

    def specialize_z(self) -> QPolynomial:
        """Set ``z = 1``, recovering the polynomial counting invariant."""
        acc: Counter = Counter()
        for (_, w), k in self.terms.items():
            acc[w] += k
        return QPolynomial(self.N, self.c, acc)

    def triples(self) -> Iterator[tuple[tuple[int, ...], int, int]]:
        for (z, w), k in self.terms.items():
            yield w, z, k

    def machine_block(self) -> str:
        return _block(self.triples())


def _block(triples) -> str:
    return "".join(f"({','.join(map(str, w))}) {z} {k}\n" for w, z, k in triples)


# -- the invariants ------------------------------------------------------------


def framing_counts(d: GaussDiagram, rack: RackTable) -> dict[tuple[int, ...], int]:
    """Coloring count of each framing representative, keyed by writhe vector."""
    N = profile(rack).rank
    return {
        w: sum(1 for _ in _search(arcs(rep), rack))
        for w, rep in framing_representatives(d, N)
    }


def integer_counting(d: GaussDiagram, rack: RackTable) -> int:
    return sum(framing_counts(d, rack).values())


def polynomial_counting(d: GaussDiagram, rack: RackTable) -> QPolynomial:
    N = profile(rack).rank
    return QPolynomial(N, d.num_components, framing_counts(d, rack))


def check_admissible(rack: RackTable, phi: Cochain) -> None:
    """Raise :class:`InadmissibleCocycle` unless ``phi`` is an N-reduced 2-cocycle."""
    if phi.degree != 2 or phi.n != rack.n:
        raise InadmissibleCocycle("shape", None, f"cochain is not a 2-cochain on {rack.n} elements")
    bad = cocycle_witness(rack, phi)
    if bad is not None:
        raise InadmissibleCocycle(
            "cocycle", bad, f"not a 2-cocycle: coboundary is nonzero at (x,y,z) = {bad}"
        )
    a = reduced_witness(rack, phi)
    if a is not None:
        raise InadmissibleCocycle(
            "reduced", a, f"not N-reduced: the diagonal sum along the orbit of {a} is nonzero"
        )


def cocycle_invariant(d: GaussDiagram, rack: RackTable, phi: Cochain) -> PhiPolynomial:
    check_admissible(rack, phi)
    N = profile(rack).rank
    acc: Counter = Counter()
    for w, rep in framing_representatives(d, N):
        index = arcs(rep)
        for cols in _search(index, rack):
            acc[_weight(index, phi, [v + 1 for v in cols]), w] += 1
    return PhiPolynomial(N, d.num_components, phi.modulus, acc)


def constant_action_closed_form(N: int, lk: int) -> QPolynomial:
    """``N^2 q1^l q2^l`` with ``l = -lk mod N``.

    Valid for a two-component classical link colored by the constant action
    rack of an N-cycle.
    """
    l = (-lk) % N
    return QPolynomial(N, 2, {(l, l): N * N})


def classicality_obstruction(p: QPolynomial) -> bool:
    """True if some term has different ``q1`` and ``q2`` exponents.

    For a two-component link and a constant action rack of an N-cycle this
    proves the link is not classical.  The hypotheses are not checked.
    """
    if p.c != 2:
        raise ValueError("the obstruction concerns two-component links")
    return any(w[0] != w[1] for w in p.terms)


# -- search for links told apart only by the cocycle ----------------------------


@dataclass(frozen=True)
class DistinguishedPair:
    first: GaussDiagram
    second: GaussDiagram
    pr: QPolynomial
    phi_first: PhiPolynomial
    phi_second: PhiPolynomial


def find_distinguished_pair(
    rack: RackTable,
    phi: Cochain,
    max_crossings: int = 4,
    components: Iterable[int] = (1, 2),
    skip_zero: bool = True,
) -> DistinguishedPair | None:
    """Search small Gauss codes for two diagrams with equal PR but different Phi.

    Codes are visited by crossing count, then component count; the first
    pair found is returned.  Diagrams with no colorings are skipped when
    ``skip_zero`` is set.
    """
    check_admissible(rack, phi)
    comps = tuple(components)
    seen: dict[QPolynomial, dict[PhiPolynomial, GaussDiagram]] = {}
    for k in range(1, max_crossings + 1):
        for c in comps:
            for d in enumerate_gauss_codes(k, c):
                phi_d = cocycle_invariant(d, rack, phi)
                pr = phi_d.specialize_z()
                if skip_zero and not pr.terms:
                    continue
                bucket = seen.setdefault(pr, {})
                for other_phi, other in bucket.items():
                    if other_phi != phi_d:
                        return DistinguishedPair(other, d, pr, other_phi, phi_d)
                bucket.setdefault(phi_d, d)
    return None
