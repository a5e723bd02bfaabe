"""Oriented blackboard-framed link diagrams as signed Gauss codes.

Each component is the cyclic sequence of crossing visits met while
travelling along it.  A visit records the crossing id, whether the
component passes over or under there, and the crossing sign.  Virtual
crossings impose nothing on colorings or weights, so they are simply not
recorded; a code with no planar realization describes a virtual link.

Text form: components separated by ``|``, visits by ``,``; a visit is
``O`` or ``U``, the crossing id and ``+`` or ``-``.  The token ``0``
stands for a crossingless component.

    >>> d = parse("O1+,U2+,O3+,U1+,O2+,U3+")
    >>> self_writhe(d)
    (3,)
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

OVER = "O"
UNDER = "U"

_VISIT = re.compile(r"([OU])(\d+)([+-])")


class DiagramError(ValueError):
    """Raised for malformed or inconsistent Gauss codes."""


@dataclass(frozen=True, order=True)
class Visit:
    crossing: int
    role: str
    sign: int

    def __str__(self) -> str:
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussDiagram:
    components: tuple[tuple[Visit, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        _check(comps)

    @property
    def num_components(self) -> int:
        return len(self.components)

    def crossings(self) -> list[int]:
        return sorted({v.crossing for comp in self.components for v in comp})

    def __str__(self) -> str:
        return render(self)


def _check(components) -> None:
    if not components:
        raise DiagramError("a diagram needs at least one component")
    seen: dict[int, list[Visit]] = {}
    for comp in components:
        for v in comp:
            if v.role not in (OVER, UNDER) or v.sign not in (1, -1) or v.crossing < 1:
                raise DiagramError(f"bad visit {v!r}")
            seen.setdefault(v.crossing, []).append(v)
    for cid, visits in sorted(seen.items()):
        roles = Counter(v.role for v in visits)
        if roles[OVER] != 1 or roles[UNDER] != 1:
            raise DiagramError(
                f"crossing {cid} needs exactly one O and one U visit, got "
                + ",".join(str(v) for v in visits)
            )
        if visits[0].sign != visits[1].sign:
            raise DiagramError(f"crossing {cid} has mismatched signs")


def parse(text: str) -> GaussDiagram:
    comps = []
    body = "".join(text.split())
    if not body:
        raise DiagramError("empty Gauss code")
    for ci, chunk in enumerate(body.split("|"), start=1):
        if chunk == "0":
            comps.append(())
            continue
        visits = []
        for token in chunk.split(","):
            m = _VISIT.fullmatch(token)
            if not m:
                raise DiagramError(f"component {ci}: malformed token {token!r}")
            role, cid, sign = m.groups()
            visits.append(Visit(int(cid), role, 1 if sign == "+" else -1))
        comps.append(tuple(visits))
    return GaussDiagram(tuple(comps))


def render(d: GaussDiagram) -> str:
    return " | ".join(",".join(map(str, comp)) if comp else "0" for comp in d.components)


def load_diagram(path) -> GaussDiagram:
    lines = [
        ln for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    return parse(" ".join(lines))


def save_diagram(d: GaussDiagram, path) -> None:
    Path(path).write_text(render(d) + "\n")


# -- crossing bookkeeping ----------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    over_component: int  # 0-based
    under_component: int
    over_arc: int
    in_arc: int
    out_arc: int


def _locate(d: GaussDiagram) -> dict[int, dict[str, tuple[int, int]]]:
    where: dict[int, dict[str, tuple[int, int]]] = {}
    for ci, comp in enumerate(d.components):
        for pos, v in enumerate(comp):
            where.setdefault(v.crossing, {})[v.role] = (ci, pos)
    return where


def _sign_of(d: GaussDiagram) -> dict[int, int]:
    return {v.crossing: v.sign for comp in d.components for v in comp}


def self_writhe(d: GaussDiagram) -> tuple[int, ...]:
    """Per component, the signed count of crossings of that component with itself."""
    sw = [0] * d.num_components
    signs = _sign_of(d)
    for cid, roles in _locate(d).items():
        if roles[OVER][0] == roles[UNDER][0]:
            sw[roles[OVER][0]] += signs[cid]
    return tuple(sw)


def linking_number(d: GaussDiagram, i: int, j: int) -> int:
    """Linking number of components ``i`` and ``j`` (1-based)."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    pair = {i - 1, j - 1}
    signs = _sign_of(d)
    total = 0
    for cid, roles in _locate(d).items():
        if {roles[OVER][0], roles[UNDER][0]} == pair:
            total += signs[cid]
    if total % 2:
        raise DiagramError(f"odd signed crossing count between components {i} and {j}")
    return total // 2


def writhe(d: GaussDiagram) -> int:
    return sum(_sign_of(d).values())


@dataclass(frozen=True)
class ArcIndexing:
    """Arcs of a diagram and the three arcs meeting at each crossing.

    Arc ids are 0-based and consecutive across components.  Local arc ``k``
    of a component begins just after its ``k``-th under visit; a component
    without under visits is a single closed arc.
    """

    component_arcs: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...]

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self.component_arcs)


def arcs(d: GaussDiagram) -> ArcIndexing:
    comp_arcs = []
    # arc on which each (component, position) lies, and in/out arcs of under visits
    arc_at: dict[tuple[int, int], int] = {}
    under_io: dict[tuple[int, int], tuple[int, int]] = {}
    next_id = 0
    for ci, comp in enumerate(d.components):
        unders = [p for p, v in enumerate(comp) if v.role == UNDER]
        k = max(len(unders), 1)
        ids = tuple(range(next_id, next_id + k))
        next_id += k
        comp_arcs.append(ids)
        if not unders:
            for p in range(len(comp)):
                arc_at[ci, p] = ids[0]
            continue
        for p in range(len(comp)):
            # number of under visits strictly before p, minus one, cyclically
            before = sum(1 for u in unders if u < p)
            arc_at[ci, p] = ids[(before - 1) % k]
        for idx, p in enumerate(unders):
            under_io[ci, p] = (ids[(idx - 1) % k], ids[idx])

    crossings = []
    signs = _sign_of(d)
    for cid, roles in sorted(_locate(d).items()):
        over = roles[OVER]
        under = roles[UNDER]
        a_in, a_out = under_io[under]
        crossings.append(
            Crossing(cid, signs[cid], over[0], under[0], arc_at[over], a_in, a_out)
        )
    return ArcIndexing(tuple(comp_arcs), tuple(crossings))


# -- framing changes ---------------------------------------------------------


def _fresh_ids(d: GaussDiagram, k: int) -> list[int]:
    start = max(d.crossings(), default=0) + 1
    return list(range(start, start + k))


def add_kinks(d: GaussDiagram, component: int, k: int) -> GaussDiagram:
    """Insert ``k`` positive kinks at the start of ``component`` (1-based).

    Each kink is the adjacent pair ``O c+, U c+`` for a fresh id ``c``, which
    raises the component's self-writhe by one and sends an arc color ``a``
    to ``a |> a``.
    """
    if not 1 <= component <= d.num_components:
        raise IndexError(f"no component {component}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return d
    kinks = []
    for cid in _fresh_ids(d, k):
        kinks += [Visit(cid, OVER, 1), Visit(cid, UNDER, 1)]
    comps = list(d.components)
    comps[component - 1] = tuple(kinks) + comps[component - 1]
    return GaussDiagram(tuple(comps))


def framing_representatives(d: GaussDiagram, N: int) -> list[tuple[tuple[int, ...], GaussDiagram]]:
    """One diagram per writhe vector in ``(Z_N)^c``, in lexicographic order.

    The diagram paired with ``w`` has self-writhe congruent to ``w`` mod N,
    obtained by adding ``(w_i - sw_i) mod N`` positive kinks to component i.
    """
    if N < 1:
        raise ValueError("N must be positive")
    sw = self_writhe(d)
    out = []
    for w in itertools.product(range(N), repeat=d.num_components):
        rep = d
        for i, (wi, si) in enumerate(zip(w, sw), start=1):
            rep = add_kinks(rep, i, (wi - si) % N)
        out.append((w, rep))
    return out


# -- diagram moves used for checking invariance -------------------------------


def rotate(d: GaussDiagram, component: int, shift: int) -> GaussDiagram:
    """Cyclically rotate one component's visit sequence (same diagram)."""
    comps = list(d.components)
    comp = comps[component - 1]
    if comp:
        s = shift % len(comp)
        comps[component - 1] = comp[s:] + comp[:s]
    return GaussDiagram(tuple(comps))


def poke(
    d: GaussDiagram,
    over: tuple[int, int],
    under: tuple[int, int],
    first_sign: int = 1,
) -> GaussDiagram:
    """Reidemeister II move: push one strand under another.

    ``over`` and ``under`` are ``(component, position)`` pairs (1-based
    component, 0-based insertion position).  The over strand gains two
    adjacent over visits and the under strand two adjacent under visits of
    opposite signs, ``first_sign`` first along the under strand.
    """
    a, b = _fresh_ids(d, 2)
    comps = [list(c) for c in d.components]
    (oc, op), (uc, up) = over, under
    if oc == uc:
        # same component: keep positions meaningful by inserting the later one first
        seq = comps[oc - 1]
        o_pair = [Visit(a, OVER, first_sign), Visit(b, OVER, -first_sign)]
        u_pair = [Visit(a, UNDER, first_sign), Visit(b, UNDER, -first_sign)]
        if op >= up:
            seq[op:op] = o_pair
            seq[up:up] = u_pair
        else:
            seq[up:up] = u_pair
            seq[op:op] = o_pair
    else:
        comps[oc - 1][op:op] = [Visit(a, OVER, first_sign), Visit(b, OVER, -first_sign)]
        comps[uc - 1][up:up] = [Visit(a, UNDER, first_sign), Visit(b, UNDER, -first_sign)]
    return GaussDiagram(tuple(tuple(c) for c in comps))


# -- enumeration of small codes --------------------------------------------------


def _canonical(comps: Sequence[Sequence[Visit]]) -> tuple:
    """Relabel crossings by first appearance and rotate each component minimally.

    Used only to discard obvious duplicates while enumerating; it is not a
    complete diagram isomorphism test.
    """
    best = None
    rotations = [
        [c[s:] + c[:s] for s in range(len(c))] or [c] for c in (tuple(x) for x in comps)
    ]
    for choice in itertools.product(*rotations):
        relabel: dict[int, int] = {}
        key = []
        for comp in choice:
            part = []
            for v in comp:
                relabel.setdefault(v.crossing, len(relabel) + 1)
                part.append((relabel[v.crossing], v.role, v.sign))
            key.append(tuple(part))
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best


def enumerate_gauss_codes(num_crossings: int, num_components: int) -> Iterator[GaussDiagram]:
    """All signed Gauss codes with exactly the given sizes, up to relabelling
    crossings and rotating components.  Every component is nonempty.
    """
    k = num_crossings
    seen = set()
    visits = [(c, r) for c in range(1, k + 1) for r in (OVER, UNDER)]
    for lengths in _compositions(2 * k, num_components):
        for order in itertools.permutations(visits):
            # fix crossing labels by first appearance to cut the search
            firsts = []
            for c, _ in order:
                if c not in firsts:
                    firsts.append(c)
            if firsts != list(range(1, k + 1)):
                continue
            for signs in itertools.product((1, -1), repeat=k):
                comps, pos = [], 0
                for ln in lengths:
                    comps.append(
                        tuple(Visit(c, r, signs[c - 1]) for c, r in order[pos : pos + ln])
                    )
                    pos += ln
                key = _canonical(comps)
                if key in seen:
                    continue
                seen.add(key)
                yield GaussDiagram(tuple(comps))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def braid_closure(word: Sequence[int], strands: int) -> GaussDiagram:
    """Gauss code of the closure of a braid word.

    Letter ``i`` (or ``-i``) is the generator crossing strand positions
    ``i`` and ``i+1`` positively (negatively); in a positive letter the
    strand at position ``i`` passes over.  Components are ordered by the
    lowest starting position they contain.
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    # per starting strand, the visits made while travelling through the word
    paths: list[list[Visit]] = [[] for _ in range(strands)]
    at = list(range(strands))  # at[p] = starting strand currently at position p
    for cid, letter in enumerate(word, start=1):
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {letter} needs {abs(letter) + 1} strands")
        sign = 1 if letter > 0 else -1
        left, right = at[i], at[i + 1]
        over, under = (left, right) if sign > 0 else (right, left)
        paths[over].append(Visit(cid, OVER, sign))
        paths[under].append(Visit(cid, UNDER, sign))
        at[i], at[i + 1] = right, left
    # the closure joins the top of position p to the bottom of strand p
    nxt = {at[p]: p for p in range(strands)}
    comps, done = [], set()
    for s in range(strands):
        if s in done:
            continue
        comp, x = [], s
        while x not in done:
            done.add(x)
            comp += paths[x]
            x = nxt[x]
        comps.append(tuple(comp))
    return GaussDiagram(tuple(comps))
