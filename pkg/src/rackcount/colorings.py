"""Exact enumeration of rack colorings of a Gauss diagram.

A coloring assigns a rack element to every arc so that at each crossing
with over color ``b`` the under strand changes color from ``a_in`` to
``a_out = a_in |> b`` (positive crossing) or ``a_in |>^-1 b`` (negative).
Virtual crossings never appear in a Gauss code and so impose nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .cohomology import Cochain
from .diagrams import ArcIndexing, GaussDiagram, arcs
from .racks import RackTable


class ColoringError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Coloring:
    """Colors of arcs ``0..A-1`` (arc ids from :func:`diagrams.arcs`)."""

    colors: tuple[int, ...]

    def __getitem__(self, arc: int) -> int:
        return self.colors[arc]

    def __len__(self) -> int:
        return len(self.colors)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colors))


def _search(index: ArcIndexing, rack: RackTable) -> Iterator[list[int]]:
    n_arcs = index.num_arcs
    n = rack.n
    op, inv = rack.rows, rack._inv
    # per arc, the crossings touching it
    touching: list[list[int]] = [[] for _ in range(n_arcs)]
    for ci, c in enumerate(index.crossings):
        for a in {c.over_arc, c.in_arc, c.out_arc}:
            touching[a].append(ci)
    cross = [(c.sign, c.over_arc, c.in_arc, c.out_arc) for c in index.crossings]

    def propagate(colors: list[int], queue: list[int]) -> bool:
        while queue:
            arc = queue.pop()
            for ci in touching[arc]:
                sign, ob, ai, ao = cross[ci]
                b = colors[ob]
                if b < 0:
                    continue
                a_in, a_out = colors[ai], colors[ao]
                if a_in >= 0:
                    want = op[a_in][b] if sign > 0 else inv[a_in][b]
                    if a_out < 0:
                        colors[ao] = want
                        queue.append(ao)
                    elif a_out != want:
                        return False
                elif a_out >= 0:
                    colors[ai] = inv[a_out][b] if sign > 0 else op[a_out][b]
                    queue.append(ai)
        return True

    def branch(colors: list[int]) -> Iterator[list[int]]:
        try:
            arc = colors.index(-1)
        except ValueError:
            yield colors
            return
        for v in range(n):
            trial = colors.copy()
            trial[arc] = v
            if propagate(trial, [arc]):
                yield from branch(trial)

    yield from branch([-1] * n_arcs)


def enumerate_colorings(d: GaussDiagram, rack: RackTable) -> list[Coloring]:
    """Every coloring of ``d`` by ``rack``, sorted lexicographically by arc."""
    index = arcs(d)
    found = [Coloring(tuple(v + 1 for v in cols)) for cols in _search(index, rack)]
    found.sort()
    return found


def count_colorings(d: GaussDiagram, rack: RackTable) -> int:
    """``|Hom(FR(D), T)|`` without building Coloring objects."""
    return sum(1 for _ in _search(arcs(d), rack))


def is_coloring(d: GaussDiagram, rack: RackTable, colors, index: ArcIndexing | None = None) -> bool:
    index = index or arcs(d)
    if len(colors) != index.num_arcs:
        return False
    for c in index.crossings:
        b, a_in, a_out = colors[c.over_arc], colors[c.in_arc], colors[c.out_arc]
        want = rack.op(a_in, b) if c.sign > 0 else rack.inv_op(a_in, b)
        if want != a_out:
            return False
    return True


def boltzmann_weight(d: GaussDiagram, rack: RackTable, phi: Cochain, coloring) -> int:
    """``sum sign(c) * phi(a, b)`` over crossings, reduced mod ``phi.modulus``.

    ``b`` is the over color; ``a`` is the inbound under color at positive
    crossings and the outbound one at negative crossings.
    """
    index = arcs(d)
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if not is_coloring(d, rack, colors, index):
        raise ColoringError("assignment violates a crossing relation")
    return _weight(index, phi, colors)


def _weight(index: ArcIndexing, phi: Cochain, colors) -> int:
    vals = phi.values
    total = 0
    for c in index.crossings:
        b = colors[c.over_arc] - 1
        if c.sign > 0:
            total += int(vals[colors[c.in_arc] - 1, b])
        else:
            total -= int(vals[colors[c.out_arc] - 1, b])
    return total % phi.modulus


def weights(d: GaussDiagram, rack: RackTable, phi: Cochain) -> list[int]:
    """Boltzmann weights of all colorings, in coloring order."""
    index = arcs(d)
    return [_weight(index, phi, c.colors) for c in enumerate_colorings(d, rack)]


def dumps_colorings(colorings) -> str:
    """One coloring per line as ``arc=color`` pairs (arcs 1-based)."""
    return "".join(
        ",".join(f"{a + 1}={v}" for a, v in enumerate(c.colors)) + "\n" for c in colorings
    )
