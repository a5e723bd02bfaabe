"""Rack cochains with Z_m coefficients and the low-degree coboundaries.

A cochain of degree ``d`` is an ``n x ... x n`` (d axes) integer array of
residues mod ``m``.  Arguments to cochains are rack elements, so
``phi(x, y)`` is ``values[x-1, y-1]``.

    delta1 f (x, y)      = f(x|>y) - f(x)
    delta2 phi (x, y, z) = phi(x,y) - phi(x,z) + phi(x|>y, z) - phi(x|>z, y|>z)

``enumerate_reduced_cocycles`` describes the whole module of N-reduced
2-cocycles by diagonalizing the linear constraints over Z_m.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .racks import FormatError, RackTable, _content_lines, _ints, profile

MATERIALIZE_CAP = 10**6


@dataclass(frozen=True, eq=False)
class Cochain:
    modulus: int
    values: np.ndarray

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        vals = np.array(self.values, dtype=np.int64) % self.modulus
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def degree(self) -> int:
        return self.values.ndim

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __call__(self, *xs: int) -> int:
        return int(self.values[tuple(x - 1 for x in xs)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.modulus == other.modulus
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.values.tobytes(), self.values.shape))

    def _check(self, other: "Cochain") -> None:
        if self.modulus != other.modulus or self.values.shape != other.values.shape:
            raise ValueError("cochains live in different groups")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(self.modulus, self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(self.modulus, self.values - other.values)

    def __neg__(self) -> "Cochain":
        return Cochain(self.modulus, -self.values)

    def __mul__(self, k: int) -> "Cochain":
        return Cochain(self.modulus, self.values * int(k))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.values.any()

    def support(self) -> list[tuple[int, ...]]:
        """Nonzero positions as 1-based tuples."""
        return [tuple(int(i) + 1 for i in idx) for idx in np.argwhere(self.values)]

    def __repr__(self) -> str:
        terms = [
            (f"{self(*p)}*" if self(*p) != 1 else "") + "chi" + str(p).replace(" ", "")
            for p in self.support()
        ]
        body = " + ".join(terms) or "0"
        return f"Cochain(mod {self.modulus}: {body})"


def zero_cochain(n: int, m: int, degree: int = 2) -> Cochain:
    return Cochain(m, np.zeros((n,) * degree, dtype=np.int64))


def chi(n: int, m: int, *point: int) -> Cochain:
    """Characteristic cochain of one point of ``T^d`` (1-based), d = len(point)."""
    if not point or any(not 1 <= p <= n for p in point):
        raise ValueError(f"point {point} out of range 1..{n}")
    vals = np.zeros((n,) * len(point), dtype=np.int64)
    vals[tuple(p - 1 for p in point)] = 1
    return Cochain(m, vals)


def cochain_from_support(n: int, m: int, points) -> Cochain:
    """Sum of ``chi`` over ``points``."""
    out = zero_cochain(n, m, len(points[0]) if points else 2)
    for p in points:
        out = out + chi(n, m, *p)
    return out


def _table(rack: RackTable) -> np.ndarray:
    return np.array(rack.rows, dtype=np.intp)


def delta1(rack: RackTable, f: Cochain) -> Cochain:
    if f.degree != 1 or f.n != rack.n:
        raise ValueError("delta1 takes a 1-cochain on the rack")
    t = _table(rack)
    x = np.arange(rack.n)[:, None]
    return Cochain(f.modulus, f.values[t] - f.values[x])


def delta2(rack: RackTable, phi: Cochain) -> Cochain:
    if phi.degree != 2 or phi.n != rack.n:
        raise ValueError("delta2 takes a 2-cochain on the rack")
    t = _table(rack)
    n = rack.n
    p = phi.values
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    out = p[x, y] - p[x, z] + p[t[x, y], z] - p[t[x, z], t[y, z]]
    return Cochain(phi.modulus, out)


def cocycle_witness(rack: RackTable, phi: Cochain) -> tuple[int, int, int] | None:
    """First triple (1-based) where ``delta2 phi`` is nonzero, or None."""
    bad = np.argwhere(delta2(rack, phi).values)
    if len(bad) == 0:
        return None
    return tuple(int(v) + 1 for v in bad[0])


def is_cocycle(rack: RackTable, phi: Cochain) -> bool:
    return cocycle_witness(rack, phi) is None


def reduced_sum(rack: RackTable, phi: Cochain, a: int, rank: int | None = None) -> int:
    """``sum_{k=1}^N phi(a^{|>k}, a^{|>k})`` mod m."""
    if rank is None:
        rank = profile(rack).rank
    total = 0
    x = a
    for _ in range(rank):
        x = rack.op(x, x)
        total += phi(x, x)
    return total % phi.modulus


def reduced_witness(rack: RackTable, phi: Cochain) -> int | None:
    """First element ``a`` whose reduced sum is nonzero, or None."""
    rank = profile(rack).rank
    for a in rack.elements():
        if reduced_sum(rack, phi, a, rank):
            return a
    return None


def is_n_reduced(rack: RackTable, phi: Cochain) -> bool:
    return reduced_witness(rack, phi) is None


# -- linear algebra over Z_m ------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) = u*a + v*b and g >= 0."""
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if a < 0:
        a, u0, v0 = -a, -u0, -v0
    return a, u0, v0


def diagonalize_mod(a: np.ndarray, m: int) -> tuple[list[int], np.ndarray]:
    """Diagonalize an integer matrix over Z_m by unimodular row/column moves.

    Returns ``(diag, V)`` where ``V`` is invertible mod m and
    ``U @ a @ V == D (mod m)`` for some invertible ``U``, with ``D`` zero
    off the diagonal and ``diag`` its leading diagonal entries.  Python
    integers are used throughout so large moduli cannot overflow.
    """
    rows, cols = a.shape
    A = [[int(v) % m for v in row] for row in a]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]
    diag: list[int] = []

    def row_combine(i: int, j: int, u: int, v: int, s: int, t: int) -> None:
        # row_i, row_j <- u*row_i + v*row_j, s*row_i + t*row_j
        ri, rj = A[i], A[j]
        A[i] = [(u * p + v * q) % m for p, q in zip(ri, rj)]
        A[j] = [(s * p + t * q) % m for p, q in zip(ri, rj)]

    def col_combine(i: int, j: int, u: int, v: int, s: int, t: int) -> None:
        for mat in (A, V):
            for row in mat:
                p, q = row[i], row[j]
                row[i] = (u * p + v * q) % m
                row[j] = (s * p + t * q) % m

    for s in range(min(rows, cols)):
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                e = A[i][j]
                if e:
                    key = (math.gcd(e, m), e)
                    if best is None or key < best[0]:
                        best = (key, i, j)
                        if key[0] == 1 and e == 1:
                            break
            if best is not None and best[0] == (1, 1):
                break
        if best is None:
            break
        _, i, j = best
        A[s], A[i] = A[i], A[s]
        if j != s:
            col_combine(s, j, 0, 1, 1, 0)

        while True:
            dirty = False
            for i in range(s + 1, rows):
                e = A[i][s]
                if not e:
                    continue
                p = A[s][s]
                if e % p == 0:
                    q = e // p
                    A[i] = [(x - q * y) % m for x, y in zip(A[i], A[s])]
                else:
                    g, u, v = _xgcd(p, e)
                    row_combine(s, i, u, v, -e // g, p // g)
            for j in range(s + 1, cols):
                e = A[s][j]
                if not e:
                    continue
                p = A[s][s]
                if e % p == 0:
                    q = e // p
                    col_combine(s, j, 1, 0, -q, 1)
                    dirty = True
                else:
                    g, u, v = _xgcd(p, e)
                    col_combine(s, j, u, v, -e // g, p // g)
                    dirty = True
            if not dirty or not any(A[i][s] for i in range(s + 1, rows)):
                break
        diag.append(A[s][s])
    return diag, np.array(V, dtype=object)


@dataclass(frozen=True)
class SolutionModule:
    """Solutions of a homogeneous system over Z_m as an internal direct sum.

    ``generators[i]`` has additive order ``orders[i]``; every solution is
    uniquely ``sum k_i * generators[i]`` with ``0 <= k_i < orders[i]``.
    """

    modulus: int
    generators: tuple[np.ndarray, ...]
    orders: tuple[int, ...]
    dimension: int

    @property
    def count(self) -> int:
        return math.prod(self.orders)

    def __iter__(self) -> Iterator[np.ndarray]:
        if not self.generators:
            yield np.zeros(self.dimension, dtype=np.int64)
            return
        gens = [g.astype(np.int64) for g in self.generators]
        for coeffs in itertools.product(*(range(o) for o in self.orders)):
            vec = np.zeros(self.dimension, dtype=np.int64)
            for k, g in zip(coeffs, gens):
                if k:
                    vec = (vec + k * g) % self.modulus
            yield vec


def solve_homogeneous_mod(a: np.ndarray, m: int) -> SolutionModule:
    """All x in Z_m^c with ``a @ x == 0 (mod m)``."""
    cols = a.shape[1]
    diag, V = diagonalize_mod(a, m)
    gens, orders = [], []
    for i in range(cols):
        g = math.gcd(diag[i], m) if i < len(diag) else m
        if g == 1:
            continue
        vec = np.array([(int(V[r][i]) * (m // g)) % m for r in range(cols)], dtype=np.int64)
        gens.append(vec)
        orders.append(g)
    return SolutionModule(m, tuple(gens), tuple(orders), cols)


def reduced_cocycle_constraints(rack: RackTable) -> np.ndarray:
    """Integer matrix whose kernel mod m is the N-reduced 2-cocycles.

    Unknown ``x*n + y`` (0-based) is ``phi(x+1, y+1)``.  The first ``n^3``
    rows are the coboundary equations, the last ``n`` the reduced sums.
    """
    n = rack.n
    t = rack.rows
    rank = profile(rack).rank
    mat = np.zeros((n**3 + n, n * n), dtype=np.int64)
    r = 0
    for x in range(n):
        for y in range(n):
            for z in range(n):
                mat[r, x * n + y] += 1
                mat[r, x * n + z] -= 1
                mat[r, t[x][y] * n + z] += 1
                mat[r, t[x][z] * n + t[y][z]] -= 1
                r += 1
    for a in range(n):
        x = a
        for _ in range(rank):
            x = t[x][x]
            mat[r, x * n + x] += 1
        r += 1
    return mat


@dataclass(frozen=True)
class ReducedCocycles:
    rack: RackTable
    modulus: int
    module: SolutionModule

    @property
    def count(self) -> int:
        return self.module.count

    @property
    def basis(self) -> list[Cochain]:
        """Generating set; the zero cochain alone when the module is trivial."""
        n = self.rack.n
        if not self.module.generators:
            return [zero_cochain(n, self.modulus)]
        return [Cochain(self.modulus, g.reshape(n, n)) for g in self.module.generators]

    @property
    def orders(self) -> tuple[int, ...]:
        return self.module.orders

    def solutions(self, limit: int | None = None) -> Iterator[Cochain]:
        """Iterate over solutions, at most ``limit`` (capped at ``MATERIALIZE_CAP``)."""
        cap = MATERIALIZE_CAP if limit is None else min(limit, MATERIALIZE_CAP)
        n = self.rack.n
        for vec in itertools.islice(self.module, cap):
            yield Cochain(self.modulus, vec.reshape(n, n))


def enumerate_reduced_cocycles(rack: RackTable, m: int) -> ReducedCocycles:
    """The N-reduced 2-cocycles of ``rack`` with Z_m coefficients."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    module = solve_homogeneous_mod(reduced_cocycle_constraints(rack), m)
    return ReducedCocycles(rack, m, module)


# -- text format -------------------------------------------------------------


def loads_cochain(text: str) -> Cochain:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty cochain file")
    lineno, raw = lines[0]
    header = _ints(lineno, raw)
    if len(header) != 2:
        raise FormatError("first line must be 'n m'", lineno)
    n, m = header
    if n < 1 or m < 2:
        raise FormatError(f"bad header n={n}, m={m}", lineno)
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", lines[-1][0])
    rows = []
    for lineno, raw in lines[1:]:
        row = _ints(lineno, raw)
        if len(row) != n:
            raise FormatError(f"expected {n} entries, found {len(row)}", lineno)
        rows.append(row)
    return Cochain(m, np.array(rows))


def dumps_cochain(phi: Cochain) -> str:
    if phi.degree != 2:
        raise ValueError("only 2-cochains have a file format")
    lines = [f"{phi.n} {phi.modulus}"]
    lines += [" ".join(str(int(v)) for v in row) for row in phi.values]
    return "\n".join(lines) + "\n"


def load_cochain(path) -> Cochain:
    return loads_cochain(Path(path).read_text())


def save_cochain(phi: Cochain, path) -> None:
    Path(path).write_text(dumps_cochain(phi))
