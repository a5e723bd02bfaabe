"""Finite racks stored as operation tables.

Elements are the integers ``1..n``.  Entry ``(i, j)`` of the table is the
index ``k`` with ``x_k = x_i |> x_j``, so every column is the right
translation by ``x_j`` and must be a permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 255


class RackError(ValueError):
    """Raised when a table fails to describe a rack.

    ``violations`` lists every failure found, each a ``Violation``.
    """

    def __init__(self, message: str, violations: Sequence["Violation"] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Violation:
    axiom: str  # "shape", "range", "i" (column bijectivity) or "ii" (self-distributivity)
    witness: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"axiom ({self.axiom}) fails at {self.witness}: {self.detail}"


def _as_array(table) -> np.ndarray:
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise RackError(f"table is not an integer matrix: {exc}") from None
    return arr


def find_violations(table) -> list[Violation]:
    """Return every axiom violation of ``table`` (empty list for a rack).

    Shape and range problems are reported alone since the axioms cannot be
    evaluated on such tables.
    """
    arr = _as_array(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        return [Violation("shape", tuple(arr.shape), "table must be a non-empty square matrix")]
    n = arr.shape[0]
    if n > MAX_ORDER:
        return [Violation("shape", (n,), f"order exceeds {MAX_ORDER}")]
    bad = np.argwhere((arr < 1) | (arr > n))
    if len(bad):
        return [
            Violation("range", (int(i) + 1, int(j) + 1), f"entry {arr[i, j]} not in 1..{n}")
            for i, j in bad
        ]

    out: list[Violation] = []
    t = arr - 1
    for j in range(n):
        counts = np.bincount(t[:, j], minlength=n)
        for value in np.flatnonzero(counts > 1):
            rows = tuple(int(r) + 1 for r in np.flatnonzero(t[:, j] == value))
            out.append(
                Violation("i", (j + 1,) + rows, f"column {j + 1} repeats {value + 1} in rows {rows}")
            )

    # (x |> y) |> z == (x |> z) |> (y |> z) for every triple at once
    lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
    rhs = t[t[:, None, :], t[None, :, :]]
    for i, j, k in np.argwhere(lhs != rhs):
        out.append(
            Violation(
                "ii",
                (int(i) + 1, int(j) + 1, int(k) + 1),
                f"({i + 1}|>{j + 1})|>{k + 1} = {lhs[i, j, k] + 1} "
                f"but ({i + 1}|>{k + 1})|>({j + 1}|>{k + 1}) = {rhs[i, j, k] + 1}",
            )
        )
    return out


@dataclass(frozen=True, eq=False)
class RackTable:
    """A validated finite rack.

    Build with :func:`validate_rack` or one of the constructors; direct
    construction skips validation and is meant for internal use.
    """

    rows: tuple[tuple[int, ...], ...]  # 0-based copy of the table
    _inv: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def table(self) -> np.ndarray:
        """1-based operation matrix (read-only)."""
        arr = np.array(self.rows, dtype=np.uint8) + 1
        arr.setflags(write=False)
        return arr

    def __eq__(self, other) -> bool:
        return isinstance(other, RackTable) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RackTable(n={self.n}, table={self.to_list()})"

    def to_list(self) -> list[list[int]]:
        return [[v + 1 for v in row] for row in self.rows]

    def elements(self) -> range:
        return range(1, self.n + 1)

    def op(self, x: int, y: int) -> int:
        """``x |> y``."""
        return self.rows[x - 1][y - 1] + 1

    def inv_op(self, x: int, y: int) -> int:
        """``x |>^-1 y``: the unique ``z`` with ``z |> y == x``."""
        return self._inv[x - 1][y - 1] + 1

    def diagonal(self) -> tuple[int, ...]:
        """The permutation ``x -> x |> x`` as a 1-based tuple."""
        return tuple(self.rows[i][i] + 1 for i in range(self.n))

    def triangle_power(self, x: int, k: int) -> int:
        """``x^{|>k}``, the k-fold iterate of ``x -> x |> x``."""
        if k < 1:
            raise ValueError("k must be positive")
        for _ in range(k):
            x = self.op(x, x)
        return x

    def is_quandle(self) -> bool:
        return all(self.rows[i][i] == i for i in range(self.n))

    def profile(self) -> "RackProfile":
        return profile(self)


def _from_rows0(rows0: Sequence[Sequence[int]]) -> RackTable:
    n = len(rows0)
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[rows0[x][y]][y] = x
    return RackTable(tuple(tuple(r) for r in rows0), tuple(tuple(r) for r in inv))


def validate_rack(table) -> RackTable:
    """Check both rack axioms and return the validated rack.

    Raises :class:`RackError` carrying every violation otherwise.
    """
    violations = find_violations(table)
    if violations:
        head = "; ".join(str(v) for v in violations[:3])
        more = f" (+{len(violations) - 3} more)" if len(violations) > 3 else ""
        raise RackError(f"not a rack: {head}{more}", violations)
    arr = _as_array(table) - 1
    return _from_rows0(arr.tolist())


def _cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x - 1]
        cycles.append(tuple(cyc))
    return cycles


def cycle_notation(perm: Sequence[int]) -> str:
    """Render a 1-based permutation, e.g. ``(4 6)(5 7)``; identity is ``()``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in _cycles(perm) if len(c) > 1]
    return "".join(parts) or "()"


@dataclass(frozen=True)
class RackProfile:
    rank: int
    exponents: dict[int, int]
    is_quandle: bool
    diagonal: tuple[int, ...]
    operator_classes: tuple[tuple[int, ...], ...]

    def diagonal_cycles(self) -> str:
        return cycle_notation(self.diagonal)


def profile(rack: RackTable) -> RackProfile:
    """Rack exponents, rank, diagonal permutation and operator classes."""
    diag = rack.diagonal()
    exponents = {}
    for cyc in _cycles(diag):
        for x in cyc:
            exponents[x] = len(cyc)
    rank = reduce(math.lcm, exponents.values(), 1)

    classes: dict[tuple[int, ...], list[int]] = {}
    for j in range(rack.n):
        column = tuple(rack.rows[i][j] for i in range(rack.n))
        classes.setdefault(column, []).append(j + 1)
    return RackProfile(
        rank=rank,
        exponents=dict(sorted(exponents.items())),
        is_quandle=rank == 1,
        diagonal=diag,
        operator_classes=tuple(tuple(c) for c in classes.values()),
    )


def rack_rank(rack: RackTable) -> int:
    return profile(rack).rank


def operator_quotient(rack: RackTable) -> list[list[int]]:
    """Operation table induced on operator classes, ``[x] |> [y] = [x |> y]``.

    Classes are numbered in the order of :func:`profile`.  Raises
    ``ValueError`` if the induced operation is not well defined.
    """
    classes = profile(rack).operator_classes
    which = {x: c for c, members in enumerate(classes) for x in members}
    m = len(classes)
    out = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            images = {which[rack.op(x, y)] for x in classes[a] for y in classes[b]}
            if len(images) != 1:
                raise ValueError(f"operation not well defined on classes {a + 1}, {b + 1}")
            out[a][b] = images.pop() + 1
    return out


# -- standard families ------------------------------------------------------


def make_constant_action(sigma: Sequence[int]) -> RackTable:
    """Constant action rack ``x_i |> x_j = x_sigma(i)``.

    ``sigma`` is a 1-based permutation in one-line notation.
    """
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise RackError(f"{list(sigma)} is not a permutation of 1..{n}")
    return validate_rack([[sigma[i]] * n for i in range(n)])


def cycle_permutation(n: int) -> list[int]:
    """The n-cycle ``(1 2 ... n)`` in one-line notation."""
    return [i % n + 1 for i in range(1, n + 1)]


def trivial_quandle(n: int) -> RackTable:
    return make_constant_action(list(range(1, n + 1)))


def make_ts_rack(modulus: int, t: int, s: int) -> RackTable:
    """The (t,s)-rack ``x |> y = t*x + s*y`` on ``Z_modulus``.

    Index ``i`` stands for residue ``i mod modulus``, so residue 0 is
    index ``modulus``.
    """
    if modulus < 1:
        raise RackError("modulus must be positive")
    if math.gcd(modulus, t) != 1:
        raise RackError(f"gcd({modulus}, {t}) != 1, so x -> t*x is not invertible")
    if (s * s - (1 - t) * s) % modulus:
        raise RackError(f"s^2 != (1-t)s mod {modulus} for t={t}, s={s}")

    def index(residue: int) -> int:
        return residue % modulus or modulus

    idx = range(1, modulus + 1)
    return validate_rack([[index(t * x + s * y) for y in idx] for x in idx])


# -- text format -------------------------------------------------------------


class FormatError(ValueError):
    """Syntax problem in a text file; carries a 1-based line (and column)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, raw


def _ints(lineno: int, raw: str) -> list[int]:
    values = []
    col = 0
    for token in raw.split():
        col = raw.index(token, col) + 1
        try:
            values.append(int(token))
        except ValueError:
            raise FormatError(f"expected an integer, got {token!r}", lineno, col) from None
        col += len(token) - 1
    return values


def parse_rack_table(text: str) -> list[list[int]]:
    """Read the rack text format without validating the axioms."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty rack file")
    lineno, raw = lines[0]
    header = _ints(lineno, raw)
    if len(header) != 1 or header[0] < 1:
        raise FormatError("first line must be the order n", lineno)
    n = header[0]
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", lines[-1][0])
    rows = []
    for lineno, raw in lines[1:]:
        row = _ints(lineno, raw)
        if len(row) != n:
            raise FormatError(f"expected {n} entries, found {len(row)}", lineno)
        rows.append(row)
    return rows


def loads_rack(text: str) -> RackTable:
    return validate_rack(parse_rack_table(text))


def dumps_rack(rack: RackTable) -> str:
    lines = [str(rack.n)]
    lines += [" ".join(map(str, row)) for row in rack.to_list()]
    return "\n".join(lines) + "\n"


def load_rack(path) -> RackTable:
    return loads_rack(Path(path).read_text())


def save_rack(rack: RackTable, path) -> None:
    Path(path).write_text(dumps_rack(rack))
