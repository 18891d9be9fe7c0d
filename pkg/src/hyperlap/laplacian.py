"""Incidence matrices and the four Laplacian families, in exact integer
arithmetic.

Matrices are dense tuples-of-tuples of Python ints; entries never overflow,
which matters because walk counts grow geometrically with the power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import CWHypergraph, Hypergraph, LevelOutOfRangeError


@dataclass(frozen=True)
class IncidenceMatrix:
    """n x m 0/1 matrix: entry (i,j) = 1 iff vertex i lies in edge j."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SignedIncidenceMatrix:
    """c_d x c_{d+1} matrix over {-1,0,+1} recording oriented incidence at
    one level of a CW-hypergraph."""

    level: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExactMatrix:
    """Dense square integer matrix (a Laplacian or a power of one)."""

    dim: int
    entries: tuple[tuple[int, ...], ...]
    tag: str = "plain"

    def entry(self, i: int, j: int) -> int:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )


def _freeze(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


def mat_mul(a, b):
    """Exact product of two row-major integer matrices (nested sequences).
    The inner dimension is taken from a's row length, so degenerate 0-column
    shapes multiply correctly."""
    n = len(a)
    k = len(a[0]) if n else 0
    p = len(b[0]) if k else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for q in range(k):
            aiq = ai[q]
            if aiq:
                bq = b[q]
                for j in range(p):
                    oi[j] += aiq * bq[j]
    return _freeze(out)


def _gram(a, rows: int, inner: int, of_rows: bool):
    """A.A^t over rows (of_rows) or A^t.A over columns, with explicit shape
    so empty inner dimensions still give a square zero matrix."""
    if of_rows:
        return tuple(
            tuple(sum(a[i][q] * a[j][q] for q in range(inner)) for j in range(rows))
            for i in range(rows)
        )
    return tuple(
        tuple(sum(a[q][i] * a[q][j] for q in range(inner)) for j in range(rows))
        for i in range(rows)
    )


def transpose(a):
    if not a:
        return ()
    return tuple(tuple(row[j] for row in a) for j in range(len(a[0])))


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def incidence(h: Hypergraph) -> IncidenceMatrix:
    """0/1 vertex-by-edge incidence matrix; column order is edge order."""
    rows = [[1 if i in edge else 0 for edge in h.edges] for i in range(1, h.n + 1)]
    return IncidenceMatrix(rows=h.n, cols=h.m, entries=_freeze(rows))


def hypergraph_laplacian(h: Hypergraph, parity: str) -> ExactMatrix:
    """even: n x n vertex Laplacian I.I^t; odd: m x m edge Laplacian I^t.I."""
    inc = incidence(h).entries
    if parity == "even":
        return ExactMatrix(dim=h.n, entries=_gram(inc, h.n, h.m, of_rows=True), tag="even")
    if parity == "odd":
        return ExactMatrix(dim=h.m, entries=_gram(inc, h.m, h.n, of_rows=False), tag="odd")
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def d_incidence(x: CWHypergraph, d: int) -> SignedIncidenceMatrix:
    """Signed c_d x c_{d+1} incidence matrix at level d."""
    if not 0 <= d <= x.top_dim - 1:
        raise LevelOutOfRangeError(f"level {d} out of range [0..{x.top_dim - 1}]")
    rows = [[0] * x.counts[d + 1] for _ in range(x.counts[d])]
    for i, j, s in x.incidences[d]:
        rows[i - 1][j - 1] = s
    return SignedIncidenceMatrix(
        level=d, rows=x.counts[d], cols=x.counts[d + 1], entries=_freeze(rows)
    )


def cw_laplacian(x: CWHypergraph, d: int, parity: str) -> ExactMatrix:
    """even: c_d x c_d matrix I_d.I_d^t; odd: c_{d+1} x c_{d+1} matrix I_d^t.I_d."""
    inc = d_incidence(x, d).entries
    if parity == "even":
        ent = _gram(inc, x.counts[d], x.counts[d + 1], of_rows=True)
        return ExactMatrix(dim=x.counts[d], entries=ent, tag="even")
    if parity == "odd":
        ent = _gram(inc, x.counts[d + 1], x.counts[d], of_rows=False)
        return ExactMatrix(dim=x.counts[d + 1], entries=ent, tag="odd")
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def susy_laplacian(h: Hypergraph) -> ExactMatrix:
    """Block direct sum of the even and odd Laplacians: (n+m) x (n+m),
    vertex block first."""
    even = hypergraph_laplacian(h, "even").entries
    odd = hypergraph_laplacian(h, "odd").entries
    n, m = h.n, h.m
    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        rows[i][:n] = even[i]
    for i in range(m):
        rows[n + i][n:] = odd[i]
    return ExactMatrix(dim=n + m, entries=_freeze(rows), tag="susy")
