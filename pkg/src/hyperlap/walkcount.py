"""Walk-count and signed-walk-sum queries via exact matrix powers.

(Delta+)^k(i,j) counts hyperwalks of length k from v_i to v_j; (Delta-)^k
counts edge-hyperwalks; at CW levels the signed Laplacian powers give
signed sums over (d,d+1)- and (d+1,d)-hyperwalks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laplacian import ExactMatrix, cw_laplacian, hypergraph_laplacian, identity, mat_mul
from .model import CWHypergraph, Hypergraph, IndexOutOfRangeError


@dataclass(frozen=True)
class WalkQuery:
    kind: str  # "vertex" | "edge" | "lower" | "upper"
    from_index: int
    to_index: int
    length: int
    level: int = 0  # used by lower/upper only


@dataclass(frozen=True)
class CountResult:
    value: int
    query: WalkQuery
    family: str  # which Laplacian was powered


def matrix_power(m: ExactMatrix, k: int) -> ExactMatrix:
    """Exact m^k by binary exponentiation; m^0 is the identity."""
    if k < 0:
        raise ValueError("negative power")
    result = identity(m.dim)
    base = m.entries
    e = k
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return ExactMatrix(dim=m.dim, entries=result, tag=f"{m.tag}^{k}")


def _check_index(name: str, value: int, upper: int) -> None:
    if not 1 <= value <= upper:
        raise IndexOutOfRangeError(f"{name} index {value} out of range [1..{upper}]")


def count_walks(h: Hypergraph, q: WalkQuery) -> CountResult:
    """Number of hyperwalks (kind=vertex) or edge-hyperwalks (kind=edge)
    of length q.length between the queried indices."""
    if q.kind not in ("vertex", "edge"):
        raise ValueError(f"count_walks handles vertex/edge kinds, got {q.kind!r}")
    space = h.n if q.kind == "vertex" else h.m
    _check_index("from", q.from_index, space)
    _check_index("to", q.to_index, space)
    if q.length < 0:
        raise ValueError("length must be >= 0")
    lap = hypergraph_laplacian(h, "even" if q.kind == "vertex" else "odd")
    value = matrix_power(lap, q.length).entry(q.from_index, q.to_index)
    return CountResult(value=value, query=q, family=lap.tag)


def signed_count(x: CWHypergraph, q: WalkQuery) -> CountResult:
    """Signed sum over (d,d+1)-hyperwalks (kind=lower, indices are d-cells)
    or (d+1,d)-hyperwalks (kind=upper, indices are (d+1)-cells)."""
    if q.kind not in ("lower", "upper"):
        raise ValueError(f"signed_count handles lower/upper kinds, got {q.kind!r}")
    lap = cw_laplacian(x, q.level, "even" if q.kind == "lower" else "odd")
    space = x.counts[q.level] if q.kind == "lower" else x.counts[q.level + 1]
    _check_index("from", q.from_index, space)
    _check_index("to", q.to_index, space)
    if q.length < 0:
        raise ValueError("length must be >= 0")
    value = matrix_power(lap, q.length).entry(q.from_index, q.to_index)
    return CountResult(value=value, query=q, family=lap.tag)


def power_table(m: ExactMatrix, kmax: int) -> list[ExactMatrix]:
    """[m^0, m^1, ..., m^kmax] by iterated multiplication (for tables the
    running product beats repeated binary exponentiation)."""
    out = [ExactMatrix(dim=m.dim, entries=identity(m.dim), tag=f"{m.tag}^0")]
    acc = identity(m.dim)
    for k in range(1, kmax + 1):
        acc = mat_mul(acc, m.entries)
        out.append(ExactMatrix(dim=m.dim, entries=acc, tag=f"{m.tag}^{k}"))
    return out
