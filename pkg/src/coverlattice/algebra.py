"""Cover incidence matrices, exact integer rank, and the dimension checks.

Each minimal cover of a labeled graph becomes a 0/1 row of length 2n (x
coordinates first, then y). The dimension of the semigroup generated by the
cover monomials equals the rank of that matrix over the rationals; the
package computes it fraction-free, ties it to the lattice rank, and raises
an InconsistencyError carrying the full instance whenever any of the
identities between those quantities fails.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass

from .covers import Cover
from .exceptions import CoverError, InconsistencyError
from .graphs import LabeledBipartiteGraph
from .lattice import CoverLattice, is_full, rank

__all__ = [
    "ExponentMatrix",
    "TruncatedMatrix",
    "DimensionReport",
    "cover_vector",
    "monomial_string",
    "build_matrices",
    "rank_exact",
    "rank_mod",
    "dimension_report",
    "hilbert_counts",
    "growth_oracle",
    "format_report",
]


def cover_vector(cover: Cover, lg: LabeledBipartiteGraph) -> tuple[int, ...]:
    """0/1 incidence vector of a cover of ``as_graph(lg)``.

    Coordinate i-1 is x_i, coordinate n+i-1 is y_i. Exactly one of each pair
    must be present (anything else means lg was not unmixed-labeled).
    """
    n = lg.n
    vec = [0] * (2 * n)
    for v in cover:
        if not 1 <= v <= 2 * n:
            raise CoverError(f"cover member {v} is out of range 1..{2 * n}")
        vec[v - 1] = 1
    for i in range(n):
        if vec[i] == vec[n + i]:
            state = "present" if vec[i] else "absent"
            raise CoverError(f"pair x{i + 1}/y{i + 1} both {state} in cover {sorted(cover)}")
    return tuple(vec)


def monomial_string(vec: Sequence[int]) -> str:
    """Squarefree monomial named by the vector, e.g. (1,0,0,1) -> "x1*y2"."""
    if len(vec) % 2 != 0 or any(e not in (0, 1) for e in vec):
        raise ValueError("expected a 0/1 vector of even length")
    n = len(vec) // 2
    names = [f"x{i + 1}" for i in range(n) if vec[i]]
    names += [f"y{i + 1}" for i in range(n) if vec[n + i]]
    return "*".join(names) if names else "1"


@dataclass(frozen=True)
class ExponentMatrix:
    """Rows are the cover vectors: all-x cover first, all-y cover last."""

    n: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TruncatedMatrix:
    """The first n columns of the exponent matrix, same row order."""

    rows: tuple[tuple[int, ...], ...]


def build_matrices(
    covers: Sequence[Cover], lg: LabeledBipartiteGraph
) -> tuple[ExponentMatrix, TruncatedMatrix]:
    """Stack the cover vectors of a complete cover family.

    Row order is deterministic: descending x-part size, then lexicographic on
    the x-part. That places the all-x cover first and the all-y cover last.
    """
    n = lg.n
    vectors = [cover_vector(c, lg) for c in covers]
    if len(set(vectors)) != len(vectors):
        raise CoverError("cover family contains duplicates")

    def row_key(vec: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        xpart = tuple(i + 1 for i in range(n) if vec[i])
        return (-len(xpart), xpart)

    vectors.sort(key=row_key)
    rows = tuple(vectors)
    if sum(rows[0][:n]) != n or sum(rows[-1][:n]) != 0:
        raise CoverError("cover family lacks the all-x or the all-y cover")
    return ExponentMatrix(n, rows), TruncatedMatrix(tuple(r[:n] for r in rows))


def rank_exact(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) integer elimination.

    Entries stay integers throughout: each interior division is exact by the
    Sylvester determinant identity, and that exactness is asserted, so the
    result involves no floating point and no rounding anywhere.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("ragged matrix")
    pivots = 0
    prev = 1
    for col in range(width):
        piv = next((r for r in range(pivots, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[pivots], m[piv] = m[piv], m[pivots]
        lead = m[pivots][col]
        pivot_row = m[pivots]
        for r in range(pivots + 1, len(m)):
            row = m[r]
            factor = row[col]
            for c in range(col + 1, width):
                num = row[c] * lead - factor * pivot_row[c]
                quot, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness (bug)")
                row[c] = quot
            row[col] = 0
        prev = lead
        pivots += 1
        if pivots == len(m):
            break
    return pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the field with p elements (p prime). Diagnostic only."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    m = [[int(e) % p for e in r] for r in rows]
    if not m:
        return 0
    width = len(m[0])
    pivots = 0
    for col in range(width):
        piv = next((r for r in range(pivots, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[pivots], m[piv] = m[piv], m[pivots]
        inv = pow(m[pivots][col], -1, p)
        m[pivots] = [(e * inv) % p for e in m[pivots]]
        for r in range(len(m)):
            if r != pivots and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[pivots])]
        pivots += 1
        if pivots == len(m):
            break
    return pivots


@dataclass(frozen=True)
class DimensionReport:
    """Every rank and dimension quantity of one instance, cross-checked."""

    n: int
    cover_count: int
    rank_full: int
    rank_truncated: int
    lattice_rank: int
    dimension: int
    dim_matches_lattice_rank: bool
    cohen_macaulay: bool

    def as_dict(self) -> dict:
        return asdict(self)


def dimension_report(
    lg: LabeledBipartiteGraph, covers: Sequence[Cover], lat: CoverLattice
) -> DimensionReport:
    """Compute the report and verify the identities tying its fields together.

    Required on every valid instance: rank_full = rank_truncated + 1,
    rank_truncated = lattice rank, dimension = lattice rank + 1, and for a
    full lattice dimension = n + 1. Any violation raises InconsistencyError
    with the whole instance attached; on genuine inputs that never happens,
    so a raise is a bug alarm worth keeping loud.
    """
    full_m, trunc_m = build_matrices(covers, lg)
    rank_full = rank_exact(full_m.rows)
    rank_trunc = rank_exact(trunc_m.rows)
    lattice_rank = rank(lat)
    dimension = rank_full
    cm = is_full(lat)
    problems = []
    if rank_full != rank_trunc + 1:
        problems.append(f"rank_full={rank_full} is not rank_truncated+1={rank_trunc + 1}")
    if rank_trunc != lattice_rank:
        problems.append(f"rank_truncated={rank_trunc} differs from lattice_rank={lattice_rank}")
    if dimension != lattice_rank + 1:
        problems.append(f"dimension={dimension} is not lattice_rank+1={lattice_rank + 1}")
    if cm and dimension != lg.n + 1:
        problems.append(f"full lattice but dimension={dimension} differs from n+1={lg.n + 1}")
    if problems:
        raise InconsistencyError(
            "; ".join(problems),
            details={
                "n": lg.n,
                "edges": sorted(lg.edges),
                "covers": [sorted(c) for c in covers],
                "lattice": [sorted(e) for e in lat.elements],
                "rank_full": rank_full,
                "rank_truncated": rank_trunc,
                "lattice_rank": lattice_rank,
            },
        )
    return DimensionReport(
        n=lg.n,
        cover_count=len(covers),
        rank_full=rank_full,
        rank_truncated=rank_trunc,
        lattice_rank=lattice_rank,
        dimension=dimension,
        dim_matches_lattice_rank=dimension == lattice_rank + 1,
        cohen_macaulay=cm,
    )


def hilbert_counts(rows: Sequence[Sequence[int]], max_degree: int) -> list[int]:
    """Number of distinct sums of exactly t rows (repetition allowed), t = 1..max_degree.

    Sums are packed into one int, 4 bits per coordinate; with max_degree at
    most 12 and 0/1 entries no nibble can reach 16, so packed addition is
    plain addition.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    if max_degree > 12:
        raise ValueError("packing allows max_degree at most 12")
    width = len(rows[0])
    packed = []
    for r in rows:
        if any(e not in (0, 1) for e in r):
            raise ValueError("expected 0/1 rows")
        packed.append(sum(e << (4 * i) for i, e in enumerate(r)))
    if len(set(packed)) != len(packed) or len({len(r) for r in rows} | {width}) != 1:
        raise ValueError("rows must be distinct and of equal length")
    counts: list[int] = []
    current = {0}
    for _ in range(max_degree):
        current = {s + g for s in current for g in packed}
        counts.append(len(current))
    return counts


def growth_oracle(matrix: ExponentMatrix, max_degree: int = 10) -> int | None:
    """Dimension estimate from the growth of the count of degree-t products.

    The count of distinct t-fold row sums eventually grows like a polynomial
    whose degree is the dimension minus one. The degree is read off via
    iterated finite differences: the first level whose last three values
    coincide. Returns that degree plus one, or None when no level stabilizes
    within max_degree (inconclusive, not a failure).
    """
    d = len(matrix.rows)
    if d > 12 or matrix.n > 6 or max_degree > 12:
        raise ValueError("state-space guard: need d <= 12, n <= 6, max_degree <= 12")
    counts = hilbert_counts(matrix.rows, max_degree)
    level = list(counts)
    degree = 0
    while len(level) >= 3:
        if level[-1] == level[-2] == level[-3]:
            return degree + 1
        level = [b - a for a, b in zip(level, level[1:])]
        degree += 1
    return None


def format_report(report: DimensionReport) -> str:
    """Flat key=value block, one field per line."""

    def yn(flag: bool) -> str:
        return "yes" if flag else "no"

    lines = [
        f"n={report.n}",
        f"covers={report.cover_count}",
        f"rank_full={report.rank_full}",
        f"rank_truncated={report.rank_truncated}",
        f"lattice_rank={report.lattice_rank}",
        f"dimension={report.dimension}",
        f"dim_matches_lattice_rank={yn(report.dim_matches_lattice_rank)}",
        f"cohen_macaulay={yn(report.cohen_macaulay)}",
    ]
    return "\n".join(lines) + "\n"
