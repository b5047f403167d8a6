"""Bounded sublattices of the subset lattice of {1..n}.

The elements come from cover x-parts. A valid family always contains the
empty set and the full set and is closed under pairwise union and
intersection; CoverLattice enforces that at construction, so holding one is
proof of the closure properties. Rank is the longest chain length, and the
inverse construction rebuilds the unique diagonal-labeled bipartite graph
whose cover projections reproduce the family.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .covers import DEFAULT_MAX_VERTICES, enumerate_minimal_covers, x_parts
from .exceptions import InconsistencyError, LatticeError
from .graphs import LabeledBipartiteGraph, as_graph

__all__ = [
    "CoverLattice",
    "HasseDiagram",
    "ClosureCertificate",
    "is_sublattice",
    "lattice_from_covers",
    "hasse",
    "rank",
    "is_full",
    "graph_from_lattice",
    "enumerate_sublattices",
    "random_sublattice",
    "format_lattice",
    "parse_lattice",
    "hasse_to_dot",
]


def _element_key(e: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return (len(e), tuple(sorted(e)))


def _set_str(e: frozenset[int] | None) -> str:
    if e is None:
        return "?"
    return "{" + ",".join(map(str, sorted(e))) + "}"


@dataclass(frozen=True)
class ClosureCertificate:
    """Witness that a family is not a bounded sublattice."""

    kind: str  # "missing-bottom" | "missing-top" | "union" | "intersection"
    left: frozenset[int] | None = None
    right: frozenset[int] | None = None
    missing: frozenset[int] | None = None

    def __str__(self) -> str:
        if self.kind == "missing-bottom":
            return "the empty set is missing"
        if self.kind == "missing-top":
            return "the full set is missing"
        op = "|" if self.kind == "union" else "&"
        return (
            f"{_set_str(self.left)} {op} {_set_str(self.right)} "
            f"= {_set_str(self.missing)} is missing"
        )


def is_sublattice(
    family: Iterable[frozenset[int]], n: int
) -> tuple[bool, ClosureCertificate | None]:
    """Check boundary membership and union/intersection closure.

    Returns (True, None) or (False, certificate) where the certificate names
    the missing boundary element or a violating pair.
    """
    elems = {frozenset(e) for e in family}
    for e in elems:
        if not all(1 <= i <= n for i in e):
            raise LatticeError(f"element {sorted(e)} is not a subset of 1..{n}")
    # closure first: a violating pair is the more informative certificate
    ordered = sorted(elems, key=_element_key)
    for idx, a in enumerate(ordered):
        for b in ordered[idx + 1 :]:
            u = a | b
            if u not in elems:
                return False, ClosureCertificate("union", a, b, u)
            i = a & b
            if i not in elems:
                return False, ClosureCertificate("intersection", a, b, i)
    bottom: frozenset[int] = frozenset()
    top = frozenset(range(1, n + 1))
    if bottom not in elems:
        return False, ClosureCertificate("missing-bottom", missing=bottom)
    if top not in elems:
        return False, ClosureCertificate("missing-top", missing=top)
    return True, None


@dataclass(frozen=True)
class CoverLattice:
    """A bounded sublattice of the subset lattice of {1..n}.

    Elements are deduplicated and canonically ordered by (size, sorted
    members); construction fails loudly if the family is not closed.
    """

    n: int
    elements: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise LatticeError("need n >= 1")
        canonical = tuple(sorted({frozenset(e) for e in self.elements}, key=_element_key))
        object.__setattr__(self, "elements", canonical)
        ok, cert = is_sublattice(canonical, self.n)
        if not ok:
            raise LatticeError(f"not a bounded sublattice: {cert}", certificate=cert)


def lattice_from_covers(parts: Iterable[frozenset[int]], n: int) -> CoverLattice:
    """Collect cover x-parts into their lattice.

    For x-parts of a genuine unmixed labeled graph the closure requirements
    cannot fail; a LatticeError here therefore signals an upstream bug.
    """
    return CoverLattice(n, tuple(frozenset(p) for p in parts))


@dataclass(frozen=True)
class HasseDiagram:
    """Cover relation of the subset order restricted to the lattice elements."""

    nodes: tuple[frozenset[int], ...]
    edges: tuple[tuple[frozenset[int], frozenset[int]], ...]


def hasse(lat: CoverLattice) -> HasseDiagram:
    """Edges (A, B) with A strictly below B and nothing of the lattice between."""
    nodes = lat.elements
    edges = [
        (a, b)
        for a in nodes
        for b in nodes
        if a < b and not any(a < c < b for c in nodes)
    ]
    edges.sort(key=lambda ab: (_element_key(ab[0]), _element_key(ab[1])))
    return HasseDiagram(nodes, tuple(edges))


def rank(lat: CoverLattice) -> int:
    """Longest chain cardinality minus one.

    Every maximal chain runs from the empty set to the full set along Hasse
    edges; a distributive lattice is graded, so all of them must have the
    same length. That is asserted rather than assumed: a disagreement means
    a non-lattice input slipped through validation.
    """
    diagram = hasse(lat)
    preds: dict[frozenset[int], list[frozenset[int]]] = {e: [] for e in lat.elements}
    for a, b in diagram.edges:
        preds[b].append(a)
    longest: dict[frozenset[int], int] = {}
    shortest: dict[frozenset[int], int] = {}
    for e in lat.elements:  # sorted by size, so predecessors come first
        below = preds[e]
        if not below:
            longest[e] = 0
            shortest[e] = 0
        else:
            longest[e] = 1 + max(longest[a] for a in below)
            shortest[e] = 1 + min(shortest[a] for a in below)
    top = lat.elements[-1]
    if longest[top] != shortest[top]:
        raise LatticeError(
            f"maximal chains of cardinality {shortest[top] + 1} and {longest[top] + 1} "
            "coexist: not a graded lattice"
        )
    return longest[top]


def is_full(lat: CoverLattice) -> bool:
    """Rank equals n. Full lattices belong to the Cohen-Macaulay graphs."""
    return rank(lat) == lat.n


def graph_from_lattice(
    lat: CoverLattice, max_vertices: int = DEFAULT_MAX_VERTICES
) -> LabeledBipartiteGraph:
    """The unique labeled bipartite graph whose cover x-parts reproduce lat.

    Edge rule: (i, j) is present iff every element containing j also
    contains i. Each call re-derives the cover family of the result and
    checks it lands back on the input; a mismatch aborts loudly, so a
    returned graph is certified correct for its instance.
    """
    n = lat.n
    full = frozenset(range(1, n + 1))
    edges: set[tuple[int, int]] = set()
    for j in range(1, n + 1):
        forced = full
        for a in lat.elements:
            if j in a:
                forced = forced & a
        edges.update((i, j) for i in forced)
    lg = LabeledBipartiteGraph(n, frozenset(edges))
    covers = enumerate_minimal_covers(as_graph(lg), max_vertices=max_vertices)
    reproduced = set(x_parts(lg, covers))
    if reproduced != set(lat.elements):
        raise InconsistencyError(
            "reconstructed cover lattice differs from the input lattice",
            details={
                "n": n,
                "input_elements": [sorted(e) for e in lat.elements],
                "reproduced_elements": sorted(sorted(e) for e in reproduced),
                "edges": sorted(lg.edges),
            },
        )
    return lg


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length())
        mask ^= low
    return frozenset(out)


def _masks_closed(family: set[int]) -> bool:
    ordered = sorted(family)
    for idx, a in enumerate(ordered):
        for b in ordered[idx + 1 :]:
            if (a | b) not in family or (a & b) not in family:
                return False
    return True


def enumerate_sublattices(n: int) -> Iterator[CoverLattice]:
    """Every bounded sublattice of the subset lattice of {1..n}, exactly once.

    Brute-force filter over all families of the 2^n - 2 intermediate
    subsets, so feasible only for n <= 4 (16384 candidate families there).
    Deterministic order.
    """
    if not 1 <= n <= 4:
        raise LatticeError(f"exhaustive enumeration is limited to 1 <= n <= 4, got {n}")
    full = (1 << n) - 1
    middle = list(range(1, full))
    for combo in range(1 << len(middle)):
        family = {0, full}
        for t in range(len(middle)):
            if combo >> t & 1:
                family.add(middle[t])
        if _masks_closed(family):
            yield CoverLattice(n, tuple(_mask_to_set(s) for s in sorted(family)))


def random_sublattice(n: int, generator_count: int, seed: int) -> CoverLattice:
    """Union/intersection closure of seeded random subsets plus the two bounds.

    Deterministic per (n, generator_count, seed). The closure can never
    exceed the 2^n subsets of the ground set.
    """
    if not 1 <= n <= 16:
        raise LatticeError(f"random generation is limited to 1 <= n <= 16, got {n}")
    if generator_count < 0:
        raise LatticeError("generator_count must be non-negative")
    rng = random.Random(seed)
    full = (1 << n) - 1
    closed: set[int] = {0, full}
    pending = [rng.getrandbits(n) for _ in range(generator_count)]
    while pending:
        e = pending.pop()
        if e in closed:
            continue
        fresh: set[int] = set()
        for f in closed:
            for c in (e | f, e & f):
                if c not in closed and c != e:
                    fresh.add(c)
        closed.add(e)
        pending.extend(fresh)
    return CoverLattice(n, tuple(_mask_to_set(s) for s in sorted(closed)))


def format_lattice(lat: CoverLattice) -> str:
    """Lattice file: "n=<n>" header, then one element per line.

    Elements are comma-separated sorted indices; the empty set prints as {}.
    """
    lines = [f"n={lat.n}"]
    for e in lat.elements:
        lines.append(",".join(map(str, sorted(e))) if e else "{}")
    return "\n".join(lines) + "\n"


def parse_lattice(text: str) -> CoverLattice:
    """Parse a lattice file and validate it.

    Raises LatticeError on malformed input; for closure failures the error
    carries the certificate.
    """
    n: int | None = None
    elements: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise LatticeError(f"line {lineno}: expected header 'n=<count>', got {raw!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise LatticeError(f"line {lineno}: bad count in {raw!r}") from None
            if n < 1:
                raise LatticeError(f"line {lineno}: need n >= 1")
            continue
        if line == "{}":
            elements.append(frozenset())
            continue
        try:
            members = frozenset(int(tok) for tok in line.split(","))
        except ValueError:
            raise LatticeError(
                f"line {lineno}: expected comma-separated indices or {{}}, got {raw!r}"
            ) from None
        for i in members:
            if not 1 <= i <= n:
                raise LatticeError(f"line {lineno}: index {i} is out of range 1..{n}")
        elements.append(members)
    if n is None:
        raise LatticeError("missing 'n=<count>' header")
    return CoverLattice(n, tuple(elements))


def hasse_to_dot(diagram: HasseDiagram) -> str:
    """Graphviz text for the Hasse diagram, edges pointing small to large."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for e in diagram.nodes:
        lines.append(f'  "{_set_str(e)}";')
    for a, b in diagram.edges:
        lines.append(f'  "{_set_str(a)}" -> "{_set_str(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
