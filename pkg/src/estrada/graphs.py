"""Simple undirected graphs: construction, file formats, generators,
walk counts and degree-based classification.

Vertices are 0-based everywhere inside the package; parsers normalize
1-based input on the way in.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

__all__ = [
    "Graph",
    "GraphFormatError",
    "GraphClassification",
    "KDegreeVector",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
    "complete",
    "path",
    "cycle",
    "complete_bipartite",
    "star",
    "erdos_renyi",
    "generate",
    "GENERATOR_FAMILIES",
    "k_degrees",
    "triangle_count",
    "is_bipartite",
    "classify",
]

# Walk counts stay in exact integer arithmetic while every value is
# exactly representable as a float64; beyond that the vector is kept
# unit-norm with an accumulated log scale.
_EXACT_LIMIT = 2**53


class GraphFormatError(ValueError):
    """Raised when graph input (edge list, graph6) is malformed."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency[i]`` is the sorted tuple of neighbors of vertex ``i``;
    no self-loops, no duplicates, and j in adjacency[i] iff i in
    adjacency[j].
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph on vertices 0..n-1 from an iterable of (u, v) pairs.

        Duplicate edges (in either orientation) collapse; self-loops and
        out-of-range labels are rejected.
        """
        if n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        neigh: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            neigh[u].append(v)
            neigh[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in neigh)
        return cls(n=n, adjacency=adjacency, m=len(seen))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adjacency)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if v > u:
                    yield (u, v)

    def connected_components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        comps: list[tuple[int, ...]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            queue = deque([start])
            seen[start] = True
            comp = [start]
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1


# ---------------------------------------------------------------------------
# Parsing


def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented edge-list text into a Graph.

    Each non-comment line holds two distinct integer vertex labels.
    ``#`` starts a comment.  Labels may be 0-based or 1-based; the base
    is auto-detected from the minimum label seen.
    """
    raw_edges: list[tuple[int, int, int]] = []  # (u, v, line_no)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {line_no}: expected two vertex labels, got {len(parts)}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {line_no}: non-integer vertex label") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {line_no}: negative vertex label")
        if u == v:
            raise GraphFormatError(f"line {line_no}: self-loop at vertex {u}")
        raw_edges.append((u, v, line_no))
    if not raw_edges:
        raise GraphFormatError("no edges found in edge-list input")
    lowest = min(min(u, v) for u, v, _ in raw_edges)
    base = 1 if lowest >= 1 else 0
    edges = [(u - base, v - base) for u, v, _ in raw_edges]
    n = max(max(u, v) for u, v in edges) + 1
    return Graph.from_edges(n, edges)


def _g6_strip_header(line: str) -> str:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    return s


def _g6_decode_size(s: str) -> tuple[int, int]:
    """Return (n, index of first body char)."""
    if not s:
        raise GraphFormatError("empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:  # '~': long form
        if len(s) >= 2 and ord(s[1]) == 126:
            raise GraphFormatError("graph6 very-long size header (n > 258047) not supported")
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 long size header")
        vals = [ord(ch) - 63 for ch in s[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphFormatError("invalid character in graph6 size header")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        if n < 63:
            raise GraphFormatError("non-canonical graph6 long size header")
        return n, 4
    v = c0 - 63
    if v < 0 or v > 62:
        raise GraphFormatError(f"invalid graph6 size character {s[0]!r}")
    return v, 1


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the short size header (n <= 62) and the 4-character long
    header (63 <= n <= 258047); an optional ``>>graph6<<`` prefix is
    stripped.
    """
    s = _g6_strip_header(line)
    n, start = _g6_decode_size(s)
    if n == 0:
        raise GraphFormatError("graph6 graph with zero vertices")
    npairs = n * (n - 1) // 2
    body = s[start:]
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != expected {expected} for n={n}"
        )
    bits: list[int] = []
    for ch in body:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"invalid graph6 body character {ch!r}")
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    if any(bits[npairs:]):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 string (no trailing newline)."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphFormatError("graph too large for supported graph6 headers")
    edge_set = {(u, v) for u, v in g.edges()}
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return header + "".join(chars)


# ---------------------------------------------------------------------------
# Generators


def complete(n: int) -> Graph:
    _require_positive(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    _require_positive(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require_positive(n)
    if n < 3:
        raise GraphFormatError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphFormatError("complete bipartite sides must be >= 1")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def star(n: int) -> Graph:
    """Star on n vertices: hub 0 joined to 1..n-1."""
    _require_positive(n)
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def erdos_renyi(n: int, p_edge: float, seed: int) -> Graph:
    """G(n, p) sample, reproducible for a fixed seed.

    Uses the stdlib Mersenne Twister (`random.Random(seed)`) and draws
    one uniform variate per vertex pair in lexicographic (i, j) order,
    so the edge set is a pure function of (n, p_edge, seed).
    """
    _require_positive(n)
    if not (0.0 <= p_edge <= 1.0):
        raise GraphFormatError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p_edge]
    return Graph.from_edges(n, edges)


GENERATOR_FAMILIES = {
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "erdos-renyi": (erdos_renyi, 3),
}


def generate(family: str, *args) -> Graph:
    """Dispatch to a named generator family (CLI entry point).

    ``erdos-renyi`` takes (n, p_edge, seed); the rest take integer sizes.
    """
    key = family.replace("_", "-").lower()
    if key not in GENERATOR_FAMILIES:
        known = ", ".join(sorted(GENERATOR_FAMILIES))
        raise GraphFormatError(f"unknown family {family!r} (known: {known})")
    fn, arity = GENERATOR_FAMILIES[key]
    if len(args) != arity:
        raise GraphFormatError(f"family {key!r} takes {arity} argument(s), got {len(args)}")
    if key == "erdos-renyi":
        n, p_edge, seed = int(args[0]), float(args[1]), int(args[2])
        return erdos_renyi(n, p_edge, seed)
    return fn(*(int(a) for a in args))


def _require_positive(n: int) -> None:
    if n < 1:
        raise GraphFormatError("vertex count must be >= 1")


# ---------------------------------------------------------------------------
# Walk counts


@dataclass(frozen=True)
class KDegreeVector:
    """Per-vertex counts of walks of length k.

    In exact mode ``values`` are integers and ``log_scale`` is 0.  Once a
    count would leave exact float range the vector is kept unit-norm and
    ``values[i] * exp(log_scale)`` approximates the true count to ~1e-12
    relative.
    """

    k: int
    values: tuple
    log_scale: float
    exact: bool

    def approx_counts(self) -> tuple[float, ...]:
        if self.exact:
            return tuple(float(v) for v in self.values)
        factor = math.exp(self.log_scale)
        return tuple(v * factor for v in self.values)


def k_degrees(g: Graph, k: int) -> KDegreeVector:
    """Walk counts of length k per start vertex.

    k = 0 gives all ones and k = 1 the degree vector; each further step
    sums the previous counts over the neighbor lists.
    """
    if k < 0:
        raise ValueError("walk length must be >= 0")
    values: list = [1] * g.n
    exact = True
    log_scale = 0.0
    for _ in range(k):
        values = [sum(values[j] for j in g.adjacency[i]) for i in range(g.n)]
        if exact and max(values, default=0) > _EXACT_LIMIT:
            norm = math.sqrt(float(sum(v * v for v in values)))
            values = [float(v) / norm for v in values]
            log_scale = math.log(norm)
            exact = False
        elif not exact:
            norm = math.sqrt(sum(v * v for v in values))
            if norm > 0.0:
                values = [v / norm for v in values]
                log_scale += math.log(norm)
    return KDegreeVector(k=k, values=tuple(values), log_scale=log_scale, exact=exact)


def triangle_count(g: Graph) -> int:
    """Exact number of triangles, via neighbor-set intersection per edge."""
    sets = [set(ns) for ns in g.adjacency]
    total = 0
    for u, v in g.edges():
        # count the third vertex above v so each triangle is seen once
        total += sum(1 for w in sets[u] & sets[v] if w > v)
    return total


def is_bipartite(g: Graph):
    """Two-color the graph; return (V1, V2) as sorted tuples or None.

    Isolated vertices land in V1 (each starts its own BFS with color 0).
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side1 = tuple(i for i in range(g.n) if color[i] == 0)
    side2 = tuple(i for i in range(g.n) if color[i] == 1)
    return (side1, side2)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class GraphClassification:
    """Verdicts of the degree-ratio graph classes.

    All ratio predicates are decided by exact integer cross
    multiplication; the witnesses are exact (ints or Fractions).
    """

    regular: int | None
    semiregular: tuple[int, int] | None
    pseudoregular: Fraction | None
    semipseudoregular: Fraction | None
    pseudosemiregular: tuple[Fraction, Fraction] | None
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    strictly_semiregular: bool
    strictly_semipseudoregular: bool
    strictly_pseudosemiregular: bool

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def _int_walks(g: Graph, upto: int) -> list[list[int]]:
    """d_0..d_upto as exact integer vectors."""
    out = [[1] * g.n]
    for _ in range(upto):
        prev = out[-1]
        out.append([sum(prev[j] for j in g.adjacency[i]) for i in range(g.n)])
    return out


def classify(g: Graph) -> GraphClassification:
    """Classify a graph against the degree and walk-ratio classes.

    The pseudo classes (constant d2/d, constant d3/d, two-valued d2/d
    across edges) are evaluated per their literal definitions; any vertex
    of degree 0 makes them fail, since its ratio is undefined.  The
    edgeless graph is reported 0-regular.
    """
    walks = _int_walks(g, 3)
    d1, d2, d3 = walks[1], walks[2], walks[3]

    regular = d1[0] if all(d == d1[0] for d in d1) else None

    semiregular: tuple[int, int] | None = None
    edges = list(g.edges())
    if not edges:
        semiregular = (0, 0) if regular == 0 else None
    else:
        u0, v0 = edges[0]
        cand = frozenset((d1[u0], d1[v0]))
        if all(frozenset((d1[u], d1[v])) == cand for u, v in edges):
            a, b = max(cand), min(cand)
            semiregular = (a, b)

    pseudoregular: Fraction | None = None
    semipseudoregular: Fraction | None = None
    pseudosemiregular: tuple[Fraction, Fraction] | None = None
    if all(d > 0 for d in d1):
        if all(d2[i] * d1[0] == d2[0] * d1[i] for i in range(g.n)):
            pseudoregular = Fraction(d2[0], d1[0])
        if all(d3[i] * d1[0] == d3[0] * d1[i] for i in range(g.n)):
            semipseudoregular = Fraction(d3[0], d1[0])
        if edges:
            ratios = [Fraction(d2[i], d1[i]) for i in range(g.n)]
            u0, v0 = edges[0]
            pair = frozenset((ratios[u0], ratios[v0]))
            if all(frozenset((ratios[u], ratios[v])) == pair for u, v in edges):
                a, b = max(pair), min(pair)
                pseudosemiregular = (a, b)

    return GraphClassification(
        regular=regular,
        semiregular=semiregular,
        pseudoregular=pseudoregular,
        semipseudoregular=semipseudoregular,
        pseudosemiregular=pseudosemiregular,
        bipartition=is_bipartite(g),
        strictly_semiregular=semiregular is not None and regular is None,
        strictly_semipseudoregular=semipseudoregular is not None and pseudoregular is None,
        strictly_pseudosemiregular=pseudosemiregular is not None and pseudoregular is None,
    )
