"""Incidence combinatorics of the ten lines on the quintic del Pezzo surface."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeError

PAIRING = (1, -1, -1, -1, -1)
ANTICANONICAL = (3, 1, 1, 1, 1)


@dataclass(frozen=True, order=True)
class DivClass:
    """(d; m1, m2, m3, m4) = d h - sum m_i e_i in the basis (h, e_1..e_4)."""

    coords: tuple

    def pair(self, other: "DivClass") -> int:
        return sum(s * a * b for s, a, b in zip(PAIRING, self.coords, other.coords))

    def self_intersection(self) -> int:
        return self.pair(self)

    def degree(self) -> int:
        """Pairing with the anticanonical class 3h - sum e_i."""
        return self.pair(DivClass(ANTICANONICAL))

    @property
    def label(self) -> str:
        d, *m = self.coords
        if d == 0:
            i = next(k for k, v in enumerate(m) if v)
            return f"e{i + 1}"
        i, j = [k + 1 for k, v in enumerate(m) if v]
        return f"h-e{i}-e{j}"


def exceptional_classes() -> list[DivClass]:
    """e_i and h - e_i - e_j: the ten (-1)-classes."""
    out = []
    for i in range(4):
        m = [0, 0, 0, 0]
        m[i] = -1
        out.append(DivClass((0, *m)))
    for i, j in combinations(range(4), 2):
        m = [0, 0, 0, 0]
        m[i] = m[j] = 1
        out.append(DivClass((1, *m)))
    return out


@dataclass(frozen=True)
class IncidenceGraph:
    labels: tuple
    edges: frozenset  # of frozenset pairs of vertex indices

    def __post_init__(self):
        n = len(self.labels)
        for e in self.edges:
            if len(e) != 2 or not all(0 <= v < n for v in e):
                raise ValueError(f"bad edge {set(e)}")

    @classmethod
    def from_pairs(cls, labels, pairs) -> "IncidenceGraph":
        return cls(tuple(labels), frozenset(frozenset(p) for p in pairs))

    @property
    def n(self) -> int:
        return len(self.labels)

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency()]

    def girth(self) -> int | None:
        """Length of a shortest cycle (BFS from every vertex)."""
        adj = self.adjacency()
        best = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        length = dist[v] + dist[w] + 1
                        if best is None or length < best:
                            best = length
        return best

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_json(self) -> dict:
        return {"vertices": list(self.labels), "edges": [list(e) for e in self.sorted_edges()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  {i} [label="{lab}"];')
        for a, b in self.sorted_edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def petersen_graph() -> IncidenceGraph:
    """Vertices: the ten exceptional classes; edges: pairs with intersection 1."""
    classes = exceptional_classes()
    pairs = [(i, j) for i, j in combinations(range(10), 2) if classes[i].pair(classes[j]) == 1]
    return IncidenceGraph.from_pairs([c.label for c in classes], pairs)


def cycle_graph(n: int) -> IncidenceGraph:
    return IncidenceGraph.from_pairs([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> IncidenceGraph:
    return IncidenceGraph.from_pairs([str(i) for i in range(n)], combinations(range(n), 2))


def automorphisms(g: IncidenceGraph, limit: int = 12):
    """Yield every automorphism as a tuple image[v], by degree-respecting backtracking."""
    if g.n > limit:
        raise SizeError(f"{g.n} vertices exceeds the exhaustive-search limit {limit}")
    adj = g.adjacency()
    deg = [len(s) for s in adj]
    n = g.n
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            yield tuple(image)
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if all((u in adj[v]) == (image[u] in adj[w]) for u in range(v)):
                image[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
        image[v] = -1

    yield from extend(0)


def automorphism_count(g: IncidenceGraph, limit: int = 12) -> int:
    return sum(1 for _ in automorphisms(g, limit))


def is_vertex_transitive(g: IncidenceGraph, limit: int = 12) -> bool:
    orbit = {perm[0] for perm in automorphisms(g, limit)}
    return len(orbit) == g.n


def vinberg_configuration() -> IncidenceGraph:
    """10 line vertices plus 15 point vertices, each point joined to the two lines through it."""
    pet = petersen_graph()
    labels = list(pet.labels)
    pairs = []
    for a, b in pet.sorted_edges():
        labels.append(f"p({pet.labels[a]},{pet.labels[b]})")
        k = len(labels) - 1
        pairs += [(a, k), (b, k)]
    return IncidenceGraph.from_pairs(labels, pairs)


def contract_points(g: IncidenceGraph, line_count: int = 10) -> IncidenceGraph:
    """Replace every point vertex (index >= line_count) of degree 2 by an edge between its lines."""
    adj = g.adjacency()
    pairs = []
    for v in range(line_count, g.n):
        nbrs = sorted(adj[v])
        if len(nbrs) != 2:
            raise ValueError(f"point vertex {v} has degree {len(nbrs)}")
        pairs.append(tuple(nbrs))
    for e in g.edges:
        if all(v < line_count for v in e):
            pairs.append(tuple(e))
    return IncidenceGraph.from_pairs(g.labels[:line_count], pairs)


def singular_fiber_partitions() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The three splittings of {1, 2, 3, 4} into two pairs."""
    out = []
    for j in (2, 3, 4):
        rest = tuple(k for k in (2, 3, 4) if k != j)
        out.append(((1, j), rest))
    return out


@dataclass(frozen=True)
class FlagPoncelet:
    n: int
    flags: tuple  # (vertex, edge) with edge e joining vertices e and e+1
    swap_vertex: tuple  # fiber swap of the flag -> edge projection
    swap_edge: tuple  # fiber swap of the flag -> vertex projection
    order: int

    def fiber_sizes(self) -> tuple[list[int], list[int]]:
        by_vertex = [sum(1 for v, _ in self.flags if v == k) for k in range(self.n)]
        by_edge = [sum(1 for _, e in self.flags if e == k) for k in range(self.n)]
        return by_vertex, by_edge


def _perm_order(perm) -> int:
    ident = tuple(range(len(perm)))
    cur = tuple(perm)
    k = 1
    while cur != ident:
        cur = tuple(perm[i] for i in cur)
        k += 1
    return k


def flag_poncelet(n: int) -> FlagPoncelet:
    """Vertex-edge flags of a regular n-gon and the rotation made of two involutions.

    One involution keeps the edge and moves to its other vertex; the other
    keeps the vertex and moves to its other edge. Their composition rotates
    the polygon by one step.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    flags = tuple(sorted({(e, e) for e in range(n)} | {((e + 1) % n, e) for e in range(n)}))
    index = {f: i for i, f in enumerate(flags)}

    def other_vertex(f):
        v, e = f
        a, b = e, (e + 1) % n
        return (b if v == a else a, e)

    def other_edge(f):
        v, e = f
        return (v, (v - 1) % n if e == v else v)

    s1 = tuple(index[other_vertex(f)] for f in flags)
    s2 = tuple(index[other_edge(f)] for f in flags)
    composed = tuple(s2[s1[i]] for i in range(len(flags)))
    return FlagPoncelet(n, flags, s1, s2, _perm_order(composed))
