"""Unicyclic decomposition, rooted-tree shapes, and canonical codes.

A *shape* is the label-free form of a rooted tree: a nested tuple whose
entries are the shapes of the root's subtrees, sorted by their encoded
byte string. `()` is a single vertex. Shapes double as dictionary keys
throughout the enumeration machinery.

Canonical codes are ASCII byte strings: equal codes iff isomorphic
(within the tree / unicyclic class handled), totally ordered, stable
across runs.
"""
from __future__ import annotations

from collections import deque
from functools import cache, cached_property
from typing import Iterator, Sequence

from .errors import NotConnectedError, NotUnicyclicError
from .graph import Graph

Shape = tuple  # recursive: tuple of child Shapes

_code_cache: dict[Shape, bytes] = {(): b"()"}


def shape_code(shape: Shape) -> bytes:
    """Nested-parenthesis encoding; children appear in sorted order."""
    code = _code_cache.get(shape)
    if code is None:
        code = b"(" + b"".join(shape_code(c) for c in shape) + b")"
        _code_cache[shape] = code
    return code


def canon_shape(children: Sequence[Shape]) -> Shape:
    return tuple(sorted(children, key=shape_code))


_stats_cache: dict[Shape, tuple[int, int, int]] = {}


def shape_stats(shape: Shape) -> tuple[int, int, int]:
    """(size, sum of depths from root, Wiener index) of the rooted tree."""
    cached = _stats_cache.get(shape)
    if cached is not None:
        return cached
    size, depth_sum, wien = 1, 0, 0
    # pairs through the root: merge subtrees one at a time
    for child in shape:
        cs, cd, cw = shape_stats(child)
        below = cd + cs  # distances from this root into the subtree
        wien += cw + below + below * (size - 1) + cs * depth_sum
        depth_sum += below
        size += cs
    _stats_cache[shape] = (size, depth_sum, wien)
    return (size, depth_sum, wien)


def shape_size(shape: Shape) -> int:
    return shape_stats(shape)[0]


_deg_cache: dict[Shape, tuple[int, int]] = {}


def shape_degrees(shape: Shape) -> tuple[int, int]:
    """(root child count, max degree among non-root vertices; 0 if none)."""
    cached = _deg_cache.get(shape)
    if cached is not None:
        return cached
    inner = 0
    for child in shape:
        c_root, c_inner = shape_degrees(child)
        inner = max(inner, c_root + 1, c_inner)
    result = (len(shape), inner)
    _deg_cache[shape] = result
    return result


def path_shape(k: int) -> Shape:
    """Path on k vertices rooted at one end."""
    s: Shape = ()
    for _ in range(k - 1):
        s = (s,)
    return s


@cache
def rooted_shapes(n: int) -> tuple[Shape, ...]:
    """All rooted trees on n vertices up to isomorphism."""
    if n == 1:
        return ((),)
    out: list[Shape] = []

    def extend(remaining: int, max_size: int, max_idx: int, acc: list[Shape]) -> None:
        if remaining == 0:
            out.append(canon_shape(acc))
            return
        top = min(remaining, max_size)
        for s in range(top, 0, -1):
            pool = rooted_shapes(s)
            start = max_idx if s == max_size else 0
            for idx in range(start, len(pool)):
                acc.append(pool[idx])
                extend(remaining - s, s, idx, acc)
                acc.pop()

    extend(n - 1, n - 1, 0, [])
    return tuple(out)


class UnicyclicRepr:
    """A unicyclic graph as its cycle plus one rooted tree per cycle vertex.

    Vertex labels are arbitrary integers (whatever the source graph used);
    `to_graph` relabels to the standard numbering: cycle vertices 0..l-1 in
    cycle order, then tree vertices in preorder per tree.
    """

    def __init__(self, cycle: Sequence[int], children: dict[int, tuple[int, ...]]):
        if len(cycle) < 3:
            raise ValueError("cycle length must be >= 3")
        self.l = len(cycle)
        self.cycle = tuple(cycle)
        self.children = children
        parent: dict[int, int] = {}
        depth: dict[int, int] = {}
        tree_index: dict[int, int] = {}
        tree_nodes: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for i, root in enumerate(self.cycle):
            nodes = []
            stack = [(root, 0)]
            while stack:
                v, d = stack.pop()
                if v in seen:
                    raise ValueError("trees are not vertex-disjoint")
                seen.add(v)
                nodes.append(v)
                depth[v] = d
                tree_index[v] = i
                for c in reversed(children.get(v, ())):
                    parent[c] = v
                    stack.append((c, d + 1))
            tree_nodes.append(tuple(nodes))
        self.parent = parent
        self.depth = depth
        self.tree_index = tree_index
        self.tree_nodes = tuple(tree_nodes)
        self.n = len(seen)

    @property
    def tree_sizes(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.tree_nodes)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for t in self.tree_nodes for v in t)

    def cycle_distance(self, i: int, j: int) -> int:
        d = abs(i - j)
        return min(d, self.l - d)

    def tree_distance(self, a: int, b: int) -> int:
        """Distance between two vertices of the same tree."""
        da, db = self.depth[a], self.depth[b]
        dist = 0
        while da > db:
            a = self.parent[a]
            da -= 1
            dist += 1
        while db > da:
            b = self.parent[b]
            db -= 1
            dist += 1
        while a != b:
            a = self.parent[a]
            b = self.parent[b]
            dist += 2
        return dist

    @cached_property
    def shapes(self) -> tuple[Shape, ...]:
        def build(v: int) -> Shape:
            return canon_shape([build(c) for c in self.children.get(v, ())])

        return tuple(build(root) for root in self.cycle)

    def to_graph(self) -> tuple[Graph, dict[int, int]]:
        """Reassemble with standard numbering; returns (graph, old->new map)."""
        relabel: dict[int, int] = {}
        for i, root in enumerate(self.cycle):
            relabel[root] = i
        nxt = self.l
        for nodes in self.tree_nodes:
            for v in nodes:
                if v not in relabel:
                    relabel[v] = nxt
                    nxt += 1
        edges = [(i, (i + 1) % self.l) for i in range(self.l)]
        for v, p in self.parent.items():
            edges.append((relabel[p], relabel[v]))
        return Graph(self.n, edges), relabel

    def __repr__(self) -> str:
        return f"UnicyclicRepr(l={self.l}, tree_sizes={self.tree_sizes})"


def decompose_unicyclic(g: Graph) -> UnicyclicRepr:
    """Split a connected unicyclic graph into cycle + hanging rooted trees."""
    if g.n < 3:
        raise NotUnicyclicError(f"n={g.n} < 3 admits no cycle")
    if g.m != g.n:
        raise NotUnicyclicError(f"{g.m} edges on {g.n} vertices: not unicyclic")
    g.require_connected()
    # 2-core by stripping degree-1 vertices; what remains is the unique cycle
    deg = [len(a) for a in g.adj]
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    on_cycle = [True] * g.n
    while queue:
        v = queue.popleft()
        on_cycle[v] = False
        deg[v] = 0
        for w in g.adj[v]:
            if deg[w] > 0:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    start = next(v for v in range(g.n) if on_cycle[v])
    cycle = [start]
    prev = -1
    while True:
        nxt = next(w for w in g.adj[cycle[-1]] if on_cycle[w] and w != prev)
        if nxt == start:
            break
        prev = cycle[-1]
        cycle.append(nxt)
    # BFS each hanging tree away from the cycle
    children: dict[int, tuple[int, ...]] = {}
    visited = set(cycle)
    for root in cycle:
        queue = deque([root])
        while queue:
            v = queue.popleft()
            kids = tuple(sorted(w for w in g.adj[v] if w not in visited and not on_cycle[w]))
            if kids:
                children[v] = kids
                visited.update(kids)
                queue.extend(kids)
    return UnicyclicRepr(cycle, children)


def unicyclic_from_shapes(l: int, shapes: Sequence[Shape]) -> UnicyclicRepr:
    """Build the standard-numbered representative for an l-tuple of shapes."""
    if len(shapes) != l:
        raise ValueError("need exactly one shape per cycle vertex")
    children: dict[int, tuple[int, ...]] = {}
    counter = l
    for i, shape in enumerate(shapes):
        stack = [(i, shape)]
        while stack:
            v, s = stack.pop()
            if not s:
                continue
            kids = []
            for child in s:
                kids.append(counter)
                counter += 1
            children[v] = tuple(kids)
            stack.extend(zip(children[v], s))
    return UnicyclicRepr(range(l), children)


def dihedral_min(codes: Sequence[bytes]) -> tuple[bytes, ...]:
    """Lexicographic minimum of an l-tuple over rotations and reflections."""
    l = len(codes)
    seqs = [tuple(codes), tuple(reversed(codes))]
    best = None
    for seq in seqs:
        for k in range(l):
            cand = seq[k:] + seq[:k]
            if best is None or cand < best:
                best = cand
    return best


def canonical_code_from_shapes(l: int, shapes: Sequence[Shape]) -> bytes:
    codes = [shape_code(s) for s in shapes]
    return b"%d:" % l + b"".join(dihedral_min(codes))


def canonical_code(u: UnicyclicRepr) -> bytes:
    """Isomorphism-invariant code: minimal over tree relabelings and the
    2l dihedral symmetries of the cycle."""
    return canonical_code_from_shapes(u.l, u.shapes)


def rooted_shape_of(g: Graph, root: int, blocked: int = -1) -> Shape:
    """Shape of the tree `g` rooted at `root`; `blocked` halts descent."""

    def build(v: int, parent: int) -> Shape:
        return canon_shape(
            [build(w, v) for w in g.adj[v] if w != parent and w != blocked]
        )

    return build(root, -1)


def tree_centers(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = [len(a) for a in g.adj]
    leaves = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            deg[v] = 0
            for w in g.adj[v]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    return sorted(leaves)


def tree_canonical_code(g: Graph) -> bytes:
    """Canonical code for a free (unrooted) tree, via its center(s)."""
    if g.m != g.n - 1:
        raise ValueError("not a tree")
    g.require_connected()
    centers = tree_centers(g)
    if len(centers) == 1:
        return b"T1:" + shape_code(rooted_shape_of(g, centers[0]))
    a, b = centers
    ca = shape_code(rooted_shape_of(g, a, blocked=b))
    cb = shape_code(rooted_shape_of(g, b, blocked=a))
    lo, hi = sorted([ca, cb])
    return b"T2:" + lo + hi


def iter_tree_vertices(u: UnicyclicRepr, i: int) -> Iterator[int]:
    yield from u.tree_nodes[i]
