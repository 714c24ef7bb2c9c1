"""Bitmask representation of small simple graphs.

Vertices are the integers 0..n-1 and every vertex set in this package is a
plain int bitmask, so set algebra is a handful of machine instructions
(&, |, ^, bit_count). The hard cap of 63 vertices keeps masks inside one
word; all solvers downstream are exhaustive desk-scale methods, so nothing
here tries to scale past that.

The module also owns the interchange codecs (graph6 and a tiny edge-list
text format), the named graph families used throughout, and isomorph-free
enumeration of small graphs and trees.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

MAX_N = 63

#: enumeration / canonical-labeling cap (exhaustive permutation search)
CANON_MAX_N = 8
TREE_ENUM_MAX_N = 14


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def bits(mask: int):
    """Yield the vertices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_tuple(mask: int) -> tuple:
    return tuple(bits(mask))


class Graph:
    """Immutable simple undirected graph; adj[v] is the open neighborhood mask."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"vertex count {n} outside 1..{MAX_N}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"neighbor of {v} out of range")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask."""
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def closed_union(self, mask: int) -> int:
        """N[X] for a vertex-set mask X."""
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# construction and codecs


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from unordered vertex pairs; loops and duplicates are errors."""
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _upper_bits(g: Graph) -> int:
    """Upper-triangle adjacency bits in graph6 order (column-major, MSB first)."""
    val = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            val = val << 1 | (col >> i & 1)
    return val


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    total = n * (n - 1) // 2
    val = _upper_bits(g)
    nchunks = (total + 5) // 6
    val <<= nchunks * 6 - total
    body = [chr((val >> 6 * (nchunks - 1 - i) & 63) + 63) for i in range(nchunks)]
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 line")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} at offset {off} outside graph6 range 63..126")
    if s[0] == "~":
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1 or n > MAX_N:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_N}")
    total = n * (n - 1) // 2
    nchunks = (total + 5) // 6
    if len(body) != nchunks:
        raise GraphFormatError(f"bad length: expected {nchunks} data bytes for n={n}, got {len(body)}")
    val = 0
    for ch in body:
        val = val << 6 | (ord(ch) - 63)
    pad = nchunks * 6 - total
    if val & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    val >>= pad
    adj = [0] * n
    pos = total
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if val >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def parse_edge_list(text: str) -> Graph:
    """Read the "n m" header line then m lines "u v" (0-indexed)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError('edge-list header must be "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad edge-list header: {exc}") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1} edge lines")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f'line {lineno}: expected "u v"')
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# named families and graph operations


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("both sides must be nonempty")
    return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def star(r: int) -> Graph:
    """K_{1,r}: center 0 with r leaves."""
    if r < 0:
        raise ValueError("negative leaf count")
    return from_edge_list(r + 1, [(0, i) for i in range(1, r + 1)])


def kmn_minus_matching(m: int, n: int, k: int) -> Graph:
    """K_{m,n} with a matching of size k removed (vertex i of A matched to i of B)."""
    if not 0 <= k <= min(m, n):
        raise ValueError("matching size exceeds the smaller side")
    edges = [(a, m + b) for a in range(m) for b in range(n) if not (a == b < k)]
    return from_edge_list(m + n, edges)


def blown_up_c6(sizes) -> Graph:
    """Replace each vertex of C6 by a clique, joining consecutive cliques completely."""
    sizes = list(sizes)
    if len(sizes) != 6 or any(s < 1 for s in sizes):
        raise ValueError("need six positive group sizes")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    groups = [list(range(offsets[i], offsets[i + 1])) for i in range(6)]
    edges = []
    for grp in groups:
        edges.extend(combinations(grp, 2))
    for i in range(6):
        for u in groups[i]:
            for v in groups[(i + 1) % 6]:
                edges.append((u, v))
    return from_edge_list(offsets[-1], edges)


def stems_with_leaves_tree(k: int) -> Graph:
    """Path on 3k-4 vertices with one new leaf joined to each stem."""
    if k < 3:
        raise ValueError("defined for k >= 3")
    m = 3 * k - 4
    edges = [(i, i + 1) for i in range(m - 1)]
    # stems of a path on >= 5 vertices are the neighbors of its two endpoints
    edges.append((1, m))
    edges.append((m - 2, m + 1))
    return from_edge_list(m + 2, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a,x) maps to index a*|H|+x; edges per the box-product rule."""
    n = g.n * h.n
    adj = [0] * n
    for a in range(g.n):
        for x in range(h.n):
            i = a * h.n + x
            row = 0
            for y in bits(h.adj[x]):
                row |= 1 << (a * h.n + y)
            for b in bits(g.adj[a]):
                row |= 1 << (b * h.n + x)
            adj[i] = row
    return Graph(n, adj)


def corona(g: Graph) -> Graph:
    """Attach one new pendant leaf to every vertex."""
    n = g.n
    adj = list(g.adj) + [0] * n
    for v in range(n):
        adj[v] |= 1 << (n + v)
        adj[n + v] = 1 << v
    return Graph(2 * n, adj)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~(g.adj[v] | 1 << v) for v in range(g.n)])


def induced_subgraph(g: Graph, mask: int):
    """Subgraph on the mask's vertices, relabeled densely; returns (graph, old labels)."""
    verts = vertex_tuple(mask)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), adj), verts


def relabel(g: Graph, perm) -> Graph:
    """Relabeled copy where old vertex v becomes perm[v]."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, adj)


def components(g: Graph):
    """Vertex masks of the connected components, ordered by smallest member."""
    out = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def mask_connected(g: Graph, mask: int) -> bool:
    """Does the mask induce a connected subgraph (empty mask is False)."""
    if mask == 0:
        return False
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def is_bipartite(g: Graph):
    """Two-coloring (side_a_mask, side_b_mask) or None; component roots go in side a."""
    color = {}
    a = b = 0
    for root in range(g.n):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if u not in color:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    for v, c in color.items():
        if c == 0:
            a |= 1 << v
        else:
            b |= 1 << v
    return a, b


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                return False
    return True


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


# ---------------------------------------------------------------------------
# canonical labeling (exhaustive minimization with prefix pruning)


def _min_label_order(g: Graph):
    """Permutation (new label -> old vertex) minimizing the graph6 bit string."""
    n = g.n
    adj = g.adj
    total = n * (n - 1) // 2
    m = g.m
    if n <= 1 or m == 0 or m == total:
        return list(range(n))
    best_val = None
    best_perm = None
    placed = []

    def rec(used, val, nbits):
        nonlocal best_val, best_perm
        depth = len(placed)
        if depth == n:
            if best_val is None or val < best_val:
                best_val = val
                best_perm = placed.copy()
            return
        cand = []
        for v in range(n):
            if used >> v & 1:
                continue
            block = 0
            av = adj[v]
            for p in placed:
                block = block << 1 | (av >> p & 1)
            cand.append((block, v))
        cand.sort()
        nb = nbits + depth
        for block, v in cand:
            nv = val << depth | block
            if best_val is not None and nv > best_val >> (total - nb):
                break  # candidates are sorted, so the rest are no better
            placed.append(v)
            rec(used | 1 << v, nv, nb)
            placed.pop()

    rec(0, 0, 0)
    return best_perm


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> str:
    """graph6 string of the lexicographically smallest relabeling of g."""
    if g.n > CANON_MAX_N:
        raise ValueError(f"canonical labeling is exhaustive; capped at n <= {CANON_MAX_N}")
    order = _min_label_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return to_graph6(relabel(g, perm))


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# isomorph-free enumeration


_GRAPH_ENUM_CACHE: dict[int, list] = {}


def enumerate_nonisomorphic(n: int):
    """All graphs on n vertices up to isomorphism, sorted by canonical graph6."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > CANON_MAX_N:
        raise ValueError(
            f"enumeration capped at n <= {CANON_MAX_N}; supply external graph6 files for larger orders"
        )
    if n in _GRAPH_ENUM_CACHE:
        return list(_GRAPH_ENUM_CACHE[n])
    if n == 1:
        result = [Graph(1, [0])]
    else:
        forms = set()
        for g in enumerate_nonisomorphic(n - 1):
            base = list(g.adj) + [0]
            for subset in range(1 << (n - 1)):
                adj = base.copy()
                adj[n - 1] = subset
                for u in bits(subset):
                    adj[u] |= 1 << (n - 1)
                forms.add(canonical_form(Graph(n, adj)))
        result = [parse_graph6(s) for s in sorted(forms)]
    _GRAPH_ENUM_CACHE[n] = result
    return list(result)


def graphs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from enumerate_nonisomorphic(n)


def _tree_centers(g: Graph):
    """The 1 or 2 middle vertices obtained by repeatedly stripping leaves."""
    alive = g.full_mask
    count = g.n
    while count > 2:
        drop = 0
        for v in bits(alive):
            if (g.adj[v] & alive).bit_count() == 1:
                drop |= 1 << v
        alive &= ~drop
        count = alive.bit_count()
    return vertex_tuple(alive)


def _ahu(g: Graph, v: int, parent: int) -> str:
    kids = sorted(_ahu(g, u, v) for u in bits(g.adj[v]) if u != parent)
    return "(" + "".join(kids) + ")"


def tree_key(g: Graph) -> str:
    """Canonical isomorphism key for trees (rooted encoding at the centers)."""
    if not is_tree(g):
        raise ValueError("tree_key requires a tree")
    return min(_ahu(g, c, -1) for c in _tree_centers(g))


_TREE_ENUM_CACHE: dict[int, list] = {}


def enumerate_trees(n: int):
    """All trees on n vertices up to isomorphism, in canonical-key order."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > TREE_ENUM_MAX_N:
        raise ValueError(f"tree enumeration capped at n <= {TREE_ENUM_MAX_N}")
    if n in _TREE_ENUM_CACHE:
        return list(_TREE_ENUM_CACHE[n])
    if n == 1:
        result = [Graph(1, [0])]
    else:
        reps = {}
        for t in enumerate_trees(n - 1):
            for v in range(t.n):
                adj = list(t.adj) + [1 << v]
                adj[v] |= 1 << (n - 1)
                child = Graph(n, adj)
                reps.setdefault(tree_key(child), child)
        result = [reps[k] for k in sorted(reps)]
    _TREE_ENUM_CACHE[n] = result
    return list(result)


def trees_up_to(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)
