"""Bounded graded posets: construction, chains, Mobius function, serialization.

Elements are opaque hashable keys held in an indexed table; all operations
speak element indices.  Covers are index pairs (lo, hi) with
rank(hi) = rank(lo) + 1, where ranks are longest-path distances from the
bottom.  Gradedness is validated at build time, never assumed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import CycleDetected, NotBounded, NotComparable, NotGraded


@dataclass(frozen=True)
class Poset:
    """Immutable bounded graded poset.

    Use build_poset() to construct: it validates acyclicity, unique bottom
    and top, and gradedness.  Derived structure (adjacency, reachability)
    is computed lazily and cached on the instance.
    """

    elements: tuple
    covers: frozenset  # of (lo, hi) index pairs
    ranks: tuple
    bottom: int
    top: int

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        """Element key -> index."""
        return {k: i for i, k in enumerate(self.elements)}

    @cached_property
    def up(self) -> tuple:
        """up[i]: sorted indices covering i."""
        lists: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            lists[lo].append(hi)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def down(self) -> tuple:
        """down[i]: sorted indices covered by i."""
        lists: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            lists[hi].append(lo)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def _above(self) -> tuple:
        # above[i] = bitmask of j with i <= j; DP over descending rank
        n = len(self.elements)
        above = [0] * n
        for i in sorted(range(n), key=lambda t: -self.ranks[t]):
            m = 1 << i
            for j in self.up[i]:
                m |= above[j]
            above[i] = m
        return tuple(above)

    @cached_property
    def _below(self) -> tuple:
        n = len(self.elements)
        below = [0] * n
        for i in sorted(range(n), key=lambda t: self.ranks[t]):
            m = 1 << i
            for j in self.down[i]:
                m |= below[j]
            below[i] = m
        return tuple(below)

    @cached_property
    def _mobius_cache(self) -> dict:
        return {}

    def leq(self, x: int, y: int) -> bool:
        return bool((self._above[x] >> y) & 1)

    @property
    def height(self) -> int:
        return self.ranks[self.top]

    def interval(self, x: int, y: int) -> list[int]:
        """Sorted indices of [x, y].  Empty when x is not below y."""
        mask = self._above[x] & self._below[y]
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out

    def proper_elements(self) -> list[int]:
        """All indices except bottom and top."""
        skip = {self.bottom, self.top}
        return [i for i in range(len(self.elements)) if i not in skip]


def build_poset(elements, covers) -> Poset:
    """Validate a cover relation and assemble a Poset.

    elements: iterable of unique hashable keys.
    covers:   iterable of (lo_key, hi_key) pairs.

    Raises CycleDetected, NotBounded, or NotGraded when the data does not
    describe a bounded graded poset.  Ranks are longest-path distances
    from the bottom; a cover whose endpoints differ by more than one rank
    (a transitive edge in disguise) trips NotGraded.
    """
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate element keys")
    index = {k: i for i, k in enumerate(elements)}
    n = len(elements)
    if n == 0:
        raise NotBounded("empty poset")

    pairs = set()
    for lo, hi in covers:
        i, j = index[lo], index[hi]
        if i == j:
            raise CycleDetected(f"self-cover at element {i}")
        pairs.add((i, j))

    up: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for i, j in pairs:
        up[i].append(j)
        indeg[j] += 1

    # Kahn's algorithm; leftover nodes witness a cycle
    order = [i for i in range(n) if indeg[i] == 0]
    head = 0
    indeg_w = list(indeg)
    while head < len(order):
        v = order[head]
        head += 1
        for w in up[v]:
            indeg_w[w] -= 1
            if indeg_w[w] == 0:
                order.append(w)
    if len(order) != n:
        raise CycleDetected("cover relation contains a cycle")

    sources = [i for i in range(n) if indeg[i] == 0]
    sinks = [i for i in range(n) if not up[i]]
    if len(sources) != 1 or len(sinks) != 1:
        raise NotBounded(
            f"{len(sources)} minimal and {len(sinks)} maximal elements")
    bottom, top = sources[0], sinks[0]

    ranks = [0] * n
    for v in order:  # topological; longest path from bottom
        for w in up[v]:
            if ranks[v] + 1 > ranks[w]:
                ranks[w] = ranks[v] + 1
    for i, j in pairs:
        if ranks[j] != ranks[i] + 1:
            raise NotGraded(
                f"cover ({i}, {j}) spans ranks {ranks[i]} -> {ranks[j]}")

    return Poset(elements=elements, covers=frozenset(pairs),
                 ranks=tuple(ranks), bottom=bottom, top=top)


def maximal_chains(p: Poset, x: int | None = None, y: int | None = None) -> list[tuple[int, ...]]:
    """All saturated chains from x to y, in lexicographic index order.

    Defaults to the full interval [bottom, top].  Raises NotComparable
    when x is not below y.
    """
    if x is None:
        x = p.bottom
    if y is None:
        y = p.top
    if not p.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    out: list[tuple[int, ...]] = []
    path = [x]

    def walk(v: int) -> None:
        if v == y:
            out.append(tuple(path))
            return
        for w in p.up[v]:
            if p.leq(w, y):
                path.append(w)
                walk(w)
                path.pop()

    walk(x)
    return out


def mobius(p: Poset, x: int, y: int) -> int:
    """Mobius function mu(x, y), by the defining recursion.

    mu(x, x) = 1 and sum of mu(x, z) over x <= z <= y vanishes for x < y.
    Values for a fixed lower endpoint are computed in one sweep and cached
    on the poset.
    """
    if not p.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    cache = p._mobius_cache
    if x not in cache:
        zs = sorted(_mask_indices(p._above[x]), key=lambda z: p.ranks[z])
        mu: dict[int, int] = {}
        for z in zs:
            if z == x:
                mu[z] = 1
                continue
            below_z = p._below[z]
            mu[z] = -sum(v for w, v in mu.items() if (below_z >> w) & 1)
        cache[x] = mu
    return cache[x][y]


def _mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# ── serialization ────────────────────────────────────────────────────────

def poset_to_json(p: Poset, edge_labels: dict | None = None) -> str:
    """JSON document with element keys (via str), covers, bottom and top.

    With edge_labels, covers become objects carrying a "label" field.
    """
    covers = sorted(p.covers)
    if edge_labels is None:
        cov = [[lo, hi] for lo, hi in covers]
    else:
        cov = [{"lo": lo, "hi": hi, "label": list(edge_labels[(lo, hi)])}
               for lo, hi in covers]
    doc = {
        "elements": [str(k) for k in p.elements],
        "covers": cov,
        "bottom": p.bottom,
        "top": p.top,
    }
    return json.dumps(doc, sort_keys=True)


def poset_from_json(text: str) -> Poset:
    """Rebuild (and re-validate) a poset from poset_to_json output.

    Element keys come back as strings.  Labeled covers are accepted;
    their labels are ignored here.
    """
    doc = json.loads(text)
    elements = list(doc["elements"])
    covers = []
    for c in doc["covers"]:
        if isinstance(c, dict):
            lo, hi = c["lo"], c["hi"]
        else:
            lo, hi = c
        covers.append((elements[lo], elements[hi]))
    p = build_poset(elements, covers)
    if p.bottom != doc["bottom"] or p.top != doc["top"]:
        raise ValueError("declared bottom/top disagree with cover relation")
    return p


def poset_to_dot(p: Poset, edge_labels: dict | None = None, name: str = "poset") -> str:
    """GraphViz DOT text for the Hasse diagram, bottom drawn lowest."""
    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace('"', '\\"')

    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, k in enumerate(p.elements):
        lines.append(f'  n{i} [label="{esc(str(k))}"];')
    for lo, hi in sorted(p.covers):
        if edge_labels is not None:
            lines.append(f'  n{lo} -> n{hi} [label="{esc(str(edge_labels[(lo, hi)]))}"];')
        else:
            lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
