"""Vector partitions: set partitions of {1..n} carrying s aligned labelings.

An element is a pair (P, w) where P partitions {1..n} into blocks and,
for each labeling index i in 1..s, w^i assigns to every block a label set
of the same cardinality; the label sets of each index themselves
partition {1..n}.  A formal bottom element sits below the n-block
(discrete) elements.  The order: x <= y when every block of y is a union
of blocks of x and each label of y is the union of the matching labels.

Canonical form everywhere: blocks sorted by minimum, every set stored as
an ascending tuple, labels aligned positionally with blocks.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .errors import (BottomHasNoAtom, DimensionMismatch, InvalidPartition,
                     MalformedWord, ResourceLimit, SizeMismatch)
from .poset import Poset, build_poset


@dataclass(frozen=True)
class VectorPartition:
    """One element of the labeled-partition poset (or its formal bottom).

    blocks: tuple of ascending int tuples, ordered by block minimum.
    labels: labels[i][b] is the label set (ascending tuple) that labeling
    index i+1 assigns to blocks[b].  The bottom carries empty blocks and
    labels and compares below everything of the same (n, s).
    """

    n: int
    s: int
    blocks: tuple = ()
    labels: tuple = ()
    is_bottom: bool = False

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        """0 for the bottom, n - #blocks + 1 otherwise."""
        return 0 if self.is_bottom else self.n - self.num_blocks + 1

    @property
    def is_atom(self) -> bool:
        return not self.is_bottom and all(len(b) == 1 for b in self.blocks)

    @property
    def sort_key(self):
        return (self.rank, self.blocks, self.labels)

    def __str__(self) -> str:
        return format_element(self)


def bottom_element(n: int, s: int) -> VectorPartition:
    return VectorPartition(n=n, s=s, is_bottom=True)


def top_element(n: int, s: int) -> VectorPartition:
    full = tuple(range(1, n + 1))
    return VectorPartition(n=n, s=s, blocks=(full,),
                           labels=tuple((full,) for _ in range(s)))


def canonicalize(n: int, s: int, blocks, labels) -> VectorPartition:
    """Validating constructor from raw nested iterables.

    labels[i] must align with blocks positionally.  Raises
    InvalidPartition when blocks or any labeling fail to partition
    {1..n}, SizeMismatch when a label's cardinality differs from its
    block's.  Idempotent on already-canonical data.
    """
    blk = [tuple(sorted(b)) for b in blocks]
    labs = [[tuple(sorted(l)) for l in labels[i]] for i in range(len(labels))]
    if len(labs) != s:
        raise SizeMismatch(f"expected {s} labelings, got {len(labs)}")
    _check_partition(n, blk, "blocks")
    for i, lab in enumerate(labs):
        if len(lab) != len(blk):
            raise SizeMismatch(
                f"labeling {i + 1} has {len(lab)} sets for {len(blk)} blocks")
        for b, l in zip(blk, lab):
            if len(l) != len(b):
                raise SizeMismatch(
                    f"label {l} has size {len(l)}, block {b} has size {len(b)}")
        _check_partition(n, lab, f"labeling {i + 1}")
    order = sorted(range(len(blk)), key=lambda t: blk[t][0])
    return VectorPartition(
        n=n, s=s,
        blocks=tuple(blk[t] for t in order),
        labels=tuple(tuple(lab[t] for t in order) for lab in labs))


def _check_partition(n: int, sets, what: str) -> None:
    seen: set[int] = set()
    total = 0
    for b in sets:
        if not b:
            raise InvalidPartition(f"{what}: empty set")
        total += len(b)
        seen.update(b)
    if total != n or seen != set(range(1, n + 1)):
        raise InvalidPartition(f"{what} do not partition 1..{n}")


# ── serialization ────────────────────────────────────────────────────────

def format_element(v: VectorPartition) -> str:
    """Canonical text form: blocks, then one labeling per '|' separator."""
    if v.is_bottom:
        return "BOTTOM"

    def part(sets) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in sets)

    return "|".join([part(v.blocks)] + [part(lab) for lab in v.labels])


_SET_RE = re.compile(r"\{([0-9,]*)\}")


def parse_element(text: str, n: int, s: int) -> VectorPartition:
    """Inverse of format_element; validates through canonicalize."""
    text = text.strip()
    if text == "BOTTOM":
        return bottom_element(n, s)
    parts = text.split("|")
    if len(parts) != s + 1:
        raise SizeMismatch(f"expected blocks plus {s} labelings")

    def sets_of(chunk: str):
        pieces = _SET_RE.findall(chunk)
        if "".join("{" + p + "}" for p in pieces) != chunk.replace(" ", ""):
            raise InvalidPartition(f"cannot parse {chunk!r}")
        return [tuple(int(x) for x in p.split(",") if x) for p in pieces]

    blocks = sets_of(parts[0])
    labels = [sets_of(c) for c in parts[1:]]
    return canonicalize(n, s, blocks, labels)


def element_to_json(v: VectorPartition) -> str:
    doc = {"n": v.n, "s": v.s,
           "blocks": [list(b) for b in v.blocks],
           "labels": [[list(l) for l in lab] for lab in v.labels]}
    return json.dumps(doc, sort_keys=True)


def element_from_json(text: str) -> VectorPartition:
    """Parse an element given either as the JSON document form or as the
    canonical string form.  Dimensions of a canonical string are inferred
    from the text, so a bare "BOTTOM" (which fixes neither n nor s) is
    rejected here; use parse_element or bottom_element for that case."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = text
    if isinstance(doc, str):
        stripped = doc.strip()
        if stripped == "BOTTOM":
            raise SizeMismatch("BOTTOM does not determine n and s")
        parts = stripped.split("|")
        n = sum(1 for grp in _SET_RE.findall(parts[0])
                for x in grp.split(",") if x)
        return parse_element(stripped, n, len(parts) - 1)
    if not doc.get("blocks") and not doc.get("labels"):
        return bottom_element(doc["n"], doc["s"])
    return canonicalize(doc["n"], doc["s"], doc["blocks"], doc["labels"])


# ── order relation ───────────────────────────────────────────────────────

def _check_dims(x: VectorPartition, y: VectorPartition) -> None:
    if (x.n, x.s) != (y.n, y.s):
        raise DimensionMismatch(
            f"({x.n}, {x.s}) vs ({y.n}, {y.s})")


def is_leq(x: VectorPartition, y: VectorPartition) -> bool:
    """True when every block of y is a union of blocks of x and each of
    y's labels is the union of the matching labels of those blocks."""
    _check_dims(x, y)
    if x.is_bottom:
        return True
    if y.is_bottom:
        return False
    if x.num_blocks < y.num_blocks:
        return False
    for bi, by in enumerate(y.blocks):
        target = set(by)
        parts = [t for t, bx in enumerate(x.blocks) if set(bx) <= target]
        if sum(len(x.blocks[t]) for t in parts) != len(by):
            return False
        for i in range(x.s):
            merged: set[int] = set()
            for t in parts:
                merged.update(x.labels[i][t])
            if merged != set(y.labels[i][bi]):
                return False
    return True


def is_cover(x: VectorPartition, y: VectorPartition) -> bool:
    """y covers x: merge exactly two blocks of x (labels componentwise),
    or x is the bottom and y has only singleton blocks."""
    _check_dims(x, y)
    if x.is_bottom:
        return not y.is_bottom and y.is_atom
    if y.is_bottom:
        return False
    return y.num_blocks == x.num_blocks - 1 and is_leq(x, y)


def merge_blocks(v: VectorPartition, a: int, b: int) -> VectorPartition:
    """The upper cover of v obtained by merging blocks at positions a, b."""
    if v.is_bottom or a == b:
        raise ValueError("need two distinct blocks of a non-bottom element")
    keep = [t for t in range(v.num_blocks) if t not in (a, b)]
    records = [(v.blocks[t], tuple(v.labels[i][t] for i in range(v.s)))
               for t in keep]
    nb = tuple(sorted(v.blocks[a] + v.blocks[b]))
    nl = tuple(tuple(sorted(v.labels[i][a] + v.labels[i][b]))
               for i in range(v.s))
    records.append((nb, nl))
    records.sort(key=lambda r: r[0][0])
    return VectorPartition(
        n=v.n, s=v.s,
        blocks=tuple(r[0] for r in records),
        labels=tuple(tuple(r[1][i] for r in records) for i in range(v.s)))


def upper_covers(v: VectorPartition) -> list[VectorPartition]:
    if v.is_bottom:
        raise ValueError("atoms of the bottom come from enumeration")
    return [merge_blocks(v, a, b)
            for a in range(v.num_blocks) for b in range(a + 1, v.num_blocks)]


# ── enumeration ──────────────────────────────────────────────────────────

def set_partitions(n: int) -> list[tuple]:
    """All set partitions of {1..n} via restricted-growth strings.

    Blocks come out ordered by minimum with ascending entries, so each
    partition is already in canonical form.
    """
    out: list[tuple] = []
    a = [0] * n

    def rec(k: int, mx: int) -> None:
        if k == n:
            nblocks = mx + 1
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for pos, v in enumerate(a):
                blocks[v].append(pos + 1)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for v in range(mx + 2):
            a[k] = v
            rec(k + 1, max(mx, v))

    rec(1, 0)
    return out


def _integer_partitions(n: int, least: int = 1):
    if n == 0:
        yield ()
        return
    for first in range(least, n + 1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def element_count(n: int, s: int) -> int:
    """|poset|, bottom included, computed without enumeration."""
    total = 1
    for typ in _integer_partitions(n):
        mult: dict[int, int] = {}
        for j in typ:
            mult[j] = mult.get(j, 0) + 1
        denom_blocks = 1
        for j, m in mult.items():
            denom_blocks *= factorial(j) ** m * factorial(m)
        denom_labels = 1
        for j, m in mult.items():
            denom_labels *= factorial(j) ** m
        npart = factorial(n) // denom_blocks
        nlab = factorial(n) // denom_labels
        total += npart * nlab ** s
    return total


def maximal_chain_count(n: int, s: int) -> int:
    """Number of bottom-to-top maximal chains, computed arithmetically:
    (n!)^s atoms, each with n!(n-1)!/2^(n-1) chains above it."""
    return factorial(n) ** s * (factorial(n) * factorial(n - 1)) // 2 ** (n - 1)


def _label_assignments(sizes: tuple, universe: tuple):
    """Ordered splits of universe into sets of the given sizes, lex order."""
    if not sizes:
        yield ()
        return
    first = sizes[0]
    for c in combinations(universe, first):
        chosen = set(c)
        rest = tuple(x for x in universe if x not in chosen)
        for tail in _label_assignments(sizes[1:], rest):
            yield (c,) + tail


def enumerate_elements(n: int, s: int,
                       max_elements: int | None = None) -> list[VectorPartition]:
    """Every element including the bottom and the top, canonically ordered
    by (rank, blocks, labels).  Raises ResourceLimit when the arithmetic
    element count exceeds max_elements."""
    count = element_count(n, s)
    if max_elements is not None and count > max_elements:
        raise ResourceLimit(
            f"poset has {count} elements, budget is {max_elements}")
    out = [bottom_element(n, s)]
    full = tuple(range(1, n + 1))
    for blocks in set_partitions(n):
        sizes = tuple(len(b) for b in blocks)
        assignments = list(_label_assignments(sizes, full))
        for labs in product(assignments, repeat=s):
            out.append(VectorPartition(n=n, s=s, blocks=blocks, labels=labs))
    out.sort(key=lambda v: v.sort_key)
    return out


def vector_partition_poset(n: int, s: int,
                           max_elements: int | None = None) -> Poset:
    """The bounded poset of all vector partitions, built and validated.

    Keys are VectorPartition values; covers join each non-bottom element
    to its two-block merges, and the bottom to every atom.
    """
    elements = enumerate_elements(n, s, max_elements=max_elements)
    covers = []
    bottom = elements[0]
    for v in elements:
        if v.is_bottom:
            continue
        if v.is_atom:
            covers.append((bottom, v))
        for w in upper_covers(v):
            covers.append((v, w))
    return build_poset(elements, covers)


def set_partition_lattice(n: int) -> Poset:
    """The ordinary partition lattice: keys are canonical partitions,
    ordered by refinement, discrete partition at the bottom."""
    elements = sorted(set_partitions(n), key=lambda p: (-len(p), p))
    covers = []
    for blocks in elements:
        m = len(blocks)
        for a in range(m):
            for b in range(a + 1, m):
                keep = [blocks[t] for t in range(m) if t not in (a, b)]
                keep.append(tuple(sorted(blocks[a] + blocks[b])))
                keep.sort(key=lambda t: t[0])
                covers.append((blocks, tuple(keep)))
    return build_poset(elements, covers)


# ── atom words ───────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def atom_word(v: VectorPartition) -> tuple:
    """Word of the lexicographically least atom below v.

    Position (i-1)*n + k holds the value labeling index i gives element k:
    ascending block entries pair with ascending label entries.  Length n*s.
    """
    if v.is_bottom:
        raise BottomHasNoAtom("the formal bottom has no atom below it")
    w = [0] * (v.n * v.s)
    for bi, block in enumerate(v.blocks):
        for i in range(v.s):
            for k, j in zip(block, v.labels[i][bi]):
                w[i * v.n + (k - 1)] = j
    return tuple(w)


def word_to_atom(word, n: int, s: int) -> VectorPartition:
    """The atom whose word this is (singleton blocks, singleton labels)."""
    check_atom_word(word, n, s)
    blocks = tuple((k,) for k in range(1, n + 1))
    labels = tuple(tuple((word[i * n + k],) for k in range(n))
                   for i in range(s))
    return VectorPartition(n=n, s=s, blocks=blocks, labels=labels)


def check_atom_word(word, n: int, s: int) -> None:
    if len(word) != n * s:
        raise MalformedWord(f"length {len(word)}, expected {n * s}")
    for i in range(s):
        chunk = word[i * n:(i + 1) * n]
        if sorted(chunk) != list(range(1, n + 1)):
            raise MalformedWord(f"segment {i + 1} is not a permutation of 1..{n}")


def perm_lex_rank(perm) -> int:
    """0-based rank of perm among all permutations of its values."""
    n = len(perm)
    r = 0
    for idx, v in enumerate(perm):
        smaller = sum(1 for u in perm[idx + 1:] if u < v)
        r += smaller * factorial(n - 1 - idx)
    return r


def atom_lex_rank(word, n: int, s: int) -> int:
    """1-based position of an atom word in the lexicographic order of all
    (n!)^s atom words, via the factorial number system: no enumeration."""
    check_atom_word(word, n, s)
    r = 0
    for i in range(s):
        r = r * factorial(n) + perm_lex_rank(word[i * n:(i + 1) * n])
    return r + 1
