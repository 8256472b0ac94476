"""Shared fixtures and independent oracles.

The oracles recompute quantities the library also computes, by methods
deliberately unlike the library's: maximal chains by powerset filtering,
the Mobius function by alternating chain counts, atom ranks by sorting
the full list of words.  They are slow and only fit tiny inputs, which
is the point.
"""
from itertools import combinations, permutations

import pytest

from vpshell import vector_partition_poset


def chains_by_powerset(p, x=None, y=None):
    """Maximal chains of [x, y] found by testing every element subset.

    Exponential in poset size.  Keep below ~18 elements.
    """
    if x is None:
        x = p.bottom
    if y is None:
        y = p.top
    inside = [t for t in range(len(p.elements))
              if p.leq(x, t) and p.leq(t, y)]
    assert len(inside) <= 18, "powerset oracle got an oversized interval"
    found = []
    for r in range(1, len(inside) + 1):
        for sub in combinations(inside, r):
            if x not in sub or y not in sub:
                continue
            chain = sorted(sub, key=lambda t: p.ranks[t])
            if any(not p.leq(a, b) for a, b in zip(chain, chain[1:])):
                continue
            # saturated: consecutive ranks
            if any(p.ranks[b] - p.ranks[a] != 1
                   for a, b in zip(chain, chain[1:])):
                continue
            found.append(tuple(chain))
    return sorted(found)


def hall_mobius(p, x, y):
    """Mobius value as the alternating sum over chain lengths.

    mu(x, y) = sum over ell of (-1)^ell (number of chains
    x = z_0 < z_1 < ... < z_ell = y), computed by a DP on the interval.
    """
    if x == y:
        return 1
    inside = sorted((t for t in range(len(p.elements))
                     if p.leq(x, t) and p.leq(t, y)),
                    key=lambda t: p.ranks[t])
    # signed[t]: alternating-sum contribution of chains from x to t
    signed = {x: -1}
    for t in inside:
        if t == x:
            continue
        signed[t] = -sum(signed[u] for u in inside
                         if u in signed and u != t and p.leq(u, t))
    return -signed[y]


def sorted_word_rank(word, n, s):
    """1-based rank of an atom word among all (n!)^s words, by sorting.

    Builds the complete list.  Fine for n! ** s up to a few tens of
    thousands.
    """
    perms = sorted(permutations(range(1, n + 1)))
    words = [()]
    for _ in range(s):
        words = [w + q for w in words for q in perms]
    return sorted(words).index(tuple(word)) + 1


@pytest.fixture(scope="session")
def p2s1():
    return vector_partition_poset(2, 1)


@pytest.fixture(scope="session")
def p3s1():
    return vector_partition_poset(3, 1)


@pytest.fixture(scope="session")
def p4s1():
    return vector_partition_poset(4, 1)


@pytest.fixture(scope="session")
def p2s2():
    return vector_partition_poset(2, 2)


@pytest.fixture(scope="session")
def p3s2():
    return vector_partition_poset(3, 2)
