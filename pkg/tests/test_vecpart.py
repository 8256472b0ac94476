"""Labeled partitions: construction, order, enumeration, atom words."""
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from vpshell import (
    InvalidPartition,
    MalformedWord,
    ResourceLimit,
    SizeMismatch,
    atom_lex_rank,
    atom_word,
    bottom_element,
    canonicalize,
    check_atom_word,
    element_count,
    element_from_json,
    element_to_json,
    enumerate_elements,
    format_element,
    is_cover,
    is_leq,
    maximal_chain_count,
    maximal_chains,
    mobius,
    parse_element,
    perm_lex_rank,
    set_partition_lattice,
    set_partitions,
    top_element,
    upper_covers,
    vector_partition_poset,
    word_to_atom,
)
from conftest import sorted_word_rank


def test_canonicalize_sorts_blocks_with_labels():
    v = canonicalize(3, 1, [(2, 3), (1,)], [[(1, 3), (2,)]])
    assert v.blocks == ((1,), (2, 3))
    assert v.labels == (((2,), (1, 3)),)


def test_canonicalize_is_idempotent():
    v = canonicalize(4, 2, [(1, 4), (2, 3)],
                     [[(2, 4), (1, 3)], [(1, 2), (3, 4)]])
    w = canonicalize(v.n, v.s, v.blocks, v.labels)
    assert v == w


def test_canonicalize_rejects_bad_partition():
    with pytest.raises(InvalidPartition):
        canonicalize(3, 1, [(1, 2)], [[(1, 2)]])          # 3 missing
    with pytest.raises(InvalidPartition):
        canonicalize(3, 1, [(1, 2), (2, 3)], [[(1, 2), (2, 3)]])
    with pytest.raises(InvalidPartition):
        canonicalize(3, 1, [(1, 2, 3)], [[(1, 2, 4)]])    # label not in {1..3}


def test_canonicalize_rejects_size_mismatch():
    with pytest.raises(SizeMismatch):
        canonicalize(3, 1, [(1, 2), (3,)], [[(1,), (2, 3)]])
    with pytest.raises(SizeMismatch):
        canonicalize(3, 2, [(1, 2, 3)], [[(1, 2, 3)]])    # one labeling short


def test_rank_and_atoms():
    assert bottom_element(3, 1).rank == 0
    atom = canonicalize(3, 1, [(1,), (2,), (3,)], [[(2,), (3,), (1,)]])
    assert atom.rank == 1 and atom.is_atom
    assert top_element(3, 1).rank == 3
    assert not top_element(3, 1).is_atom


def test_format_parse_roundtrip():
    v = canonicalize(4, 2, [(1, 4), (2, 3)],
                     [[(2, 4), (1, 3)], [(1, 2), (3, 4)]])
    assert parse_element(format_element(v), 4, 2) == v
    b = bottom_element(4, 2)
    assert parse_element(format_element(b), 4, 2) == b


def test_element_json_roundtrip():
    v = canonicalize(3, 1, [(1, 3), (2,)], [[(1, 2), (3,)]])
    assert element_from_json(element_to_json(v)) == v


def test_element_from_json_accepts_canonical_text():
    v = canonicalize(6, 2,
                     [(1, 4, 6), (2, 3), (5,)],
                     [[(2, 3, 5), (1, 4), (6,)],
                      [(1, 2, 6), (3, 5), (4,)]])
    assert element_from_json(format_element(v)) == v
    with pytest.raises(SizeMismatch):
        element_from_json("BOTTOM")  # dimensions are not inferable


def test_is_leq_refinement():
    x = canonicalize(3, 1, [(1,), (2,), (3,)], [[(2,), (1,), (3,)]])
    y = canonicalize(3, 1, [(1, 2), (3,)], [[(1, 2), (3,)]])
    z = canonicalize(3, 1, [(1, 2), (3,)], [[(1, 3), (2,)]])
    assert is_leq(x, y)
    assert not is_leq(x, z)      # blocks fit but label unions differ
    assert is_leq(bottom_element(3, 1), x)
    assert is_leq(x, x)
    assert not is_leq(y, x)


def test_is_cover_and_upper_covers():
    x = canonicalize(3, 1, [(1,), (2,), (3,)], [[(2,), (1,), (3,)]])
    ups = upper_covers(x)
    assert len(ups) == 3
    for u in ups:
        assert is_cover(x, u)
    assert is_cover(bottom_element(3, 1), x)
    assert not is_cover(x, top_element(3, 1))


def test_set_partitions_counts():
    # Bell numbers 1, 2, 5, 15, 52
    for n, bell in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)]:
        assert len(set_partitions(n)) == bell


def test_enumerate_counts_match_formula():
    for n, s in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)]:
        els = enumerate_elements(n, s)
        assert len(els) == element_count(n, s)
        atoms = [e for e in els if e.is_atom]
        assert len(atoms) == factorial(n) ** s


def test_enumerate_known_sizes():
    assert element_count(2, 2) == 6  # bottom + 4 atoms + top
    assert element_count(3, 1) == 17
    assert element_count(4, 1) == 132
    assert element_count(3, 2) == 65
    assert element_count(4, 2) == 1614


def test_single_ground_element_gives_two_chain():
    for s in (1, 2, 3):
        els = enumerate_elements(1, s)
        assert len(els) == 2
        assert els[0].is_bottom and els[1] == top_element(1, s)
        p = vector_partition_poset(1, s)
        assert len(p.elements) == 2 and p.leq(p.bottom, p.top)


def test_enumerate_budget():
    with pytest.raises(ResourceLimit):
        enumerate_elements(9, 3, max_elements=1000)


def test_maximal_chain_count_formula(p3s1, p3s2):
    assert maximal_chain_count(3, 1) == 18 == len(maximal_chains(p3s1))
    assert maximal_chain_count(3, 2) == 108 == len(maximal_chains(p3s2))
    assert maximal_chain_count(4, 1) == 432


def test_poset_mobius_sign(p2s1, p3s1, p4s1, p2s2, p3s2):
    # |mu| with sign (-1)^n at the full interval
    for n, p, mu in [(2, p2s1, 1), (3, p3s1, -4), (4, p4s1, 33),
                     (2, p2s2, 3), (3, p3s2, -46)]:
        assert mobius(p, p.bottom, p.top) == mu
        assert mu == (-1) ** n * abs(mu)


def test_atom_word_anchor():
    v = canonicalize(8, 1, [(1, 4, 8), (2, 3, 7), (5, 6)],
                     [[(2, 3, 7), (1, 5, 6), (4, 8)]])
    assert atom_word(v) == (2, 1, 5, 3, 4, 8, 6, 7)


def test_atom_word_of_atom_is_its_own_word():
    atom = canonicalize(3, 2, [(1,), (2,), (3,)],
                        [[(2,), (3,), (1,)], [(3,), (1,), (2,)]])
    assert atom_word(atom) == (2, 3, 1, 3, 1, 2)


def test_atom_word_is_lex_least_atom_below():
    # A(x) is the word of the earliest atom below x, and that atom really
    # does sit below x.  Exhaustive over the whole small range.
    for n in (1, 2, 3, 4):
        for s in (1, 2):
            els = enumerate_elements(n, s)
            atoms = [(atom_word(a), a) for a in els
                     if not a.is_bottom and a.rank == 1]
            for x in els:
                if x.is_bottom:
                    continue
                w = atom_word(x)
                assert w == min(aw for aw, a in atoms if is_leq(a, x))
                assert is_leq(word_to_atom(w, n, s), x)


def test_top_atom_word_is_identity_repeated():
    for n, s in ((3, 1), (2, 3), (4, 2)):
        assert atom_word(top_element(n, s)) == tuple(range(1, n + 1)) * s


def test_identity_word_ranks_first():
    assert atom_lex_rank(tuple(range(1, 6)), 5, 1) == 1
    assert atom_lex_rank((1, 2, 3, 1, 2, 3), 3, 2) == 1


def test_word_to_atom_roundtrip():
    for n, s in [(3, 1), (3, 2), (2, 3)]:
        els = enumerate_elements(n, s)
        for e in els:
            if e.is_atom:
                assert word_to_atom(atom_word(e), n, s) == e


def test_check_atom_word_rejects_junk():
    with pytest.raises(MalformedWord):
        check_atom_word((1, 2, 2), 3, 1)
    with pytest.raises(MalformedWord):
        check_atom_word((1, 2, 3, 1), 3, 1)


def test_perm_lex_rank_brute():
    for n in (2, 3, 4):
        ranked = sorted(permutations(range(1, n + 1)))
        for r, q in enumerate(ranked):
            assert perm_lex_rank(q) == r


def test_atom_lex_rank_anchors():
    assert perm_lex_rank((2, 4, 1, 3, 5)) == 36
    assert perm_lex_rank((4, 1, 2, 5, 3)) == 73
    assert perm_lex_rank((5, 4, 1, 3, 2)) == 115
    assert atom_lex_rank((5, 4, 1, 3, 2), 5, 1) == 116
    assert atom_lex_rank((2, 4, 1, 3, 5, 4, 1, 2, 5, 3), 5, 2) == 4394


def test_atom_lex_rank_against_sorting_oracle():
    for n, s in [(3, 1), (3, 2), (4, 1)]:
        els = enumerate_elements(n, s)
        for e in els:
            if e.is_atom:
                w = atom_word(e)
                assert atom_lex_rank(w, n, s) == sorted_word_rank(w, n, s)


def test_atom_lex_rank_is_monotone_bijection():
    # ranks of all atoms, in word order, are exactly 1..(n!)^s
    n, s = 3, 2
    words = sorted(atom_word(e) for e in enumerate_elements(n, s)
                   if e.is_atom)
    assert [atom_lex_rank(w, n, s) for w in words] == \
        list(range(1, factorial(n) ** s + 1))


@given(st.permutations(list(range(1, 7))))
def test_perm_rank_hypothesis_bounds(q):
    r = perm_lex_rank(tuple(q))
    assert 0 <= r < factorial(6)
    assert (r == 0) == (list(q) == sorted(q))


@settings(max_examples=50)
@given(st.permutations(list(range(1, 6))), st.permutations(list(range(1, 6))))
def test_atom_rank_respects_lex_order(a, b):
    wa, wb = tuple(a), tuple(b)
    if wa < wb:
        assert atom_lex_rank(wa, 5, 1) < atom_lex_rank(wb, 5, 1)


def test_atom_words_fall_going_up(p3s2):
    # comparable elements order their atom words the other way around
    p = p3s2
    for (lo, hi) in p.covers:
        if lo == p.bottom:
            continue
        assert atom_word(p.elements[hi]) <= atom_word(p.elements[lo])


def test_same_atom_interval_is_partition_lattice():
    # [atom, top] with matching words mirrors the plain partition lattice:
    # compare zeta matrices under the canonical order isomorphism
    n, s = 3, 2
    p = vector_partition_poset(n, s)
    lat = set_partition_lattice(n)
    atom = p.index[word_to_atom(tuple(range(1, n + 1)) * s, n, s)]
    inside = sorted(p.interval(atom, p.top),
                    key=lambda t: (p.ranks[t], p.elements[t].sort_key))
    assert len(inside) == len(lat.elements)

    def blocks_of(t):
        return p.elements[t].blocks

    match = {t: lat.index[blocks_of(t)] for t in inside}
    for a in inside:
        for b in inside:
            assert p.leq(a, b) == lat.leq(match[a], match[b])


def _projection_matches(p, lat, x, y):
    # dropping labels must map [x, y] order-isomorphically onto the
    # partition-lattice interval between the underlying partitions
    inside = p.interval(x, y)
    image = [lat.index[p.elements[t].blocks] for t in inside]
    assert len(set(image)) == len(inside)
    want = lat.interval(lat.index[p.elements[x].blocks],
                        lat.index[p.elements[y].blocks])
    assert sorted(image) == want
    for a, qa in zip(inside, image):
        for b, qb in zip(inside, image):
            assert p.leq(a, b) == lat.leq(qa, qb)


def test_every_interval_projects_onto_partition_lattice():
    for n, s in ((2, 1), (3, 1), (2, 2), (3, 2)):
        p = vector_partition_poset(n, s)
        lat = set_partition_lattice(n)
        for x in range(len(p.elements)):
            if x == p.bottom:
                continue
            for y in range(len(p.elements)):
                if p.leq(x, y):
                    _projection_matches(p, lat, x, y)


def test_top_intervals_project_onto_partition_lattice_n4():
    # checking up to the top pins down every sub-interval as well
    for n, s in ((4, 1), (4, 2)):
        p = vector_partition_poset(n, s)
        lat = set_partition_lattice(n)
        for x in range(len(p.elements)):
            if x != p.bottom:
                _projection_matches(p, lat, x, p.top)


def test_top_and_bottom_shapes():
    t = top_element(4, 2)
    assert t.blocks == ((1, 2, 3, 4),)
    assert t.labels == (((1, 2, 3, 4),), ((1, 2, 3, 4),))
    b = bottom_element(4, 2)
    assert b.is_bottom and b.blocks == () and b.rank == 0
