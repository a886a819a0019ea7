import json

import pytest

from isoprod.characters import (
    SubgroupChars,
    character_table,
    decompose,
    find_constituent_avoiding,
    induced_character,
    restriction_multiplicity,
)
from isoprod.errors import DomainError
from isoprod.groups import all_subgroups, build_group, builtin_groups_upto

from oracles import complex_table, inner_complex


def test_degrees_of_known_groups():
    expected = {
        "ab:2": [1, 1],
        "sym:3": [1, 1, 2],
        "dih:4": [1, 1, 1, 1, 2],
        "quat:8": [1, 1, 1, 1, 2],
        "alt:4": [1, 1, 1, 3],
        "sym:4": [1, 1, 2, 3, 3],
        "dih:5": [1, 1, 2, 2],
        "dih:6": [1, 1, 1, 1, 2, 2],
    }
    for spec, degrees in expected.items():
        t = character_table(build_group(spec))
        assert [c.degree for c in t.characters] == degrees, spec


def test_orthogonality_complex_oracle():
    """Cross-check the exact tables against plain complex arithmetic."""
    for spec in ["sym:3", "dih:4", "quat:8", "alt:4", "ab:2,6", "sym:4"]:
        t = character_table(build_group(spec))
        k = len(t.characters)
        for i in range(k):
            for j in range(k):
                got = inner_complex(t, i, j)
                want = 1.0 if i == j else 0.0
                assert abs(got - want) < 1e-9, (spec, i, j)


def test_abelian_and_dixon_agree():
    for spec in builtin_groups_upto(24):
        G = build_group(spec)
        if not G.is_abelian():
            continue
        ta = character_table(G, method="abelian")
        td = character_table(G, method="dixon")
        assert [c.values for c in ta.characters] == [
            c.values for c in td.characters
        ], spec


def test_abelian_method_rejects_nonabelian():
    with pytest.raises(DomainError):
        character_table(build_group("sym:3"), method="abelian")


def test_kernel_and_trivial_multiplicity():
    G = build_group("sym:3")
    t = character_table(G)
    # the trivial character has full kernel; the others' kernels are known
    kernels = sorted(len(t.kernel(i)) for i in range(3))
    assert kernels == [1, 3, 6]  # faithful deg-2, sign (ker = A3), trivial
    transposition = next(g for g in range(6) if G.element_order[g] == 2)
    # l_sigma for an involution: trivial -> 1, sign -> 0, standard -> 1
    ls = sorted(t.trivial_multiplicity(i, transposition) for i in range(3))
    assert ls == [0, 1, 1]
    # l over the identity equals the degree
    for i, c in enumerate(t.characters):
        assert t.trivial_multiplicity(i, 0) == c.degree


def test_conjugate_pairing():
    G = build_group("ab:5")
    t = character_table(G)
    paired = sum(1 for i in range(5) if t.conj_index[i] != i)
    assert paired == 4  # only the trivial character is real
    for i in range(5):
        assert t.conj_index[t.conj_index[i]] == i


def test_value_rendering():
    t = character_table(build_group("ab:4"))
    rendered = {
        t.value(i, g).render() for i in range(4) for g in range(4)
    }
    assert "z4" in rendered and "-z4" in rendered and "-1" in rendered


def test_json_roundtrip():
    from isoprod.characters import CharacterTable

    G = build_group("dih:4")
    t = character_table(G)
    data = json.loads(json.dumps(t.to_json()))
    t2 = CharacterTable.from_json(G, data, check=True)
    assert [c.values for c in t2.characters] == [c.values for c in t.characters]


def test_disk_cache(tmp_path):
    G = build_group("sym:3")
    character_table.__globals__["_TABLE_CACHE"].clear()
    t1 = character_table(G, cache_dir=str(tmp_path))
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    character_table.__globals__["_TABLE_CACHE"].clear()
    t2 = character_table(build_group("sym:3"), cache_dir=str(tmp_path))
    assert [c.values for c in t1.characters] == [c.values for c in t2.characters]


def test_induced_from_a3():
    """Induce the nontrivial characters of A3 < S3: each gives the
    degree-2 irreducible."""
    G = build_group("sym:3")
    t = character_table(G)
    A3 = next(s for s in all_subgroups(G) if len(s) == 3)
    sc = SubgroupChars(G, A3)
    deg2 = next(i for i, c in enumerate(t.characters) if c.degree == 2)
    for i in range(3):
        vals = induced_character(t, sc, i)
        mults = decompose(t, vals)
        if i == sc.table.trivial_index:
            # trivial induces trivial + sign
            assert mults[deg2] == 0 and sum(mults) == 2
        else:
            assert mults == tuple(
                1 if j == deg2 else 0 for j in range(3)
            )


def test_frobenius_reciprocity():
    G = build_group("sym:4")
    t = character_table(G)
    for elems in all_subgroups(G):
        if len(elems) in (1, G.order) or len(elems) > 8:
            continue
        sc = SubgroupChars(G, elems)
        for i in range(len(sc.table.characters)):
            vals = induced_character(t, sc, i)
            mults = decompose(t, vals)
            for j in range(len(t.characters)):
                assert mults[j] == restriction_multiplicity(t, sc, j, i)


def test_find_constituent_preconditions():
    G = build_group("sym:3")
    t = character_table(G)
    A3 = next(s for s in all_subgroups(G) if len(s) == 3)
    sc = SubgroupChars(G, A3)
    triv = sc.table.trivial_index
    with pytest.raises(DomainError):
        # avoid set meets the kernel of the trivial character
        find_constituent_avoiding(t, sc, triv, [3])
    with pytest.raises(DomainError):
        # avoid set leaves the subgroup
        nontriv = next(i for i in range(3) if i != triv)
        outside = next(g for g in range(6) if g not in sc.elements)
        find_constituent_avoiding(t, sc, nontriv, [outside])


def test_find_constituent_with_vanishing_point():
    G = build_group("sym:3")
    t = character_table(G)
    A3 = next(s for s in all_subgroups(G) if len(s) == 3)
    sc = SubgroupChars(G, A3)
    nontriv = next(i for i in range(3) if i != sc.table.trivial_index)
    transposition = next(g for g in range(6) if G.element_order[g] == 2)
    threecycle = next(g for g in sc.elements if g != 0)
    phi = find_constituent_avoiding(
        t, sc, nontriv, [threecycle], extra=transposition
    )
    assert phi.degree == 2  # only the standard rep works here


def test_complex_values_match_oracle():
    """Exact multiplicity-vector values vs complex class sums for a
    non-abelian group with irrational character values."""
    G = build_group("dih:5")
    t = character_table(G)
    vals = complex_table(t)
    import cmath

    # the two degree-2 characters at a rotation r: 2cos(2pi k/5)
    rot = next(g for g in range(10) if G.element_order[g] == 5)
    got = sorted(
        round(vals[i][t.class_of[rot]].real, 6)
        for i, c in enumerate(t.characters)
        if c.degree == 2
    )
    want = sorted(
        round(2 * cmath.cos(2 * cmath.pi * k / 5).real, 6) for k in (1, 2)
    )
    assert got == want
