"""Permutation groups by generators: enumeration, orbits, stabilizers,
induced actions, coset actions, prime-order subgroups, file I/O."""

import math

import pytest

from socodes.groups import (
    Perm, PermGroup, OrderExceedsCap, DegreeTooLarge, NotASubgroup,
    parse_group_text, format_group_text,
)

# standard generators on 11 points, 0-based
M11_GENS = [
    Perm.from_cycles(11, [(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10)]),
    Perm.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)]),
]


def m11():
    return PermGroup(11, M11_GENS)


def test_perm_basics():
    g = Perm((1, 2, 0))
    h = Perm((0, 2, 1))
    assert (g * h).images == (2, 1, 0)       # right action: first g, then h
    assert g.inverse().images == (2, 0, 1)
    assert g.order() == 3
    assert Perm.identity(4).images == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


def test_cycle_roundtrip():
    g = Perm.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)])
    assert g.apply(2) == 6 and g.apply(7) == 2 and g.apply(0) == 0
    assert Perm.from_cycles(11, g.cycles()) == g


def test_cyclic_group_order():
    G = PermGroup(3, [Perm((1, 2, 0))])
    assert G.order == 3


def test_trivial_group():
    G = PermGroup(4, [])
    assert G.order == 1
    assert G.elements == (Perm.identity(4),)


def test_m11_order():
    assert m11().order == 7920


def test_enumeration_cap():
    G = PermGroup(11, M11_GENS)
    with pytest.raises(OrderExceedsCap):
        G.enumerate(cap=100)


def test_point_orbits():
    assert PermGroup(4, []).point_orbits() == [(0,), (1,), (2,), (3,)]
    assert m11().point_orbits() == [tuple(range(11))]
    G = PermGroup(5, [Perm.from_cycles(5, [(0, 1), (2, 3)])])
    assert G.point_orbits() == [(0, 1), (2, 3), (4,)]


def test_orbit_stabilizer():
    G = m11()
    S = G.stabilizer(0)
    assert S.order == 720
    for pt in range(3):
        assert len(G.orbit_of(pt)) * G.stabilizer(pt).order == G.order


def test_set_orbit_toys():
    triv = PermGroup(4, [])
    orbit, stab_order = triv.set_orbit({0, 1})
    assert orbit == [(0, 1)] and stab_order == 1
    C3 = PermGroup(3, [Perm((1, 2, 0))])
    orbit, stab_order = C3.set_orbit({0})
    assert orbit == [(0,), (1,), (2,)] and stab_order == 1


def test_set_orbit_sizes_divide_group_order():
    G = PermGroup(6, [Perm.from_cycles(6, [(0, 1, 2, 3, 4, 5)]),
                      Perm.from_cycles(6, [(1, 5), (2, 4)])])   # dihedral, order 12
    assert G.order == 12
    for delta in [{0}, {0, 1}, {0, 3}, {0, 2, 4}]:
        orbit, stab = G.set_orbit(delta)
        assert len(orbit) * stab == G.order


def test_ksubset_action_s3():
    S3 = PermGroup(3, [Perm((1, 0, 2)), Perm((1, 2, 0))])
    A = S3.action_on_ksubsets(2)
    assert A.degree == 3
    assert A.order == 6
    assert A.is_transitive()


def test_ksubset_action_m11_pairs():
    A = m11().action_on_ksubsets(2)
    assert A.degree == 55
    assert A.order == 7920
    assert A.is_transitive()
    assert A.stabilizer(0).order == 144


def test_ksubset_action_cap():
    with pytest.raises(DegreeTooLarge):
        PermGroup(30, []).action_on_ksubsets(15)


def test_homomorphism_on_generators():
    G = m11()
    phi = G.induced_on_ksubsets(2)
    for gi in G.generators:
        for gj in G.generators:
            assert phi(gi * gj) == phi(gi) * phi(gj)


def test_coset_action_trivial_cases():
    G = PermGroup(3, [Perm((1, 2, 0))])
    assert G.coset_action(G).degree == 1
    reg = G.coset_action(PermGroup(3, []))
    assert reg.degree == 3 and reg.order == 3


def test_coset_action_not_subgroup():
    G = PermGroup(3, [Perm((1, 2, 0))])
    H = PermGroup(3, [Perm((1, 0, 2))])
    with pytest.raises(NotASubgroup):
        G.coset_action(H)


def test_restriction_parity_is_trivial_on_m11():
    # the whole group is even, and a fixed point never changes parity, so a
    # parity filter on the stabilizer keeps everything; the index-2 part is
    # instead generated by squares
    S = m11().stabilizer(0)
    assert all(g.restriction_parity(exclude=0) == 0 for g in S.elements[:50])


def test_m11_degree22_action():
    G = m11()
    H = G.stabilizer(0).squares_subgroup()
    assert H.order == 360
    A = G.coset_action(H)
    assert A.degree == 22
    assert A.order == 7920
    assert A.is_transitive()
    assert A.stabilizer(0).order == 360


def test_prime_order_subgroups_cyclic4():
    C4 = PermGroup(4, [Perm((1, 2, 3, 0))])
    subs = C4.prime_order_subgroups(2)
    assert len(subs) == 1
    assert subs[0].order == 2
    assert subs[0].generators[0].images == (2, 3, 0, 1)


def test_m11_involutions_cycle_type():
    subs = m11().prime_order_subgroups(2)
    assert len(subs) == 165
    for H in subs[:5] + subs[-5:]:
        g = H.generators[0]
        assert g.cycle_type() == ((1, 3), (2, 4))   # 3 fixed points, four 2-cycles


def test_m11_order11_subgroups():
    subs = m11().prime_order_subgroups(11)
    assert len(subs) == 144
    assert all(H.order == 11 for H in subs[:3])


def test_orbit_sizes_sum_to_degree():
    for G in [m11(), PermGroup(5, [Perm.from_cycles(5, [(0, 1), (2, 3)])])]:
        assert sum(len(o) for o in G.point_orbits()) == G.degree


def test_group_file_roundtrip():
    text = format_group_text(m11())
    G2 = parse_group_text(text)
    assert G2.degree == 11
    assert G2.order == 7920


def test_group_file_cycle_notation():
    text = """# Mathieu group M11
degree 11
(1,2,3,4,5,6,7,8,9,10,11)
(3,7,11,8)(4,10,5,6)
"""
    G = parse_group_text(text)
    assert G.order == 7920
    assert G.generators[0] == M11_GENS[0]
    assert G.generators[1] == M11_GENS[1]


def test_group_file_img_notation():
    text = "degree 3\nimg: 2 3 1\n"
    G = parse_group_text(text)
    assert G.generators[0].images == (1, 2, 0)
