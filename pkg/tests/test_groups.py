import pytest

from graphpower.errors import DomainMismatch, SearchBoundExceeded, SpecParseError, UnsupportedParameter
from graphpower.groups import (
    FiniteGroup,
    abelianization,
    alternating,
    commutator_set,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    has_faithful_abelian_generators,
    heisenberg,
    make_group,
    parse_group_spec,
    subgroup_order_and_membership,
    symmetric,
)
from graphpower.perm import Perm, PermGroup, closure_elements

from oracles import closure_order


def quaternion_group() -> FiniteGroup:
    """Q8 through its right regular representation."""
    # elements (s, u): s in {0,1} sign exponent, u in {1, i, j, k} as 0..3
    def mult(a, b):
        table = {  # (u, v) -> (sign, w) for the unit part
            (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
            (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
            (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
            (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
        }
        sign, unit = table[(a[1], b[1])]
        return ((a[0] + b[0] + sign) % 2, unit)

    elems = [(s, u) for s in range(2) for u in range(4)]
    index = {e: i for i, e in enumerate(elems)}
    gens = []
    for g in [(0, 1), (0, 2)]:  # i and j
        gens.append(Perm([index[mult(e, g)] for e in elems]))
    return FiniteGroup("Q8", 8, gens)


def test_builtin_orders():
    assert cyclic(1).order() == 1
    assert cyclic(7).order() == 7
    assert dihedral(2).order() == 2
    assert dihedral(4).order() == 4
    assert dihedral(8).order() == 8
    assert dihedral(14).order() == 14
    assert symmetric(1).order() == 1
    assert symmetric(5).order() == 120
    assert alternating(4).order() == 12
    for p in (2, 3, 5):
        assert heisenberg(p).order() == p ** 3
    assert direct_product(dihedral(8), cyclic(3)).order() == 24
    assert make_group("direct_product", "D8", "C3").order() == 24
    assert make_group("direct_product", dihedral(8), cyclic(2)).order() == 16
    with pytest.raises(UnsupportedParameter):
        heisenberg(4)
    with pytest.raises(UnsupportedParameter):
        make_group("free", 2)


def test_orders_match_closure_oracle():
    for group in [dihedral(8), symmetric(4), heisenberg(3), alternating(4)]:
        assert group.order() == closure_order(group.degree, group.generators)


def test_dihedral_presentation():
    for order in (6, 8, 10, 12):
        g = dihedral(order)
        r, s = g.generators
        n = order // 2
        assert (s * s).is_identity()
        assert ((r * s) ** 2).is_identity()
        assert (r ** n).is_identity()
        assert not (r ** (n - 1)).is_identity()


def test_heisenberg_properties():
    # exponent p for odd p, exponent 4 at p = 2; derived = center of order p
    h2 = heisenberg(2)
    orders2 = {g.order() for g in h2.elements()}
    assert max(orders2) == 4
    assert derived_subgroup(h2).order() == 2
    assert abelianization(h2).factors == (2, 2)
    # H(F_2) is the dihedral group of order 8: five involutions, not one
    assert sum(1 for g in h2.elements() if g.order() == 2) == 5

    h3 = heisenberg(3)
    assert {g.order() for g in h3.elements()} == {1, 3}
    der3 = derived_subgroup(h3)
    assert der3.order() == 3
    # derived subgroup is central
    for d in der3.generators:
        for g in h3.generators:
            assert d.conjugate(g) == d
    assert abelianization(h3).factors == (3, 3)

    h5 = heisenberg(5)
    assert {g.order() for g in h5.elements()} == {1, 5}


@pytest.mark.slow
def test_heisenberg_seven():
    h7 = heisenberg(7)
    assert h7.order() == 343
    assert {g.order() for g in h7.elements()} == {1, 7}
    assert abelianization(h7).factors == (7, 7)


def test_derived_subgroup_fixtures():
    assert derived_subgroup(dihedral(8)).order() == 2
    assert derived_subgroup(cyclic(9)).order() == 1
    assert derived_subgroup(symmetric(4)).order() == 12
    assert derived_subgroup(symmetric(3)).order() == 3


def test_derived_subgroup_is_normal():
    for group in [dihedral(8), symmetric(4), heisenberg(3)]:
        der = derived_subgroup(group)
        for d in [Perm(x.image) for x in der.generators]:
            for g in group.generators:
                assert der.contains(d.conjugate(g))


def test_abelianization_fixtures():
    assert abelianization(symmetric(4)).factors == (2,)
    assert abelianization(dihedral(10)).factors == (2,)   # odd n
    assert abelianization(dihedral(12)).factors == (2, 2)  # even n
    assert abelianization(cyclic(12)).factors == (12,)
    assert abelianization(direct_product(cyclic(2), cyclic(4))).factors == (2, 4)
    assert abelianization(alternating(4)).factors == (3,)


def test_abelianization_order_and_projection():
    for group in [dihedral(8), symmetric(4), heisenberg(3), direct_product(dihedral(8), cyclic(3))]:
        inv = abelianization(group)
        der = derived_subgroup(group)
        assert inv.order() == group.order() // der.order()
        elems = group.elements()
        import random
        rng = random.Random(1)
        for _ in range(20):
            x, y = rng.choice(elems), rng.choice(elems)
            px, py = inv.project(x), inv.project(y)
            combined = tuple((a + b) % r for a, b, r in zip(px, py, inv.factors))
            assert inv.project(x * y) == combined


def test_commutator_set_fixtures():
    d8 = dihedral(8)
    cs = commutator_set(d8)
    r = d8.generators[0]
    assert cs == {d8.identity(), r * r}
    s3 = symmetric(3)
    assert len(commutator_set(s3)) == 3  # the alternating subgroup
    assert commutator_set(cyclic(6)) == {cyclic(6).identity()}


def test_subgroup_order_and_membership():
    s4 = symmetric(4)
    sub = subgroup_order_and_membership(list(s4.generators))
    assert sub.order() == 24
    assert sub.contains(Perm.from_cycles(4, (0, 1, 2)))
    trivial = subgroup_order_and_membership([], degree=5)
    assert trivial.order() == 1
    with pytest.raises(DomainMismatch):
        subgroup_order_and_membership([])
    with pytest.raises(DomainMismatch):
        subgroup_order_and_membership([Perm([1, 0]), Perm([0, 1, 2])])


def test_subgroup_order_on_cycle_click_generators():
    # the ten click generators of S4 on the 5-cycle generate the full product
    from graphpower.graphs import cycle
    from graphpower.power import graph_power
    gp = graph_power(symmetric(4), cycle(5))
    clicks = [s.as_perm() for s in gp.generators]
    assert len(clicks) == 10
    sub = subgroup_order_and_membership(clicks, max_order=None)
    assert sub.order() == 24 ** 5 == 7962624


def test_subgroup_membership_matches_closure():
    import random
    rng = random.Random(5)
    s5 = symmetric(5)
    elems = s5.elements()
    for _ in range(5):
        gens = [rng.choice(elems) for _ in range(2)]
        sub = subgroup_order_and_membership(gens)
        closure = closure_elements(5, gens)
        assert sub.order() == len(closure)
        for _ in range(10):
            probe = rng.choice(elems)
            assert sub.contains(probe) == (probe.image in closure)


def test_permgroup_base_and_elements():
    d8 = dihedral(8)
    pg = PermGroup(4, d8.generators)
    assert pg.order() == 8
    assert len(pg.elements()) == 8
    assert pg.is_trivial() is False
    assert PermGroup(3, []).order() == 1


def test_faithful_abelian_generators():
    ok, witness = has_faithful_abelian_generators(dihedral(8))
    assert ok and [w.order() for w in witness] == [2, 2]
    assert has_faithful_abelian_generators(heisenberg(2))[0]
    assert has_faithful_abelian_generators(heisenberg(3))[0]
    assert has_faithful_abelian_generators(symmetric(4))[0]
    assert has_faithful_abelian_generators(cyclic(9))[0]
    q8 = quaternion_group()
    assert q8.order() == 8
    assert abelianization(q8).factors == (2, 2)
    assert has_faithful_abelian_generators(q8) == (False, None)


def test_element_search_bound():
    with pytest.raises(SearchBoundExceeded):
        symmetric(8).elements(bound=100)


def test_parse_group_spec():
    assert parse_group_spec("C4").order() == 4
    assert parse_group_spec("D8").order() == 8
    assert parse_group_spec("S5").order() == 120
    assert parse_group_spec("H3").order() == 27
    assert parse_group_spec("A4").order() == 12
    prod = parse_group_spec("D8xC3")
    assert prod.order() == 24 and prod.name == "D8xC3"
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec("D8xZ3")
    assert "Z3" in str(exc.value)
    with pytest.raises(SpecParseError):
        parse_group_spec("H4")
