import pytest

from eirep.groups import (Group, GroupError, group_simple_count, is_trivial_or_p_group, p_part,
                          sylow_p_cyclic)


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        Group([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        Group([[0, 1, 2], [1, 2, 0]])


def test_symmetric_group_basics():
    S3 = Group.symmetric(3)
    assert S3.order == 6 and not S3.is_abelian() and not S3.is_cyclic()
    assert sorted(len(c) for c in S3.conjugacy_classes) == [1, 2, 3]
    assert S3.exponent == 6
    assert len(S3.subgroup_generated(S3.generators)) == 6


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_cyclic_group(n):
    G = Group.cyclic(n)
    assert G.is_cyclic() and G.is_abelian() and G.exponent == n
    assert len(G.conjugacy_classes) == n


def test_direct_product_order_and_exponent():
    G = Group.direct_product(Group.cyclic(2), Group.cyclic(2))
    assert G.order == 4 and G.exponent == 2 and not G.is_cyclic()


@pytest.mark.parametrize("G,p,count", [
    (Group.symmetric(3), 2, 2), (Group.symmetric(3), 3, 2), (Group.symmetric(3), 5, 3),
    (Group.cyclic(4), 2, 1), (Group.cyclic(6), 0, 6),
])
def test_p_regular_class_counts(G, p, count):
    assert group_simple_count(G, p) == count


def test_sylow_and_p_parts():
    assert p_part(12, 2) == 4 and p_part(12, 3) == 3 and p_part(7, 0) == 1
    V4 = Group.direct_product(Group.cyclic(2), Group.cyclic(2))
    assert not sylow_p_cyclic(V4, 2) and sylow_p_cyclic(Group.cyclic(4), 2)
    assert sylow_p_cyclic(Group.symmetric(3), 2) and sylow_p_cyclic(V4, 3)
    assert is_trivial_or_p_group(V4, 2) and not is_trivial_or_p_group(Group.symmetric(3), 2)
