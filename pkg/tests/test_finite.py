import pytest

from onepoint import (
    FiniteSpace,
    ParseError,
    SizeTooLarge,
    check_axiom,
    components_exhaustive,
    components_growth,
    count_topologies,
    enumerate_topologies,
    from_preorder,
    is_dense,
    parse_topology_literal,
    search_one_point_connectifications,
    subspace,
    to_preorder,
    topology_literal,
    validate_topology,
)

SIERPINSKI = FiniteSpace(2, frozenset({0, 1, 3}))


def discrete(n):
    return FiniteSpace(n, frozenset(range(1 << n)))


def indiscrete(n):
    return FiniteSpace(n, frozenset({0, (1 << n) - 1}))


# --------------------------------------------------------------------------
# validation and the preorder bijection
# --------------------------------------------------------------------------


def test_validate_topology_examples():
    assert validate_topology(2, {0, 1, 3})
    assert not validate_topology(2, {0, 1, 2})  # missing the full set
    assert validate_topology(3, set(range(8)))
    assert not validate_topology(2, {0, 1, 2, 3} - {0})


def test_preorder_round_trip_examples():
    assert from_preorder(to_preorder(discrete(3))) == discrete(3)
    assert from_preorder(to_preorder(indiscrete(3))) == indiscrete(3)
    assert from_preorder(to_preorder(SIERPINSKI)) == SIERPINSKI
    p = to_preorder(SIERPINSKI)
    assert p.up == (1, 3)  # the 2-chain: 0 below nothing new, 1 below 0? no: up-masks
    p_disc = to_preorder(discrete(2))
    assert p_disc.up == (1, 2)  # equality preorder
    p_ind = to_preorder(indiscrete(2))
    assert p_ind.up == (3, 3)  # total relation


def test_round_trip_everything_up_to_4():
    for n in range(5):
        for t in enumerate_topologies(n, "preorder"):
            p = to_preorder(t)
            assert from_preorder(p) == t
            assert to_preorder(from_preorder(p)) == p


# --------------------------------------------------------------------------
# dual enumerators
# --------------------------------------------------------------------------


def test_enumerator_counts_agree():
    expected = [1, 1, 4, 29, 355]
    for n, want in enumerate(expected):
        assert count_topologies(n, "preorder") == want
        if n <= 4:
            assert count_topologies(n, "family") == want


def test_enumerator_sets_agree():
    for n in range(4):
        fam = set(enumerate_topologies(n, "family"))
        pre = set(enumerate_topologies(n, "preorder"))
        assert fam == pre


def test_size_limits():
    with pytest.raises(SizeTooLarge):
        list(enumerate_topologies(5, "family"))
    with pytest.raises(SizeTooLarge):
        list(enumerate_topologies(7, "preorder"))
    with pytest.raises(SizeTooLarge):
        search_one_point_connectifications(discrete(5), "T2")


# --------------------------------------------------------------------------
# axioms
# --------------------------------------------------------------------------


def test_axiom_examples():
    d3 = discrete(3)
    assert check_axiom(d3, "T1")
    assert not check_axiom(d3, "connected")
    assert components_exhaustive(d3) == (1, 2, 4)

    assert check_axiom(SIERPINSKI, "T0")
    assert not check_axiom(SIERPINSKI, "T1")
    assert check_axiom(SIERPINSKI, "connected")

    assert check_axiom(indiscrete(3), "connected")
    assert not check_axiom(indiscrete(2), "T0")

    with pytest.raises(ValueError):
        check_axiom(d3, "T9")


def test_every_finite_space_locally_connected():
    for n in range(5):
        for t in enumerate_topologies(n, "preorder"):
            assert check_axiom(t, "locally_connected")


def test_t2_equals_discrete_on_finite():
    for n in range(1, 5):
        for t in enumerate_topologies(n, "preorder"):
            assert check_axiom(t, "T2") == (t == discrete(n))


def test_components_algorithms_agree():
    for n in range(5):
        for t in enumerate_topologies(n, "preorder"):
            assert components_exhaustive(t) == components_growth(t)


def test_connected_iff_one_component():
    for t in enumerate_topologies(3, "preorder"):
        assert check_axiom(t, "connected") == (len(components_growth(t)) == 1)


# --------------------------------------------------------------------------
# subspace and density
# --------------------------------------------------------------------------


def test_subspace_and_density_examples():
    assert is_dense(SIERPINSKI, 0b01)  # closure of {0} is everything
    assert is_dense(SIERPINSKI, 0b11)
    assert not is_dense(SIERPINSKI, 0b00)
    assert not is_dense(SIERPINSKI, 0b10)  # {1} is closed already

    sub = subspace(discrete(3), 0b101)
    assert sub == discrete(2)
    assert subspace(SIERPINSKI, 0b01) == discrete(1)


# --------------------------------------------------------------------------
# the exhaustive connectification search
# --------------------------------------------------------------------------


def test_search_examples():
    assert search_one_point_connectifications(discrete(2), "T2") == []
    assert search_one_point_connectifications(discrete(1), "T2") == []
    found = search_one_point_connectifications(SIERPINSKI, "T0")
    assert found
    for t in found:
        assert subspace(t, 0b11) == SIERPINSKI
        assert is_dense(t, 0b11)
        assert check_axiom(t, "connected")
        assert check_axiom(t, "T0")


def test_search_t1_spaces_micro_necessity():
    t1_spaces = 0
    for n in range(1, 4):
        for t in enumerate_topologies(n, "preorder"):
            if check_axiom(t, "T1"):
                t1_spaces += 1
                assert search_one_point_connectifications(t, "T2") == []
    assert t1_spaces == 3  # one discrete space per size


def test_search_positive_control():
    # the 1-point space has a connected T0 extension (Sierpinski itself)
    found = search_one_point_connectifications(discrete(1), "T0")
    assert found


# --------------------------------------------------------------------------
# the textual dump
# --------------------------------------------------------------------------


def test_topology_literal_round_trip():
    assert topology_literal(SIERPINSKI) == "{},{0},{0,1}"
    assert parse_topology_literal("{},{0},{0,1}") == SIERPINSKI
    for t in enumerate_topologies(3, "preorder"):
        assert parse_topology_literal(topology_literal(t)) == t


def test_parse_topology_literal_rejects_garbage():
    for bad in ["", "{0}", "{},{0},{1}", "nope", "{},{0,1},{0", "{},{a}"]:
        with pytest.raises(ParseError):
            parse_topology_literal(bad)
    assert parse_topology_literal("{},{0}") == discrete(1)
