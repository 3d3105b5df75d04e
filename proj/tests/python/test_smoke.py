import pytest

import edgeposet as ep


def test_boolean_algebra_ranks():
    b = ep.boolean_algebra(4)
    assert len(b) == 16
    assert b.rank_vector() == [1, 4, 6, 4, 1]
    assert b.leq(0b0001, 0b0011)
    assert not b.leq(0b0001, 0b0110)


def test_edge_poset_of_second_figure():
    e = ep.edge_poset(ep.figures.fig2())
    assert e.poset.rank_vector() == [3, 2, 3]
    assert not ep.is_peck(e.poset)
    assert ep.is_unitary_peck(ep.figures.fig2())


def test_first_figure_edges_match_drawing():
    e = ep.edge_poset(ep.figures.fig1())
    assert ep.is_isomorphic(e.poset, ep.figures.fig1_edges_drawn()) is not None
    assert not ep.naive_edge_relation_is_graded(ep.figures.fig1())


def test_json_round_trip():
    p = ep.figures.fig2()
    assert ep.GradedPoset.from_json(p.to_json()) == p


def test_dihedral_witness():
    r = ep.is_cct(ep.dihedral_group(9))
    assert r["cct"] is False
    assert r["witness"] == ([0, 1, 3, 6], [0, 3, 4, 6], [0, 1, 3, 4, 6])
    for method in ("dual", "q-bijective", "rank-counts"):
        assert ep.is_cct(ep.dihedral_group(9), method)["cct"] is False


def test_symmetric_groups_are_cct():
    for n in range(1, 6):
        assert ep.is_cct(ep.symmetric_group(n))["cct"]


def test_cyclic_quotient_and_record():
    rec = ep.analyse(ep.cyclic_group(5), oracle_threshold=16)
    assert rec["order"] == 5
    assert rec["edge_quotient_ranks"] == [1, 4, 6, 4, 1]
    assert rec["quotient_edges"]["peck"]
    assert ep.quotient_ranks(ep.cyclic_group(4)) == [1, 1, 2, 1, 1]


def test_sweep_n5_all_peck():
    records = ep.sweep(5)
    assert len(records) == 19
    assert all(r["quotient_edges"]["peck"] for r in records)


def test_groups():
    g = ep.PermGroup(4, [ep.Permutation.parse("(1 2)(3 4)", 4), ep.Permutation.parse("(1 3)(2 4)", 4)])
    assert g.order() == 4
    assert ep.figures.fig4_tree_group().order() == 128
    assert ep.figures.fig5_tree_group().order() == 576
    assert ep.tree_group({"children": [{}, {}, {}]}).order() == 6


def test_peck_numbers():
    b3 = ep.boolean_algebra(3)
    assert [ep.max_k_antichain_union(b3, k) for k in (1, 2, 3)] == [3, 6, 7]
    report = ep.peck_report(ep.edge_poset(b3).poset)
    assert report["unitary_peck"]
    chains = ep.scd_boolean(5)
    assert ep.is_symmetric_chain_decomposition(ep.boolean_algebra(5), chains)


def test_partitions():
    assert ep.partitions_in_box(2, 2, 2) == [[2], [1, 1]]
    assert ep.p_count(2, 2, 2, 1) == 2
    assert ep.pak_sequence(2, 2, 1)["sequence"] == [1, 2, 2, 1]


def test_errors():
    with pytest.raises(ep.Error):
        ep.named_group("nonsense:3")
    with pytest.raises(ValueError):
        ep.GradedPoset([0, 2], [(0, 1)])
