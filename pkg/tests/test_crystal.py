import json

import pytest
from hypothesis import given, strategies as st

from crystal_figure import isomorphic_to_figure
from fockspace.crystal import (
    CrystalError, apply_path, cogood_box, crystal_graph, e_tilde, epsilon, f_tilde, good_box,
    graph_to_dot, graph_to_json, mullineux, mullineux_restricted, phi, signature, strip_path,
)
from fockspace.partitions import Box, conjugate, is_regular, is_restricted, partitions_of


def test_good_boxes_of_reference_partition():
    lam = (4, 3, 2, 2, 1)
    assert good_box(lam, 0, 3) is None
    assert good_box(lam, 2, 3) == Box(5, 1)
    assert good_box(lam, 1, 3) == Box(2, 3)


def test_signature_reduction_shape():
    for lam in partitions_of(7):
        for i in range(3):
            red = signature(lam, i, 3).reduced_letters
            assert red == "R" * red.count("R") + "A" * red.count("A")


def test_family_moves():
    assert e_tilde((5, 2, 2, 1), 0, 3) == (5, 2, 2)
    assert e_tilde((5, 2, 2), 2, 3) == (5, 2, 1)


@pytest.mark.parametrize("depth", [4, 5])
def test_graph_matches_reference_drawing(depth):
    nodes, edges = crystal_graph(3, depth)
    assert isomorphic_to_figure(nodes, edges, depth)


def test_graph_sizes():
    counts = {d: (len(crystal_graph(3, d)[0]), len(crystal_graph(3, d)[1])) for d in range(6)}
    assert counts[0] == (1, 0)
    assert counts[4] == (10, 9)
    assert counts[5] == (15, 17)
    nodes, edges = crystal_graph(2, 3)
    assert nodes == [(), (1,), (1, 1), (2, 1), (1, 1, 1)]
    assert len(edges) == 4


def test_component_is_restricted_partitions():
    for ell in (2, 3, 4):
        nodes, _ = crystal_graph(ell, 8)
        assert set(nodes) == {lam for n in range(9) for lam in partitions_of(n) if is_restricted(lam, ell)}


def test_exporters_are_deterministic():
    nodes, edges = crystal_graph(3, 4)
    dot = graph_to_dot(nodes, edges, 3)
    assert dot == graph_to_dot(*crystal_graph(3, 4), 3)
    assert '"(1)" -> "(2)" [label="1"];' in dot
    data = graph_to_json(nodes, edges, 3)
    assert json.loads(json.dumps(data)) == data
    assert data["nodes"][0] == []


@given(st.sampled_from([2, 3, 4]), st.integers(0, 9))
def test_crystal_axioms(ell, n):
    for lam in partitions_of(n):
        for i in range(ell):
            up = f_tilde(lam, i, ell)
            if up is not None:
                assert e_tilde(up, i, ell) == lam
                assert epsilon(up, i, ell) == epsilon(lam, i, ell) + 1
            down = e_tilde(lam, i, ell)
            if down is not None:
                assert f_tilde(down, i, ell) == lam
                assert phi(down, i, ell) == phi(lam, i, ell) + 1


def test_paths_roundtrip_and_errors():
    lam = (2, 2, 1, 1)
    assert apply_path(strip_path(lam, 3), 3) == lam
    with pytest.raises(CrystalError):
        strip_path((3,), 3)
    with pytest.raises(CrystalError):
        mullineux((1, 1, 1), 3)


def test_mullineux_examples():
    assert mullineux((12, 8, 4), 3) == (6, 6, 4, 4, 2, 2)
    assert mullineux((6, 6, 4, 4, 2, 2), 3) == (12, 8, 4)
    assert mullineux((1,), 3) == (1,)
    assert mullineux((4,), 3) == (2, 2)
    assert mullineux((4, 4, 2, 2), 3) == (8, 4)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_mullineux_involution(ell):
    for n in range(11):
        regular = [nu for nu in partitions_of(n) if is_regular(nu, ell)]
        images = [mullineux(nu, ell) for nu in regular]
        assert all(is_regular(m, ell) for m in images)
        assert [mullineux(m, ell) for m in images] == regular
        assert sorted(images) == sorted(regular)


def test_mullineux_independent_of_path_choice():
    for nu in partitions_of(9):
        if is_regular(nu, 3):
            assert mullineux(nu, 3, choose=min) == mullineux(nu, 3, choose=max)


def test_mullineux_for_ell_two_is_identity():
    # for ell = 2 negating residues does nothing
    for nu in partitions_of(8):
        if is_regular(nu, 2):
            assert mullineux(nu, 2) == nu
