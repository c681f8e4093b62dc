import pytest

from lambdamaps.connectivity import (
    ConnectivityClass,
    InvalidReduced,
    NotReducible,
    check_family,
    check_reduced,
    edge_connectivity_class,
    is_three_connected_skeleton,
    leading_chain,
    reduce_skeleton,
    unreduce,
)
from lambdamaps.enumeration import gen_reduced_skeletons, gen_skeletons
from lambdamaps.lambda_core import diagram_of, parse_skeleton, render_skeleton


def sk(text):
    return parse_skeleton(text)


# ---------------------------------------------------------------------------
# Structural family checks

def test_check_family_examples():
    assert check_family(sk("U(U(B(L,L)))"), 2)
    assert not check_family(sk("U(B(L,U(L)))"), 2)
    assert not check_family(sk("U(B(U(L),L))"), 1)


def test_check_family_level1_examples():
    assert check_family(sk("U(L)"), 1)
    assert check_family(sk("U(B(L,U(L)))"), 1)
    assert not check_family(sk("U(B(L,L))"), 1)  # linearity fails
    assert not check_family(sk("B(L,U(U(L)))"), 1)  # chain above a leaf too long


def test_one_atom_term_is_two_connected():
    assert check_family(sk("U(L)"), 2)


def test_check_reduced_examples():
    assert check_reduced(sk("B(L,L)"))
    assert check_reduced(sk("U(B(L,B(L,L)))"))
    assert not check_reduced(sk("B(L,U(L))"))


def test_check_reduced_degenerate_cases():
    assert check_reduced(sk("L"))          # the size-2 degenerate element
    assert not check_reduced(sk("U(L)"))   # bare chains have no positive deficit
    assert not check_reduced(sk("U(B(L,L))"))  # top chain exceeds right deficit


# ---------------------------------------------------------------------------
# Reduce / unreduce

def test_reduce_examples():
    assert render_skeleton(reduce_skeleton(sk("U(U(U(B(L,B(L,L)))))"))) == "B(L,L)"
    assert render_skeleton(reduce_skeleton(sk("U(U(B(L,L)))"))) == "L"
    with pytest.raises(NotReducible):
        reduce_skeleton(sk("U(B(U(L),L))"))
    with pytest.raises(NotReducible):
        reduce_skeleton(sk("U(L)"))


def test_unreduce_examples():
    assert render_skeleton(unreduce(sk("B(L,L)"))) == "U(U(U(B(L,B(L,L)))))"
    assert render_skeleton(unreduce(sk("L"))) == "U(U(B(L,L)))"
    # unreduce is purely structural: membership failures are reported by
    # check_reduced, not here
    assert render_skeleton(unreduce(sk("B(L,U(L))"))) == "U(U(B(L,B(L,U(L)))))"
    with pytest.raises(InvalidReduced):
        unreduce(sk("U(L)"))


def test_reduce_unreduce_identity():
    for n in range(2, 8):
        for r in gen_reduced_skeletons(n):
            assert reduce_skeleton(unreduce(r)) == r
            assert check_family(unreduce(r), 2)


def test_leading_chain():
    assert leading_chain(sk("U(U(B(L,L)))")) == 2
    assert leading_chain(sk("B(L,L)")) == 0


# ---------------------------------------------------------------------------
# Brute-force diagram oracle

def test_edge_connectivity_examples():
    assert edge_connectivity_class(diagram_of(sk("U(U(B(L,L)))"))) \
        == ConnectivityClass.ThreePlus
    assert edge_connectivity_class(diagram_of(sk("U(B(L,U(L)))"))) \
        == ConnectivityClass.One
    assert edge_connectivity_class(diagram_of(sk("U(L)"))) \
        == ConnectivityClass.ThreePlus


def test_class_ordering():
    c = ConnectivityClass
    assert c.Disconnected < c.One < c.Two < c.ThreePlus


def test_oracle_equivalence_level2():
    for n in range(1, 6):
        for s in gen_skeletons(n, 1):
            cls = edge_connectivity_class(diagram_of(s))
            assert check_family(s, 2) == (cls >= ConnectivityClass.Two), s


def test_oracle_equivalence_level3():
    # the one-atom term is excluded: its single-vertex diagram is vacuously
    # ThreePlus but no reduced skeleton exists
    for n in range(2, 6):
        for s in gen_skeletons(n, 1):
            cls = edge_connectivity_class(diagram_of(s))
            assert is_three_connected_skeleton(s) == \
                (cls == ConnectivityClass.ThreePlus), s


def test_mirror_matters_only_at_level3():
    # with binder edges drawn from the counterclockwise contour instead,
    # the first 3-connected skeleton acquires a non-root disconnecting pair
    from lambdamaps.connectivity import _connected
    from lambdamaps.lambda_core import Diagram, Leaf, planar_match, preorder

    s = sk("U(U(U(B(L,B(L,L)))))")
    match = planar_match(s)
    binder = {leaf: u for u, leaf in match.items()}
    vertices, edges = [], []
    for nid, node, parent in preorder(s):
        if isinstance(node, Leaf):
            edges.append((parent, binder[nid]))
        else:
            vertices.append(nid)
            if parent >= 0:
                edges.append((parent, nid))
    mirror = Diagram(tuple(vertices), tuple(edges), 0)
    assert edge_connectivity_class(mirror) == ConnectivityClass.Two
    assert edge_connectivity_class(diagram_of(s)) == ConnectivityClass.ThreePlus
