import pydot
import pytest
from hypothesis import given
from sympy import Matrix

from rdet.arquiver import (
    EPI,
    MONO,
    AlmostSplitSeq,
    almost_split_sequences,
    ar_quiver,
    export_dot,
    irreducible_pairs,
    string_ass,
    tau,
    tau_inv,
)
from rdet.dense import hom_space, interval_representation
from rdet.intervals import IntervalModule, enumerate_indecomposables, injective, projective
from rdet.quiver import all_quivers, parse_quiver

from conftest import alternating, linear
from strategies import quivers

I = IntervalModule


def _flatten(mats, q):
    return Matrix([e for v in range(1, q.n + 1) for e in mats[v]])


def _compose(g, f, q):
    return {v: g[v] * f[v] for v in range(1, q.n + 1)}


def dense_irreducibles(q):
    """rad/rad^2 by explicit matrices: f is irreducible iff it lies outside the
    span of every composite X -> Z -> Y through a third indecomposable."""
    mods = enumerate_indecomposables(q)
    reps = {m: interval_representation(m, q) for m in mods}
    homs = {(x, y): hom_space(reps[x], reps[y], q) for x in mods for y in mods}
    out = set()
    for x in mods:
        for y in mods:
            if x == y or not homs[(x, y)]:
                continue
            composites = [
                _flatten(_compose(g, f, q), q)
                for z in mods if z not in (x, y)
                for f in homs[(x, z)] for g in homs[(z, y)]
            ]
            rank = Matrix.hstack(*composites).rank() if composites else 0
            full = Matrix.hstack(*composites, *(_flatten(h, q) for h in homs[(x, y)]))
            if full.rank() > rank:
                out.add((x, y))
    return out


def test_a2():
    q = parse_quiver("1 > 2")
    irr = {(f.source, f.target, f.kind) for f in irreducible_pairs(q)}
    assert irr == {(I(2, 2), I(1, 2), MONO), (I(1, 2), I(1, 1), EPI)}
    assert almost_split_sequences(q) == [AlmostSplitSeq(I(2, 2), (I(1, 2),), I(1, 1))]


def test_linear_a3_irreducibles():
    # the AR quiver of 1 -> 2 -> 3 is a triangle of three meshes with six arrows
    q = linear(3)
    irr = {(f.source, f.target) for f in irreducible_pairs(q)}
    assert irr == dense_irreducibles(q)
    assert irr == {
        (I(3, 3), I(2, 3)), (I(2, 3), I(1, 3)), (I(2, 3), I(2, 2)),
        (I(1, 3), I(1, 2)), (I(2, 2), I(1, 2)), (I(1, 2), I(1, 1)),
    }


@pytest.mark.parametrize("n", [2, 3, 4])
def test_irreducibles_match_dense_rad_squared(n):
    for q in all_quivers(n, n):
        assert {(f.source, f.target) for f in irreducible_pairs(q)} == dense_irreducibles(q)


def test_dense_rad_squared_on_bound_quiver():
    q = parse_quiver("1 > 2 > 3 < 4 > 5\nrel: 1 2 3")
    assert {(f.source, f.target) for f in irreducible_pairs(q)} == dense_irreducibles(q)


def test_zigzag_labelled_monos(zigzag):
    irr = {(f.source, f.target): f.kind for f in irreducible_pairs(zigzag)}
    p = {i: projective(zigzag, i) for i in range(1, 7)}
    assert irr[(p[1], p[2])] == MONO
    assert irr[(p[5], p[4])] == MONO
    # P(6) = [5,6] and P(5) = [5,5]: the irreducible mono leaving P(6) goes to [3,6]
    assert (p[6], p[5]) not in irr
    assert irr[(p[6], I(3, 6))] == MONO


def test_linear_sequences_and_tau():
    q = linear(5)
    seqs = almost_split_sequences(q)
    singles = [s for s in seqs if len(s.middle) == 1]
    for i in range(2, 6):
        s = next(s for s in seqs if s.right == I(i - 1, i - 1))
        assert s.left == I(i, i) and s.middle == (I(i - 1, i),)
        assert tau(I(i - 1, i - 1), q) == I(i, i)
    assert len(singles) == 4
    for i in range(1, 6):
        assert tau(projective(q, i), q) is None
        assert tau_inv(injective(q, i), q) is None


def test_tau_inv_on_alternating_a4():
    q = alternating(2)
    for i in range(1, 4):
        s = string_ass(q, i)
        assert tau_inv(s.left, q) == s.right


def test_string_ass_alternating():
    for n_half in range(2, 6):
        q = alternating(n_half)
        assert string_ass(q, 1).right == injective(q, 1)
        for i in range(1, n_half):
            assert string_ass(q, 2 * i).right == I(2 * i + 1, 2 * i + 2)
        for i in range(1, n_half - 1):
            assert string_ass(q, 2 * i + 1).right == I(2 * i, 2 * i + 1)
        assert string_ass(q, 2 * n_half - 1).right == I(2 * n_half - 2, 2 * n_half - 1)


def test_string_ass_thirteen(thirteen_path, thirteen_bound):
    assert string_ass(thirteen_path, 2).right == I(3, 5)
    assert string_ass(thirteen_bound, 2).right == I(3, 4)
    assert string_ass(thirteen_path, 8).right == I(5, 8)
    assert string_ass(thirteen_bound, 8).right == I(6, 8)


def test_string_ass_linear():
    q = linear(6)
    for i in range(1, 6):
        assert string_ass(q, i) == AlmostSplitSeq(I(i + 1, i + 1), (I(i, i + 1),), I(i, i))
    with pytest.raises(ValueError):
        string_ass(q, 6)


def _dot_graph(q):
    (graph,) = pydot.graph_from_dot_data(export_dot(q))
    edges = graph.get_edges()
    solid = [e for e in edges if e.get("style").strip('"') == "solid"]
    dashed = [e for e in edges if e.get("style").strip('"') == "dashed"]
    return graph, solid, dashed


def test_dot_a2():
    graph, solid, dashed = _dot_graph(parse_quiver("1 > 2"))
    assert len([n for n in graph.get_nodes() if n.get_name().startswith("m")]) == 3
    assert len(solid) == 2 and len(dashed) == 1


def test_dot_zigzag(zigzag):
    graph, solid, dashed = _dot_graph(zigzag)
    assert len([n for n in graph.get_nodes() if n.get_name().startswith("m")]) == 21
    ar = ar_quiver(zigzag)
    assert len(solid) == len(ar.irreducibles)
    assert len(dashed) == 21 - 6


@given(quivers())
def test_mesh_structure(q):
    ar = ar_quiver(q)
    proj, inj = set(ar.projectives), set(ar.injectives)
    seqs = ar.sequences
    assert len(seqs) == len(ar.modules) - len(proj)
    assert sum(len(s.middle) == 1 for s in seqs) == q.n - 1
    for s in seqs:
        assert len(s.middle) in (1, 2)
        assert s.left not in inj and s.right not in proj
        assert (s.left.dim_vector(q.n) + s.right.dim_vector(q.n)
                == sum(m.dim_vector(q.n) for m in s.middle)).all()
        assert ar.tau_inv(ar.tau(s.right)) == s.right
        assert ar.tau(ar.tau_inv(s.left)) == s.left
    for i in range(1, q.n):
        st = string_ass(q, i)
        assert st in seqs
    for f in ar.irreducibles:
        assert f.arrow.is_mono != f.arrow.is_epi
