"""Integer matrix reduction and abelian group presentations."""
import itertools

from hypothesis import given, settings, strategies as st
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from homposet.abelian import cokernel_invariants, group_presentation, smith_normal_form


def test_snf_known_matrices():
    assert smith_normal_form([(2, 0), (0, 2)], 2) == (2, 2)
    assert smith_normal_form([(2, 4), (4, 8)], 2) == (2,)
    assert smith_normal_form([(1, 0), (0, 1)], 2) == (1, 1)
    assert smith_normal_form([(6,)], 1) == (6,)
    assert smith_normal_form([], 3) == ()
    # divisibility is enforced, not just diagonalization
    assert smith_normal_form([(2, 0), (0, 3)], 2) == (1, 6)


def test_cokernel_invariants_known():
    # Z^2 / <2e1, 2e2> = Z/2 x Z/2
    assert cokernel_invariants([(2, 0), (0, 2)], 2) == (2, 2)
    # Z^2 / <e1> = Z: one free rank
    assert cokernel_invariants([(1, 0)], 2) == (0,)
    # trivial quotient
    assert cokernel_invariants([(1, 0), (0, 1)], 2) == ()
    # no relations at all: free of rank 2
    assert cokernel_invariants([], 2) == (0, 0)


@settings(deadline=None, max_examples=200)
@given(
    st.integers(1, 4).flatmap(
        lambda rows: st.integers(1, 4).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
                min_size=rows, max_size=rows,
            )
        )
    )
)
def test_snf_matches_sympy(rows):
    ncols = len(rows[0])
    ours = smith_normal_form(rows, ncols)
    theirs = tuple(int(d) for d in sympy_snf(sympy.Matrix(rows)).diagonal() if int(d) != 0)
    # sympy may report negative invariants for some inputs; compare magnitudes
    assert ours == tuple(abs(d) for d in theirs)


def _table_group(n, pairs):
    """Addition on 0..n-1 given as a dict from (a, b)."""
    return lambda a, b: pairs[(a, b)]


def test_group_presentation_cyclic():
    add = lambda a, b: (a + b) % 4
    gens, expr, rels = group_presentation(4, add, 0)
    assert len(gens) == 1
    # every element expressed over the generator; relation kills 4g
    assert sorted(expr) == [0, 1, 2, 3]
    assert cokernel_invariants(rels, len(gens)) == (4,)


def test_group_presentation_klein():
    add = lambda a, b: a ^ b
    gens, expr, rels = group_presentation(4, add, 0)
    assert len(gens) == 2
    assert cokernel_invariants(rels, len(gens)) == (2, 2)


def test_group_presentation_trivial():
    gens, expr, rels = group_presentation(1, lambda a, b: 0, 0)
    assert gens == [] or gens == ()
    assert rels == [] or rels == ()
    assert dict(expr) == {0: ()}


@settings(deadline=None, max_examples=50)
@given(st.integers(2, 24))
def test_group_presentation_recovers_cyclic_order(n):
    add = lambda a, b: (a + b) % n
    gens, expr, rels = group_presentation(n, add, 0)
    assert cokernel_invariants(rels, len(gens)) == (n,)
    # expressions must be consistent: expr[a] + expr[b] = expr[a+b] mod rels
    # spot check via the generator coefficient sums for a cyclic group
    g = gens[0]
    assert expr[g] == (1,)


def test_presentation_expressions_cover_product_group():
    # Z/2 x Z/4 as index pairs a*4+b
    def add(x, y):
        a1, b1 = divmod(x, 4)
        a2, b2 = divmod(y, 4)
        return ((a1 + a2) % 2) * 4 + (b1 + b2) % 4

    gens, expr, rels = group_presentation(8, add, 0)
    assert sorted(expr) == list(range(8))
    assert cokernel_invariants(rels, len(gens)) == (2, 4)
