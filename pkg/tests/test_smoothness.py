import itertools
import random

import pytest
from hypothesis import given, strategies as st

from smoothpencil.gf import field_from_spec, make_field
from smoothpencil.linalg import det
from smoothpencil.linsys import enumerate_smooth_forms
from smoothpencil.mpoly import HomForm, monomials, parse_form
from smoothpencil.smoothness import (
    INCONCLUSIVE,
    SINGULAR,
    SMOOTH,
    brute_is_smooth,
    is_geom_irreducible_if_smooth,
    is_smooth,
    is_witness,
    lazard_degree,
    macaulay_is_smooth,
    partial_matrix,
    quadric_is_smooth,
    random_smooth_forms,
)

F2, F3, F5 = make_field(2), make_field(3), make_field(5)


def random_forms(ctx, nvars, degree, count, seed):
    rng = random.Random(seed)
    k = len(monomials(nvars, degree))
    return [HomForm.from_vector(ctx, nvars, degree, [rng.randrange(ctx.q) for _ in range(k)])
            for _ in range(count)]


def assert_witness_ok(F, v):
    if v.status == SINGULAR and v.witness is not None:
        assert is_witness(F, v.witness, v.witness_field)
        assert v.witness_field.q == F.ctx.q ** v.extension_degree


def test_quadric_examples():
    assert quadric_is_smooth(parse_form("x0^2 + x1^2 + x0*x2", F2)).smooth
    for ctx in (F2, F3, F5, make_field(2, 2)):
        v = quadric_is_smooth(parse_form("x0^2", ctx, nvars=3))
        assert v.status == SINGULAR and v.witness == (0, 1, 0)
    with pytest.raises(ValueError):
        quadric_is_smooth(parse_form("x0^3", F2, nvars=3))


def test_quadric_finds_witness_over_quadratic_extension():
    # x^2 + y^2 over GF(3): singular at (0,0,1) and the line pair meets over GF(9) only at it
    v = quadric_is_smooth(parse_form("x0^2 + x1^2", F3, nvars=3))
    assert v.status == SINGULAR
    assert_witness_ok(parse_form("x0^2 + x1^2", F3, nvars=3), v)
    # x^2 + y^2 + z^2 in 4 variables: kernel is spanned by e3 alone, F nonzero there
    G = parse_form("x0^2 + x1^2 + x2^2", F3, nvars=4)
    v = quadric_is_smooth(G)
    assert v.status == SINGULAR and is_witness(G, v.witness, v.witness_field)


def test_brute_examples():
    fermat = parse_form("x0^3 + x1^3 + x2^3", F5)
    v = brute_is_smooth(fermat)
    assert v.status == SMOOTH and v.searched_up_to == 4
    v = brute_is_smooth(parse_form("x0^5", F5, nvars=3))
    assert v.status == SINGULAR and v.extension_degree == 1
    cusp = parse_form("x2*x1^2 - x0^3", F5)
    v = brute_is_smooth(cusp)
    assert v.status == SINGULAR and v.witness == (0, 0, 1)


def test_brute_work_cap_gives_inconclusive():
    F = parse_form("x0^3 + x1^3 + x2^3", F5)
    v = brute_is_smooth(F, bound=4, work_cap=1000)
    assert v.status == INCONCLUSIVE and v.searched_up_to == 1
    assert "witness" not in v.to_dict()


def test_brute_thread_count_does_not_change_verdict():
    for F in random_forms(F3, 3, 3, 20, 5):
        assert brute_is_smooth(F, threads=1) == brute_is_smooth(F, threads=4)


def _all_conics_gf2():
    for vec in itertools.product(range(2), repeat=6):
        if any(vec):
            yield HomForm.from_vector(F2, 3, 2, vec)


def test_oracles_agree_on_all_conics_over_gf2():
    conics = list(_all_conics_gf2())
    assert len(conics) == 63
    for F in conics:
        a, b = quadric_is_smooth(F), brute_is_smooth(F, bound=2, delegate_quadrics=False)
        assert a.status == b.status, F
        assert_witness_ok(F, a)
        assert_witness_ok(F, b)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_oracles_agree_on_random_quadrics(q):
    ctx = field_from_spec(q)
    for nvars in (3, 4):
        for F in random_forms(ctx, nvars, 2, 60, q * 10 + nvars):
            a = quadric_is_smooth(F)
            b = brute_is_smooth(F, bound=2, delegate_quadrics=False)
            assert a.status == b.status, F
            assert_witness_ok(F, a)
            assert_witness_ok(F, b)


def test_smooth_conic_count_gf2():
    assert sum(quadric_is_smooth(F).smooth for F in _all_conics_gf2()) == 28


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25])
def test_odd_q_smooth_iff_nonzero_det(q):
    ctx = field_from_spec(q)
    for F in random_forms(ctx, 4, 2, 80, q):
        assert quadric_is_smooth(F).smooth == (det(ctx, partial_matrix(F)) != 0)


@pytest.mark.parametrize("q,count", [(2, 150), (3, 50)])
def test_macaulay_agrees_with_brute_on_plane_cubics(q, count):
    ctx = field_from_spec(q)
    for F in random_forms(ctx, 3, 3, count, q):
        a, b = macaulay_is_smooth(F), brute_is_smooth(F)
        assert a.status == b.status, F
        assert_witness_ok(F, a)


@pytest.mark.parametrize("q,nvars,degree,count", [(2, 3, 4, 40), (2, 4, 3, 25), (3, 3, 2, 50)])
def test_macaulay_agrees_with_brute_elsewhere(q, nvars, degree, count):
    ctx = field_from_spec(q)
    bound = 3 if degree > 2 else 2
    for F in random_forms(ctx, nvars, degree, count, 7 * q + degree):
        a = macaulay_is_smooth(F)
        b = brute_is_smooth(F, bound=bound, delegate_quadrics=False)
        # brute search is only complete up to its bound: a found witness must agree
        if b.status == SINGULAR:
            assert a.status == SINGULAR, F
        if degree == 2:
            assert a.status == quadric_is_smooth(F).status
        assert_witness_ok(F, a)


def test_macaulay_on_special_forms():
    assert macaulay_is_smooth(parse_form("x0^3 + x1^3 + x2^3", F5)).smooth
    assert macaulay_is_smooth(parse_form("x2*x1^2 - x0^3", F5)).status == SINGULAR
    assert macaulay_is_smooth(HomForm.zero(F5, 3, 3)).status == SINGULAR
    assert macaulay_is_smooth(parse_form("x0 + x1", F5, nvars=3)).smooth
    # a double line: the singular locus is a whole line
    assert macaulay_is_smooth(parse_form("x0^2*x1", F5, nvars=3)).status == SINGULAR
    assert lazard_degree(parse_form("x0^4", F5, nvars=3)) == 8


def test_every_singular_witness_revalidates():
    for q in (2, 3, 4, 5):
        ctx = field_from_spec(q)
        for F in random_forms(ctx, 3, 3, 25, q) + random_forms(ctx, 4, 2, 25, q):
            assert_witness_ok(F, is_smooth(F))
            if q <= 3 or F.degree == 2:
                assert_witness_ok(F, is_smooth(F, "brute"))


def test_dispatch():
    F = parse_form("x0^2 + x1*x2", F2)
    assert is_smooth(F).method == "quadric"
    assert is_smooth(parse_form("x0^3 + x1^3 + x2^3", F5)).method == "macaulay"
    with pytest.raises(ValueError):
        is_smooth(F, "nope")


def test_geometric_irreducibility_oracle():
    assert is_geom_irreducible_if_smooth(parse_form("x0^2 + x1*x2", F5)) is True
    assert is_geom_irreducible_if_smooth(parse_form("x0*x1", F5, nvars=3)) is None
    with pytest.raises(ValueError):
        is_geom_irreducible_if_smooth(parse_form("x0^2 + x1*x3", F5))


def test_random_smooth_forms_reproducible():
    a = random_smooth_forms(make_field(7), 3, 3, 3, seed=4)
    b = random_smooth_forms(make_field(7), 3, 3, 3, seed=4)
    assert a == b and all(is_smooth(F).smooth for F in a)
    assert random_smooth_forms(make_field(7), 3, 3, 3, seed=5) != a


def test_smooth_lines_and_conic_counts():
    assert len(enumerate_smooth_forms(F3, 2, 1)) == 13
    assert len(enumerate_smooth_forms(F3, 2, 2)) == 3**5 - 3**2


@given(st.sampled_from([3, 5, 7]), st.data())
def test_fermat_is_smooth_when_p_does_not_divide_degree(p, data):
    d = data.draw(st.sampled_from([x for x in (2, 3, 4) if x % p]))
    F = parse_form(" + ".join(f"x{i}^{d}" for i in range(3)), make_field(p))
    assert is_smooth(F).smooth
