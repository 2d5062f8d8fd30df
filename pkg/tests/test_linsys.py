import random

import pytest

from smoothpencil.constructions import build_even_pencil, example_f2_conic_net
from smoothpencil.gf import make_field
from smoothpencil.linalg import rank
from smoothpencil.linsys import (
    LinearSystem,
    _scan_subsets,
    enumerate_smooth_forms,
    members,
    search_all_smooth,
    verify_all_smooth,
)
from smoothpencil.mpoly import HomForm, lincomb, parse_form
from smoothpencil.projspace import iter_point_coords
from smoothpencil.smoothness import INCONCLUSIVE

F2, F3 = make_field(2), make_field(3)


def conic_net():
    return [parse_form(s, F2) for s in ("x0^2 + x1^2 + x0*x2", "x0*x1 + x0*x2 + x2^2", "x0^2 + x1*x2")]


def test_members_counts():
    f = conic_net()
    pencil = LinearSystem.of(f[:2])
    got = [F for _, F in members(pencil)]
    assert len(got) == 3 and set(got) == {f[0], f[1], f[0] + f[1]}
    net = LinearSystem.of(f)
    want = {f[0], f[1], f[2], f[0] + f[1], f[0] + f[2], f[1] + f[2], f[0] + f[1] + f[2]}
    assert {F for _, F in members(net)} == want
    web = LinearSystem.of(f + [parse_form("x1^2", F2, nvars=3)])
    ms = [F for _, F in members(web)]
    assert len(ms) == len(set(ms)) == 15 == web.total_members


def test_generators_must_be_independent():
    f = conic_net()
    with pytest.raises(ValueError):
        LinearSystem.of([f[0], f[1], f[0] + f[1]])
    with pytest.raises(ValueError):
        LinearSystem.of([f[0], parse_form("x0^3", F2, nvars=3)])


def test_verify_examples():
    rep = verify_all_smooth(example_f2_conic_net(), exhaustive=True)
    assert (rep.total_members, rep.smooth_count, rep.all_smooth) == (7, 7, True)
    rep = verify_all_smooth(build_even_pencil(make_field(2, 2)).system, exhaustive=True)
    assert (rep.total_members, rep.smooth_count) == (5, 5)
    bad = LinearSystem.of([parse_form("x0^2", F3, nvars=3), parse_form("x1^2", F3, nvars=3)])
    rep = verify_all_smooth(bad)
    assert rep.status == "singular_member" and rep.checked == 1
    assert rep.first_singular_member is not None
    assert verify_all_smooth(bad, exhaustive=True).smooth_count == 0


def test_inconclusive_is_its_own_state():
    G = [parse_form("x0^3 + x1^3 + x2^3", F3), parse_form("x0^2*x1 + x2^3", F3)]
    rep = verify_all_smooth(LinearSystem.of(G), method="brute", work_cap=10)
    assert rep.status == INCONCLUSIVE
    assert not rep.all_smooth


def test_report_invariants():
    S = LinearSystem.of([parse_form("x0^2 + x1*x2", F3), parse_form("x1^2 + x0*x2", F3)])
    rep = verify_all_smooth(S, exhaustive=True)
    assert rep.smooth_count <= rep.total_members == 4
    assert rep.all_smooth == (rep.smooth_count == rep.total_members)


def _random_invertible(ctx, k, rng):
    while True:
        M = [[rng.randrange(ctx.q) for _ in range(k)] for _ in range(k)]
        if rank(ctx, M) == k:
            return M


@pytest.mark.parametrize("q", [2, 3, 5])
def test_report_invariant_under_basis_change(q):
    ctx = make_field(q)
    rng = random.Random(q)
    for _ in range(6):
        gens = []
        while len(gens) < 3 or rank(ctx, [g.vector() for g in gens]) < 3:
            gens = [HomForm.from_vector(ctx, 3, 2, [rng.randrange(q) for _ in range(6)]) for _ in range(3)]
        S = LinearSystem.of(gens)
        M = _random_invertible(ctx, 3, rng)
        T = LinearSystem.of([lincomb(row, gens) for row in M])
        a, b = verify_all_smooth(S, exhaustive=True), verify_all_smooth(T, exhaustive=True)
        assert (a.smooth_count, a.total_members) == (b.smooth_count, b.total_members)
        assert S.span_key() == T.span_key()


def test_enumerate_smooth_forms():
    assert len(enumerate_smooth_forms(F2, 2, 2)) == 28
    assert len(enumerate_smooth_forms(F2, 2, 1)) == 7
    with pytest.raises(ValueError):
        enumerate_smooth_forms(make_field(5), 2, 3, work_cap=1000)


def test_exhaustive_net_search_finds_the_example():
    res = search_all_smooth(F2, 2, 2, 2, "exhaustive")
    assert res.smooth_forms == 28 and res.valid_subsets > 0
    keys = {S.span_key() for S in res.systems}
    assert len(keys) == len(res.systems)
    assert example_f2_conic_net().span_key() in keys
    for S in res.systems:
        assert verify_all_smooth(S, exhaustive=True).all_smooth


def test_exhaustive_web_search_is_empty_in_any_order():
    smooth = enumerate_smooth_forms(F2, 2, 2)
    vecs = [F.vector() for F in smooth]
    keys = set(vecs)
    coeff = [a for a in iter_point_coords(F2, 3) if sum(1 for c in a if c) > 1]
    for seed in range(3):
        random.Random(seed).shuffle(vecs)
        found, examined, _ = _scan_subsets(F2, vecs, keys, 3, coeff, range(len(vecs)))
        assert found == [] and examined == 20475


def test_random_pencil_search_over_gf3():
    for seed in (0, 1, 2):
        res = search_all_smooth(F3, 2, 2, 1, "random", seed=seed, max_trials=10_000)
        assert res.systems and res.trials <= 10_000
        assert verify_all_smooth(res.systems[0], exhaustive=True).all_smooth
    again = search_all_smooth(F3, 2, 2, 1, "random", seed=0)
    assert again.to_dict() == search_all_smooth(F3, 2, 2, 1, "random", seed=0, threads=4).to_dict()


def test_exhaustive_pencil_search_over_gf3_confirms_existence():
    res = search_all_smooth(F3, 2, 2, 1, "exhaustive", threads=2)
    assert res.smooth_forms == 234 and res.subsets_examined == 234 * 233 // 2
    assert res.valid_subsets > 0


def test_search_thread_independence():
    a = search_all_smooth(F2, 2, 2, 2, "exhaustive", threads=1).to_dict()
    b = search_all_smooth(F2, 2, 2, 2, "exhaustive", threads=3).to_dict()
    assert a == b


def test_search_guards():
    with pytest.raises(ValueError):
        search_all_smooth(F2, 2, 2, 3, "exhaustive", cap=100)
    with pytest.raises(ValueError):
        search_all_smooth(F2, 2, 2, 1, "sideways")
