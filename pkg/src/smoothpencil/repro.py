"""Reference computations; each returns a JSON-ready dict with ``pass``."""

from __future__ import annotations

from .bounds import (
    curve_prop_threshold,
    curve_threshold_dominates_kaltofen,
    quadratic_formula_step,
    side_condition_margin,
    theorem_threshold,
)
from .constructions import (
    build_even_pencil,
    build_odd_pencil,
    example_f2_conic_net,
    factor_discriminants,
    matrix_matches_partials,
    verify_determinant_factorization,
)
from .gf import field_from_spec, is_prime_power, make_field
from .incidence import check_bounds, find_avoiding_line, line_count_at, profile
from .linsys import members, search_all_smooth, verify_all_smooth
from .smoothness import random_smooth_forms

EVEN_QS = (2, 4, 8, 16, 32, 64, 128, 256)


def odd_prime_powers(max_q: int = 199) -> list[int]:
    return [q for q in range(3, max_q + 1, 2) if is_prime_power(q)]


def example_222(threads: int = 1) -> dict:
    S = example_f2_conic_net()
    rep = verify_all_smooth(S, exhaustive=True, threads=threads)
    return {"generators": [g.to_text() for g in S.generators],
            "members": rep.total_members, "smooth": rep.smooth_count,
            "member_forms": [F.to_text() for _, F in members(S)],
            "expected": {"members": 7, "smooth": 7},
            "pass": rep.total_members == 7 and rep.smooth_count == 7}


def example_223(threads: int = 1) -> dict:
    res = search_all_smooth(make_field(2), 2, 2, 3, "exhaustive", threads=threads)
    return {"smooth_forms": res.smooth_forms, "subsets": res.subsets_examined,
            "independent_subsets": res.independent_subsets, "valid": res.valid_subsets,
            "expected": {"smooth_forms": 28, "subsets": 20475, "valid": 0},
            "pass": res.smooth_forms == 28 and res.subsets_examined == 20475 and res.valid_subsets == 0}


def _pencil_rows(qs, build, threads):
    rows = []
    for q in qs:
        ctx = field_from_spec(q)
        recipe = build(ctx)
        rep = verify_all_smooth(recipe.system, exhaustive=True, threads=threads)
        rows.append({"q": q, "c": recipe.c, "members": rep.total_members, "smooth": rep.smooth_count,
                     "det_factorization_ok": verify_determinant_factorization(recipe)})
    return rows


def odd_pencils(max_q: int = 199, threads: int = 1) -> dict:
    rows = _pencil_rows(odd_prime_powers(max_q), build_odd_pencil, threads)
    ok = all(r["smooth"] == r["q"] + 1 == r["members"] and r["det_factorization_ok"] for r in rows)
    return {"fields": len(rows), "results": rows, "pass": ok}


def even_pencils(qs=EVEN_QS, threads: int = 1) -> dict:
    rows = _pencil_rows(qs, build_even_pencil, threads)
    ok = all(r["smooth"] == r["q"] + 1 == r["members"] and r["det_factorization_ok"] for r in rows)
    return {"fields": len(rows), "results": rows, "pass": ok}


def det_identities(max_odd_q: int = 199, even_qs=EVEN_QS, threads: int = 1) -> dict:
    rows = []
    for q in odd_prime_powers(max_odd_q) + list(even_qs):
        ctx = field_from_spec(q)
        recipe = build_odd_pencil(ctx) if ctx.p != 2 else build_even_pencil(ctx)
        row = {"q": q, "parity": recipe.parity, "c": recipe.c,
               "matrix_matches_partials": matrix_matches_partials(recipe),
               "det_factorization_ok": verify_determinant_factorization(recipe)}
        if recipe.parity == "odd":
            c = recipe.c
            target = ctx.mul(ctx.from_int(4), ctx.add(ctx.sub(ctx.mul(c, c), ctx.mul(2, c)), ctx.from_int(5)))
            discs = factor_discriminants(recipe)
            row["discriminants_ok"] = all(x == target and not ctx.is_square(x) for x in discs)
        rows.append(row)
    ok = all(all(v for k, v in r.items() if k.endswith("ok") or k == "matrix_matches_partials")
             for r in rows)
    return {"fields": len(rows), "results": rows, "pass": ok}


def thresholds(threads: int = 1) -> dict:
    t32 = theorem_threshold(3, 2)
    cubic = curve_prop_threshold(3)
    checks = {
        "display_839_3": t32.display == "839.3",
        "q839_fails": not t32.q_passes(839),
        "q841_passes": t32.q_passes(841),
        "smallest_passing_841": t32.smallest_passing_prime_power() == 841,
        "cubic_smallest_passing_53": cubic.smallest_passing_prime_power() == 53,
        "delta2_degenerate": curve_prop_threshold(2).integer_pair == (0, 0),
        "kaltofen_dominated_4_100": all(curve_threshold_dominates_kaltofen(d) for d in range(4, 101)),
        "quadratic_step_3_200": all(quadratic_formula_step(d) for d in range(3, 201)),
        "side_condition_3_200": all(side_condition_margin(d) for d in range(3, 201)),
    }
    return {"(3,2)": t32.display, "smallest_passing_q": t32.smallest_passing_prime_power(),
            "checks": checks, "pass": all(checks.values())}


def incidence_curves(q: int, degree: int, count: int, seed: int = 0, threads: int = 1) -> dict:
    ctx = field_from_spec(q)
    rows = []
    for C in random_smooth_forms(ctx, 3, degree, count, seed):
        prof = profile(C, threads=threads)
        bc = check_bounds(prof)
        L = find_avoiding_line(C, threads=threads)
        row = {"form": C.to_text(), "N": prof.N, "t": prof.t, "identities_ok": prof.identities_ok}
        row.update(bc.to_dict())
        row["avoiding_line"] = str(L) if L is not None else None
        row["avoiding_line_rechecked"] = L is not None and line_count_at(C, L) == 0
        rows.append(row)
    ok = all(r["passed"] and r["identities_ok"] and r["avoiding_line_rechecked"] for r in rows)
    return {"q": q, "degree": degree, "curves": rows, "pass": ok}


def incidence_53(threads: int = 1, seed: int = 0) -> dict:
    return incidence_curves(53, 3, 5, seed, threads)


TARGETS = {
    "example-222": example_222,
    "example-223": example_223,
    "odd-pencils": odd_pencils,
    "even-pencils": even_pencils,
    "det-identities": det_identities,
    "thresholds": thresholds,
    "incidence-53": incidence_53,
}
