"""Explicit pencils of quadric surfaces with every F_q-member smooth.

Odd q:   f0 = x^2 + y^2 + z^2 + w^2,   f1 = xy + yz + zw + c*wx
         with c^2 - 2c + 5 a non-square.
Even q:  f0 = x^2 + y^2 + xy + yz + c*zw,   f1 = x^2 + z^2 + yz + xw
         with t^2 + t + c irreducible.

Variables (x, y, z, w) are x0..x3.  Also provides the F_2 net of conics
whose seven members are all smooth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldCtx, make_field
from .linsys import LinearSystem, verify_all_smooth
from .mpoly import BiForm, HomForm, det_linear_matrix, parse_form


def find_shift_c_odd(ctx: FieldCtx) -> int:
    """c with c^2 - 2c + 5 a non-square, reached through a square s = b^2 with s + 1 non-square."""
    if ctx.p == 2:
        raise ValueError("odd characteristic required")
    for b in range(ctx.q):
        s = ctx.mul(b, b)
        if not ctx.is_square(ctx.add(s, 1)):
            c = ctx.add(ctx.mul(2, b), 1)
            val = ctx.add(ctx.sub(ctx.mul(c, c), ctx.mul(2, c)), ctx.from_int(5))
            if ctx.is_square(val):
                raise AssertionError(f"c^2-2c+5 is a square for c={c}")
            return c
    raise AssertionError(f"every square s in {ctx} has s+1 square")


def find_artin_schreier_c(ctx: FieldCtx) -> int:
    """Smallest-code c making t^2 + t + c rootless over F_q; checked against Tr(c) = 1."""
    if ctx.p != 2:
        raise ValueError("characteristic 2 required")
    roots_of = {ctx.add(ctx.mul(t, t), t) for t in range(ctx.q)}
    for c in range(ctx.q):
        # t^2 + t + c = 0  <=>  t^2 + t = c in characteristic 2
        rootless = c not in roots_of
        if rootless != (ctx.trace(c) == 1):
            raise AssertionError(f"root test and trace test disagree at c={c}")
        if rootless:
            return c
    raise AssertionError(f"no irreducible t^2+t+c over {ctx}")


def artin_schreier_count(ctx: FieldCtx) -> int:
    """Number of c for which t^2 + t + c has no root in F_q."""
    vals = {ctx.add(ctx.mul(t, t), t) for t in range(ctx.q)}
    return ctx.q - len(vals)


@dataclass(frozen=True)
class QuadricPencilRecipe:
    ctx: FieldCtx
    parity: str
    c: int
    f0: HomForm
    f1: HomForm

    @property
    def system(self) -> LinearSystem:
        return LinearSystem(self.ctx, 3, 2, (self.f0, self.f1))

    def to_dict(self) -> dict:
        return {"field": self.ctx.spec, "q": self.ctx.q, "parity": self.parity, "c": self.c,
                "f0": self.f0.to_text(), "f1": self.f1.to_text()}


def build_odd_pencil(ctx: FieldCtx) -> QuadricPencilRecipe:
    if ctx.p == 2:
        raise ValueError("odd q required")
    c = find_shift_c_odd(ctx)
    f0 = parse_form("x0^2 + x1^2 + x2^2 + x3^2", ctx)
    f1 = parse_form("x0*x1 + x1*x2 + x2*x3", ctx, nvars=4) + \
        HomForm(ctx, 4, 2, {(1, 0, 0, 1): c})
    return QuadricPencilRecipe(ctx, "odd", c, f0, f1)


def build_even_pencil(ctx: FieldCtx) -> QuadricPencilRecipe:
    if ctx.p != 2:
        raise ValueError("even q required")
    c = find_artin_schreier_c(ctx)
    f0 = parse_form("x0^2 + x1^2 + x0*x1 + x1*x2", ctx, nvars=4) + \
        HomForm(ctx, 4, 2, {(0, 0, 1, 1): c})
    f1 = parse_form("x0^2 + x2^2 + x1*x2 + x0*x3", ctx)
    return QuadricPencilRecipe(ctx, "even", c, f0, f1)


def build_pencil(ctx: FieldCtx) -> QuadricPencilRecipe:
    return build_even_pencil(ctx) if ctx.p == 2 else build_odd_pencil(ctx)


def determinant_matrix(recipe: QuadricPencilRecipe) -> list[list[BiForm]]:
    """The 4x4 matrix of linear forms in (s, t) whose rows are the partials of s*f0 + t*f1."""
    ctx, c = recipe.ctx, recipe.c
    z = BiForm(ctx, (0, 0))
    s = BiForm(ctx, (1, 0))
    t = BiForm(ctx, (0, 1))
    if recipe.parity == "odd":
        two_s = BiForm(ctx, (ctx.from_int(2), 0))
        ct = BiForm(ctx, (0, c))
        return [[two_s, t, z, ct],
                [t, two_s, t, z],
                [z, t, two_s, t],
                [ct, z, t, two_s]]
    st = BiForm(ctx, (1, 1))
    cs = BiForm(ctx, (c, 0))
    return [[z, s, z, t],
            [s, z, st, z],
            [z, st, z, cs],
            [t, z, cs, z]]


def determinant_factors(recipe: QuadricPencilRecipe) -> list[BiForm]:
    """The quadratic factors of the determinant as displayed for each parity."""
    ctx, c = recipe.ctx, recipe.c
    if recipe.parity == "odd":
        lead = ctx.sub(1, c)
        mid = ctx.mul(ctx.from_int(2), ctx.add(c, 1))
        four = ctx.neg(ctx.from_int(4))
        # coefficients of s^2, st, t^2
        return [BiForm(ctx, (four, mid, lead)), BiForm(ctx, (four, ctx.neg(mid), lead))]
    q = BiForm(ctx, (c, 1, 1))
    return [q, q]


def matrix_matches_partials(recipe: QuadricPencilRecipe) -> bool:
    """Check the displayed matrix against the partials of s*f0 + t*f1 at every [s:t]."""
    from .smoothness import partial_matrix
    ctx = recipe.ctx
    M = determinant_matrix(recipe)
    for s, t in [(1, 0)] + [(x, 1) for x in range(ctx.q)]:
        h = recipe.f0.scale(s) + recipe.f1.scale(t)
        if partial_matrix(h) != [[e.eval(s, t) for e in row] for row in M]:
            return False
    return True


def verify_determinant_factorization(recipe: QuadricPencilRecipe) -> bool:
    det = det_linear_matrix(determinant_matrix(recipe))
    f1, f2 = determinant_factors(recipe)
    return det == f1 * f2


def factor_discriminants(recipe: QuadricPencilRecipe) -> list[int]:
    """b^2 - 4ac of each quadratic factor (odd q)."""
    ctx = recipe.ctx
    out = []
    for f in determinant_factors(recipe):
        a, b, cc = f.coeffs
        out.append(ctx.sub(ctx.mul(b, b), ctx.mul(ctx.from_int(4), ctx.mul(a, cc))))
    return out


def example_f2_conic_net() -> LinearSystem:
    F2 = make_field(2)
    forms = [parse_form(s, F2) for s in ("x0^2 + x1^2 + x0*x2",
                                         "x0*x1 + x0*x2 + x2^2",
                                         "x0^2 + x1*x2")]
    return LinearSystem(F2, 2, 2, tuple(forms))


def construct_report(ctx: FieldCtx, method: str = "auto") -> dict:
    recipe = build_pencil(ctx)
    rep = verify_all_smooth(recipe.system, method, exhaustive=True)
    out = recipe.to_dict()
    out.update(members=rep.total_members, smooth=rep.smooth_count, all_smooth=rep.all_smooth,
               det_factorization_ok=verify_determinant_factorization(recipe))
    return out
