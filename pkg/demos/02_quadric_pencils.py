"""Pencils of quadric surfaces with every F_q-member smooth, for odd and even q.

The determinant of the partial-derivative matrix of s*f0 + t*f1 is a binary
quartic in (s, t).  Its factors have no F_q-roots, so no member is singular.

Run:  python demos/02_quadric_pencils.py
"""

from smoothpencil import field_from_spec
from smoothpencil.constructions import (
    build_pencil,
    determinant_factors,
    determinant_matrix,
    factor_discriminants,
)
from smoothpencil.linsys import verify_all_smooth
from smoothpencil.mpoly import det_linear_matrix

for q in (3, 5, 9, 4, 16):
    ctx = field_from_spec(q)
    recipe = build_pencil(ctx)
    rep = verify_all_smooth(recipe.system, exhaustive=True)
    det = det_linear_matrix(determinant_matrix(recipe))
    f, g = determinant_factors(recipe)
    print(f"q = {q:3d} ({recipe.parity}), c = {recipe.c}")
    print(f"    f0 = {recipe.f0.to_text()}")
    print(f"    f1 = {recipe.f1.to_text()}")
    print(f"    det = ({f.to_text()}) * ({g.to_text()})  ->  {det == f * g}")
    if recipe.parity == "odd":
        d1, d2 = factor_discriminants(recipe)
        print(f"    factor discriminants {d1}, {d2}: square? {ctx.is_square(d1)}, {ctx.is_square(d2)}")
    print(f"    smooth members: {rep.smooth_count}/{rep.total_members}\n")
