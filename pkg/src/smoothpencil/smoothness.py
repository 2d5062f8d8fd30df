"""Smoothness of hypersurfaces {F = 0} over the algebraic closure.

Three oracles:

* ``quadric_is_smooth``: exact, degree 2, via the kernel of the matrix of
  partial derivatives.
* ``brute_is_smooth``: searches P^n(GF(q^m)) for m = 1..B for a common zero of
  F and its partials.  A clean search only certifies smoothness up to B,
  which the verdict records.
* ``macaulay_is_smooth``: exact for any degree.  F and its partials have no
  common projective zero iff the ideal they generate contains every monomial
  of degree D, where D is Lazard's bound (sum of the n+1 largest generator
  degrees minus n); that is a rank computation over F_q.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .gf import FieldCtx, Q_MAX, embedding, extension
from .linalg import kernel, rank, rank_mod_p
from .mpoly import HomForm, monomial_index, monomials, restrict_to_line
from .projspace import count_points, iter_point_coords, normalize, point_at

SMOOTH = "smooth"
SINGULAR = "singular"
INCONCLUSIVE = "inconclusive"

DEFAULT_WORK_CAP = 10**9


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: str
    witness: Optional[tuple[int, ...]] = None
    witness_field: Optional[FieldCtx] = None
    # m such that the witness lives in GF(q^m)
    extension_degree: Optional[int] = None
    searched_up_to: Optional[int] = None
    method: str = ""

    @property
    def smooth(self) -> bool:
        return self.status == SMOOTH

    def to_dict(self) -> dict:
        out = {"status": self.status, "method": self.method}
        if self.witness is not None:
            out["witness"] = {"extension_degree": self.extension_degree,
                              "field": self.witness_field.spec,
                              "coords": list(self.witness)}
        if self.searched_up_to is not None:
            out["searched_up_to"] = self.searched_up_to
        return out


def _singular(F, pt, fld, method, searched=None):
    m = fld.r // F.ctx.r
    return SmoothnessVerdict(SINGULAR, tuple(normalize(fld, pt)), fld, m, searched, method)


def is_witness(F: HomForm, pt, fld: FieldCtx | None = None) -> bool:
    """Independent re-check: F and every partial vanish at ``pt``."""
    if not any(pt):
        return False
    fld = fld or F.ctx
    return F.eval(pt, fld) == 0 and all(g.eval(pt, fld) == 0 for g in F.gradient())


# --- quadrics --------------------------------------------------------------

def partial_matrix(F: HomForm) -> list[list[int]]:
    """Row i holds the coefficients of the linear form dF/dx_i."""
    n1 = F.nvars
    rows = []
    for i in range(n1):
        g = F.partial(i)
        row = [0] * n1
        for e, c in g.terms.items():
            row[e.index(1)] = c
        rows.append(row)
    return rows


def _combine(ctx, coeffs, vectors):
    out = [0] * len(vectors[0])
    for a, v in zip(coeffs, vectors):
        if a:
            out = [ctx.add(x, ctx.mul(a, y)) for x, y in zip(out, v)]
    return out


def quadric_is_smooth(F: HomForm) -> SmoothnessVerdict:
    if F.degree != 2:
        raise ValueError("quadric oracle needs a degree-2 form")
    ctx = F.ctx
    K = kernel(ctx, partial_matrix(F), F.nvars)
    ev = F.evaluator()
    if not K:
        return SmoothnessVerdict(SMOOTH, method="quadric")
    for v in K:
        if ev(v) == 0:
            return _singular(F, v, ctx, "quadric")
    if len(K) == 1:
        return SmoothnessVerdict(SMOOTH, method="quadric")
    if len(K) >= 3:
        # a quadratic form in >= 3 variables has a nontrivial zero over F_q
        for c in iter_point_coords(ctx, 2):
            v = _combine(ctx, c, K[:3])
            if ev(v) == 0:
                return _singular(F, v, ctx, "quadric")
        raise AssertionError("Chevalley-Warning violated")  # pragma: no cover
    g = restrict_to_line(F, K[0], K[1])
    roots = g.roots()
    if roots:
        s, t = roots[0]
        return _singular(F, _combine(ctx, (s, t), K), ctx, "quadric")
    if ctx.q**2 > Q_MAX:
        return SmoothnessVerdict(SINGULAR, method="quadric")
    ext = extension(ctx, 2)
    gx = F.over(ext)
    img = embedding(ctx, ext)
    v0, v1 = [img[x] for x in K[0]], [img[x] for x in K[1]]
    for x in range(ext.q):
        v = [ext.add(ext.mul(x, a), b) for a, b in zip(v0, v1)]
        if gx.eval(v) == 0:
            return _singular(F, v, ext, "quadric")
    raise AssertionError("binary quadratic without a root in GF(q^2)")  # pragma: no cover


# --- bounded search --------------------------------------------------------

def _scan(evals, ext, n, start, stop):
    for idx in range(start, stop):
        pt = point_at(ext, n, idx)
        if all(ev(pt) == 0 for ev in evals):
            return idx
    return None


def _first_common_zero(F, ext, threads=1):
    """Smallest enumeration index of a point of P^n(ext) where F and all partials vanish."""
    n = F.nvars - 1
    evals = [F.evaluator(ext)] + [g.evaluator(ext) for g in F.gradient() if not g.is_zero()]
    total = count_points(ext.q, n)
    if threads <= 1:
        for idx, pt in enumerate(iter_point_coords(ext, n)):
            if all(ev(pt) == 0 for ev in evals):
                return pt
        return None
    step = -(-total // threads)
    ranges = [(s, min(s + step, total)) for s in range(0, total, step)]
    with ThreadPoolExecutor(threads) as pool:
        hits = list(pool.map(lambda rg: _scan(evals, ext, n, *rg), ranges))
    found = [h for h in hits if h is not None]
    return point_at(ext, n, min(found)) if found else None


def brute_is_smooth(F: HomForm, bound: int | None = None, work_cap: int = DEFAULT_WORK_CAP,
                    delegate_quadrics: bool = True, threads: int = 1) -> SmoothnessVerdict:
    if F.degree < 1:
        raise ValueError("brute oracle needs degree >= 1")
    n = F.nvars - 1
    B = bound if bound is not None else max(1, (F.degree - 1) ** n)
    work = 0
    for m in range(1, B + 1):
        if F.ctx.q**m > Q_MAX:
            return SmoothnessVerdict(INCONCLUSIVE, searched_up_to=m - 1, method="brute")
        ext = extension(F.ctx, m)
        work += count_points(ext.q, n) * (n + 2)
        if work > work_cap:
            return SmoothnessVerdict(INCONCLUSIVE, searched_up_to=m - 1, method="brute")
        pt = _first_common_zero(F, ext, threads)
        if pt is not None:
            return _singular(F, pt, ext, "brute", m)
    if F.degree == 2 and delegate_quadrics:
        v = quadric_is_smooth(F)
        return SmoothnessVerdict(v.status, v.witness, v.witness_field, v.extension_degree, B,
                                 "brute+quadric")
    return SmoothnessVerdict(SMOOTH, searched_up_to=B, method="brute")


# --- Macaulay matrix -------------------------------------------------------

def lazard_degree(F: HomForm) -> int:
    d, n = F.degree, F.nvars - 1
    return d + n * (d - 1) - n


def macaulay_is_smooth(F: HomForm, witness_search: int = 2,
                       witness_work_cap: int = 10**7) -> SmoothnessVerdict:
    """Exact smoothness test by linear algebra over F_q.

    A singular verdict carries a witness when one turns up in P^n(GF(q^m))
    for m <= ``witness_search``; otherwise the witness is left empty.
    """
    ctx, n1, d = F.ctx, F.nvars, F.degree
    if F.is_zero():
        return _singular(F, (1,) + (0,) * (n1 - 1), ctx, "macaulay")
    if d == 1:
        return SmoothnessVerdict(SMOOTH, method="macaulay")
    gens = [F] + [g for g in F.gradient() if not g.is_zero()]
    if len(gens) >= n1:
        D = lazard_degree(F)
        cols = monomial_index(n1, D)
        rows = []
        for g in gens:
            for mu in monomials(n1, D - g.degree):
                row = [0] * len(cols)
                for e, c in g.terms.items():
                    row[cols[tuple(a + b for a, b in zip(e, mu))]] = c
                rows.append(row)
        rk = rank_mod_p(rows, ctx.p) if ctx.r == 1 else rank(ctx, rows)
        if rk == len(cols):
            return SmoothnessVerdict(SMOOTH, method="macaulay")
    # fewer than n+1 generators always have a common projective zero
    if witness_search:
        v = brute_is_smooth(F, bound=witness_search, work_cap=witness_work_cap,
                            delegate_quadrics=False)
        if v.status == SINGULAR:
            return SmoothnessVerdict(SINGULAR, v.witness, v.witness_field, v.extension_degree,
                                     method="macaulay")
    return SmoothnessVerdict(SINGULAR, method="macaulay")


def is_smooth(F: HomForm, method: str = "auto", **kw) -> SmoothnessVerdict:
    """Dispatch: ``auto`` uses the quadric oracle for d = 2 and Macaulay otherwise."""
    if method == "auto":
        method = "quadric" if F.degree == 2 else "macaulay"
    if method == "quadric":
        return quadric_is_smooth(F)
    if method == "brute":
        return brute_is_smooth(F, **kw)
    if method == "macaulay":
        return macaulay_is_smooth(F, **kw)
    raise ValueError(f"unknown smoothness oracle {method!r}")


def is_geom_irreducible_if_smooth(F: HomForm, method: str = "auto") -> Optional[bool]:
    """True when F is a certified-smooth plane curve, None when undecided."""
    if F.nvars != 3:
        raise ValueError("plane curves only")
    return True if is_smooth(F, method).status == SMOOTH else None


def random_smooth_forms(ctx: FieldCtx, nvars: int, degree: int, count: int, seed: int = 0,
                        method: str = "auto", max_draws: int = 10_000) -> list[HomForm]:
    """``count`` certified-smooth forms drawn with a generator keyed by (seed, draw)."""
    import numpy as np

    out = []
    ncoef = len(monomials(nvars, degree))
    for draw in range(max_draws):
        rng = np.random.default_rng([seed, draw])
        F = HomForm.from_vector(ctx, nvars, degree, rng.integers(0, ctx.q, size=ncoef).tolist())
        if not F.is_zero() and is_smooth(F, method).status == SMOOTH:
            out.append(F)
            if len(out) == count:
                return out
    raise RuntimeError(f"only {len(out)} smooth forms in {max_draws} draws")
