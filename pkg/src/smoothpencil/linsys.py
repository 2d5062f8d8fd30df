"""Linear systems of hypersurfaces: members, all-smooth checks and searches."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Optional

import numpy as np

from .gf import FieldCtx
from .linalg import rank, rref
from .mpoly import HomForm, lincomb, monomials
from .projspace import ProjPoint, count_points, iter_point_coords, normalize
from .smoothness import INCONCLUSIVE, SINGULAR, SMOOTH, SmoothnessVerdict, is_smooth

DEFAULT_SEARCH_CAP = 10**7


@dataclass(frozen=True)
class LinearSystem:
    """The span of r+1 linearly independent degree-d forms in n+1 variables."""

    ctx: FieldCtx
    n: int
    d: int
    generators: tuple[HomForm, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a linear system needs at least one generator")
        for g in gens:
            if (g.ctx, g.nvars, g.degree) != (self.ctx, self.n + 1, self.d):
                raise ValueError("generator does not match the system's field, n or d")
        if rank(self.ctx, [g.vector() for g in gens]) != len(gens):
            raise ValueError("generators are linearly dependent")

    @classmethod
    def of(cls, forms) -> "LinearSystem":
        forms = tuple(forms)
        f = forms[0]
        return cls(f.ctx, f.nvars - 1, f.degree, forms)

    @property
    def r(self) -> int:
        return len(self.generators) - 1

    @property
    def total_members(self) -> int:
        return count_points(self.ctx.q, self.r)

    def span_key(self) -> tuple:
        return span_key(self.ctx, [g.vector() for g in self.generators])


def span_key(ctx: FieldCtx, vectors) -> tuple:
    red, _ = rref(ctx, vectors)
    return tuple(tuple(row) for row in red)


def members(S: LinearSystem) -> Iterator[tuple[ProjPoint, HomForm]]:
    for a in iter_point_coords(S.ctx, S.r):
        yield ProjPoint(S.ctx, a), lincomb(a, S.generators)


@dataclass
class SystemReport:
    total_members: int
    smooth_count: int = 0
    checked: int = 0
    first_singular_member: Optional[tuple[tuple[int, ...], SmoothnessVerdict]] = None
    first_inconclusive_member: Optional[tuple[tuple[int, ...], SmoothnessVerdict]] = None

    @property
    def all_smooth(self) -> bool:
        return self.smooth_count == self.total_members

    @property
    def status(self) -> str:
        if self.all_smooth:
            return "all_smooth"
        if self.first_singular_member is not None:
            return "singular_member"
        return "inconclusive"

    def to_dict(self) -> dict:
        out = {"status": self.status, "total_members": self.total_members,
               "checked": self.checked, "smooth_count": self.smooth_count,
               "all_smooth": self.all_smooth}
        for key, val in (("first_singular_member", self.first_singular_member),
                         ("first_inconclusive_member", self.first_inconclusive_member)):
            if val is not None:
                out[key] = {"coefficients": list(val[0]), "verdict": val[1].to_dict()}
        return out


def verify_all_smooth(S: LinearSystem, method: str = "auto", exhaustive: bool = False,
                      threads: int = 1, **oracle_kw) -> SystemReport:
    """Run the smoothness oracle on every F_q-member.

    Without ``exhaustive`` the scan stops at the first singular or
    inconclusive member; ``checked`` says how far it got.
    """
    report = SystemReport(S.total_members)
    pts = list(iter_point_coords(S.ctx, S.r))

    def check(a):
        return is_smooth(lincomb(a, S.generators), method, **oracle_kw)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            verdicts = pool.map(check, pts)
            pairs = list(zip(pts, verdicts))
    else:
        pairs = ((a, check(a)) for a in pts)
    for a, v in pairs:
        report.checked += 1
        if v.status == SMOOTH:
            report.smooth_count += 1
            continue
        if v.status == SINGULAR and report.first_singular_member is None:
            report.first_singular_member = (a, v)
        elif v.status == INCONCLUSIVE and report.first_inconclusive_member is None:
            report.first_inconclusive_member = (a, v)
        if not exhaustive:
            break
    return report


def enumerate_smooth_forms(ctx: FieldCtx, n: int, d: int, method: str = "auto",
                           work_cap: int = DEFAULT_SEARCH_CAP, **oracle_kw) -> list[HomForm]:
    """All smooth degree-d forms in n+1 variables, one per projective class."""
    N = len(monomials(n + 1, d)) - 1
    if count_points(ctx.q, N) > work_cap:
        raise ValueError(f"{count_points(ctx.q, N)} form classes exceed the work cap {work_cap}")
    out = []
    for vec in iter_point_coords(ctx, N):
        F = HomForm.from_vector(ctx, n + 1, d, vec)
        if is_smooth(F, method, **oracle_kw).status == SMOOTH:
            out.append(F)
    return out


@dataclass
class SearchResult:
    strategy: str
    systems: list[LinearSystem] = field(default_factory=list)
    smooth_forms: Optional[int] = None
    subsets_examined: int = 0
    independent_subsets: int = 0
    valid_subsets: int = 0
    trials: int = 0

    def to_dict(self) -> dict:
        out = {"strategy": self.strategy, "systems_found": len(self.systems),
               "systems": [[g.to_text() for g in S.generators] for S in self.systems]}
        if self.strategy == "exhaustive":
            out.update(smooth_forms=self.smooth_forms, subsets_examined=self.subsets_examined,
                       independent_subsets=self.independent_subsets,
                       valid_subsets=self.valid_subsets, distinct_spans=len(self.systems))
        else:
            out["trials"] = self.trials
        return out


def _scan_subsets(ctx, vecs, smooth_keys, r, coeff_pts, firsts):
    """Valid subsets (as index tuples) whose first index lies in ``firsts``."""
    k = r + 1
    found = []
    examined = independent = 0
    add, mul = ctx.add, ctx.mul
    for i in firsts:
        for rest in combinations(range(i + 1, len(vecs)), k - 1):
            idx = (i,) + rest
            examined += 1
            gens = [vecs[j] for j in idx]
            if rank(ctx, gens) < k:
                continue
            independent += 1
            ok = True
            for a in coeff_pts:
                v = [0] * len(gens[0])
                for c, g in zip(a, gens):
                    if c:
                        v = [add(x, mul(c, y)) for x, y in zip(v, g)]
                if normalize(ctx, v) not in smooth_keys:
                    ok = False
                    break
            if ok:
                found.append(idx)
    return found, examined, independent


def search_all_smooth(ctx: FieldCtx, n: int, d: int, r: int, strategy: str = "exhaustive",
                      seed: int = 0, max_trials: int = 10_000, cap: int = DEFAULT_SEARCH_CAP,
                      method: str = "auto", threads: int = 1) -> SearchResult:
    """Look for r-dimensional systems of degree-d forms whose F_q-members are all smooth.

    ``exhaustive`` draws generators from the complete list of smooth forms
    (every generator is itself a member) and examines every (r+1)-subset;
    spans are deduplicated by their reduced row echelon form.  ``random``
    samples generator tuples with a generator keyed by (seed, trial) and
    stops at the first success.
    """
    if strategy == "exhaustive":
        smooth = enumerate_smooth_forms(ctx, n, d, method, work_cap=cap)
        total = comb(len(smooth), r + 1)
        if total > cap:
            raise ValueError(f"{total} candidate subsets exceed the cap {cap}")
        vecs = [F.vector() for F in smooth]
        # the smooth list is complete, so member smoothness is a set lookup
        smooth_keys = set(vecs)
        coeff_pts = [a for a in iter_point_coords(ctx, r) if sum(1 for c in a if c) > 1]
        firsts = range(len(vecs))
        if threads > 1:
            parts = [firsts[i::threads] for i in range(threads)]
            with ThreadPoolExecutor(threads) as pool:
                outs = list(pool.map(
                    lambda fs: _scan_subsets(ctx, vecs, smooth_keys, r, coeff_pts, fs), parts))
        else:
            outs = [_scan_subsets(ctx, vecs, smooth_keys, r, coeff_pts, firsts)]
        res = SearchResult("exhaustive", smooth_forms=len(smooth))
        found = sorted(idx for o in outs for idx in o[0])
        res.subsets_examined = sum(o[1] for o in outs)
        res.independent_subsets = sum(o[2] for o in outs)
        res.valid_subsets = len(found)
        seen = set()
        for idx in found:
            key = span_key(ctx, [vecs[j] for j in idx])
            if key not in seen:
                seen.add(key)
                res.systems.append(LinearSystem(ctx, n, d, tuple(smooth[j] for j in idx)))
        return res

    if strategy == "random":
        ncoef = len(monomials(n + 1, d))
        res = SearchResult("random")
        for trial in range(max_trials):
            res.trials = trial + 1
            rng = np.random.default_rng([seed, trial])
            rows = rng.integers(0, ctx.q, size=(r + 1, ncoef)).tolist()
            if rank(ctx, rows) < r + 1:
                continue
            S = LinearSystem(ctx, n, d, tuple(HomForm.from_vector(ctx, n + 1, d, row) for row in rows))
            if verify_all_smooth(S, method, threads=threads).all_smooth:
                res.systems.append(S)
                break
        return res

    raise ValueError(f"unknown search strategy {strategy!r}")
