"""Line-curve incidence statistics for plane curves over F_q.

For every line L of P^2(F_q), m_L is the number of F_q-points of C on L,
computed as the number of distinct zeros in P^1(F_q) of C restricted to L.
A line lying inside C (zero restriction) has m_L = q + 1 and is tallied in a
separate overflow bucket.  N, the number of F_q-points of C, is counted
independently by evaluating C on every point of the plane, so the three
double-counting identities are a genuine cross-check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Optional

import numpy as np

from .mpoly import HomForm, restrict_to_line
from .projspace import ProjLine, count_points, iter_point_coords, line_basis

NUMPY_CHUNK = 1 << 21


@dataclass
class IncidenceProfile:
    q: int
    delta: int
    N: int
    t: list[int]
    overflow: int = 0
    counts: Optional[list[int]] = field(default=None, repr=False)

    @property
    def t0(self) -> int:
        return self.t[0]

    def identities(self) -> dict[str, bool]:
        q, N = self.q, self.N
        big = q + 1
        lines = sum(self.t) + self.overflow
        incid = sum(i * ti for i, ti in enumerate(self.t)) + big * self.overflow
        pairs = sum(comb(i, 2) * ti for i, ti in enumerate(self.t)) + comb(big, 2) * self.overflow
        return {"lines": lines == q * q + q + 1,
                "incidences": incid == (q + 1) * N,
                "pairs": pairs == comb(N, 2)}

    @property
    def identities_ok(self) -> bool:
        return all(self.identities().values())

    def to_dict(self) -> dict:
        return {"q": self.q, "delta": self.delta, "N": self.N, "t": list(self.t),
                "overflow": self.overflow, "identities_ok": self.identities_ok}


# --- pure route ------------------------------------------------------------

def _line_count(C, coords):
    A, B = line_basis(C.ctx, coords)
    g = restrict_to_line(C, A, B)
    if g.is_zero():
        return C.ctx.q + 1
    return len(g.roots())


def _count_points_pure(C):
    ev = C.evaluator()
    return sum(1 for pt in iter_point_coords(C.ctx, 2) if ev(pt) == 0)


def _line_counts_pure(C, threads=1):
    lines = list(iter_point_coords(C.ctx, 2))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(lambda L: _line_count(C, L), lines, chunksize=256))
    return [_line_count(C, L) for L in lines]


# --- numpy route (prime fields) --------------------------------------------

def _plane_array(p):
    """All normalized points of P^2(F_p) in enumeration order, shape (p^2+p+1, 3)."""
    y, z = np.divmod(np.arange(p * p, dtype=np.int64), p)
    chart0 = np.stack([np.ones_like(y), y, z], axis=1)
    zz = np.arange(p, dtype=np.int64)
    chart1 = np.stack([np.zeros_like(zz), np.ones_like(zz), zz], axis=1)
    chart2 = np.array([[0, 0, 1]], dtype=np.int64)
    return np.concatenate([chart0, chart1, chart2])


def _conv(a, b, p):
    out = np.zeros((a.shape[0], a.shape[1] + b.shape[1] - 1), dtype=np.int64)
    for i in range(a.shape[1]):
        for j in range(b.shape[1]):
            out[:, i + j] += a[:, i] * b[:, j] % p
    return out % p


def _restricted_coeffs(C, A, B, p):
    """Coefficients (s^(d-k) t^k, k = 0..d) of C(sA + tB) for rows of A, B."""
    L = A.shape[0]
    lin = [np.stack([A[:, i], B[:, i]], axis=1) for i in range(3)]
    powers = [[np.ones((L, 1), dtype=np.int64)] for _ in range(3)]
    out = np.zeros((L, C.degree + 1), dtype=np.int64)
    for e, c in C.terms.items():
        term = np.full((L, 1), c, dtype=np.int64)
        for i, k in enumerate(e):
            while len(powers[i]) <= k:
                powers[i].append(_conv(powers[i][-1], lin[i], p))
            if k:
                term = _conv(term, powers[i][k], p)
        out = (out + term) % p
    return out


def _line_bases_array(p):
    D = _plane_array(p)
    a, b, c = D[:, 0], D[:, 1], D[:, 2]
    A = np.zeros_like(D)
    B = np.zeros_like(D)
    ch0, ch1, ch2 = a == 1, (a == 0) & (b == 1), (a == 0) & (b == 0)
    # mirrors projspace.line_basis chart by chart
    A[ch0] = np.stack([(-b[ch0]) % p, np.ones(ch0.sum(), np.int64), np.zeros(ch0.sum(), np.int64)], 1)
    B[ch0] = np.stack([(-c[ch0]) % p, np.zeros(ch0.sum(), np.int64), np.ones(ch0.sum(), np.int64)], 1)
    A[ch1] = [1, 0, 0]
    B[ch1] = np.stack([np.zeros(ch1.sum(), np.int64), (-c[ch1]) % p, np.ones(ch1.sum(), np.int64)], 1)
    A[ch2] = [1, 0, 0]
    B[ch2] = [0, 1, 0]
    return A, B


def _count_roots_chunk(g, p):
    """Distinct zeros in P^1(F_p) of each row's binary form."""
    xs = np.arange(p, dtype=np.int64)
    val = np.repeat(g[:, :1], p, axis=1)
    for k in range(1, g.shape[1]):
        val = (val * xs + g[:, k:k + 1]) % p
    return (g[:, 0] == 0).astype(np.int64) + np.count_nonzero(val == 0, axis=1)


def _line_counts_numpy(C, threads=1):
    p = C.ctx.p
    A, B = _line_bases_array(p)
    step = max(1, NUMPY_CHUNK // (p + 1))
    chunks = [(s, min(s + step, A.shape[0])) for s in range(0, A.shape[0], step)]

    def work(rg):
        s, e = rg
        g = _restricted_coeffs(C, A[s:e], B[s:e], p)
        m = _count_roots_chunk(g, p)
        m[~g.any(axis=1)] = p + 1
        return m

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(rg) for rg in chunks]
    return np.concatenate(parts)


def _count_points_numpy(C):
    p = C.ctx.p
    P = _plane_array(p)
    table = np.ones((p, C.degree + 1), dtype=np.int64)
    for k in range(1, C.degree + 1):
        table[:, k] = table[:, k - 1] * np.arange(p) % p
    val = np.zeros(P.shape[0], dtype=np.int64)
    for e, c in C.terms.items():
        term = np.full(P.shape[0], c, dtype=np.int64)
        for i, k in enumerate(e):
            if k:
                term = term * table[P[:, i], k] % p
        val = (val + term) % p
    return int(np.count_nonzero(val == 0))


# --- public API ------------------------------------------------------------

def _use_numpy(C, method):
    if method == "auto":
        return C.ctx.r == 1 and C.ctx.q > 16
    if method == "numpy":
        if C.ctx.r != 1:
            raise ValueError("the numpy route needs a prime field")
        return True
    if method == "pure":
        return False
    raise ValueError(f"unknown method {method!r}")


def line_counts(C: HomForm, method: str = "auto", threads: int = 1) -> list[int]:
    """m_L for every line, in line enumeration order."""
    _check_curve(C)
    if _use_numpy(C, method):
        return _line_counts_numpy(C, threads).tolist()
    return _line_counts_pure(C, threads)


def count_curve_points(C: HomForm, method: str = "auto") -> int:
    _check_curve(C)
    return _count_points_numpy(C) if _use_numpy(C, method) else _count_points_pure(C)


def _check_curve(C):
    if C.nvars != 3:
        raise ValueError("incidence counts need a plane curve (3 variables)")
    if C.is_zero():
        raise ValueError("the zero form does not define a curve")


def profile(C: HomForm, method: str = "auto", threads: int = 1, strict: bool = False,
            keep_counts: bool = False) -> IncidenceProfile:
    counts = line_counts(C, method, threads)
    q, delta = C.ctx.q, C.degree
    t = [0] * (delta + 1)
    overflow = 0
    for m in counts:
        if m > delta:
            if m != q + 1:
                raise RuntimeError(f"line meets a degree-{delta} curve in {m} points")
            overflow += 1
        else:
            t[m] += 1
    if strict and overflow:
        raise ValueError(f"{overflow} lines lie inside the curve")
    prof = IncidenceProfile(q, delta, count_curve_points(C, method), t, overflow,
                            counts if keep_counts else None)
    bad = [k for k, ok in prof.identities().items() if not ok]
    if bad:
        raise RuntimeError(f"incidence identities violated: {bad}")
    return prof


def find_avoiding_line(C: HomForm, method: str = "auto", threads: int = 1) -> Optional[ProjLine]:
    """First line (enumeration order) with no F_q-point of C, or None."""
    _check_curve(C)
    if _use_numpy(C, method):
        counts = _line_counts_numpy(C, threads)
        hits = np.flatnonzero(counts == 0)
        if hits.size == 0:
            return None
        from .projspace import point_at
        return ProjLine(C.ctx, point_at(C.ctx, 2, int(hits[0])))
    for coords in iter_point_coords(C.ctx, 2):
        if _line_count(C, coords) == 0:
            return ProjLine(C.ctx, coords)
    return None


def t0_lower_bound(q: int, delta: int, N: int) -> Fraction:
    """(q^2+q+1) - (q+1) N + N(N-1)/delta."""
    if delta < 1 or N < 0:
        raise ValueError("need delta >= 1 and N >= 0")
    return Fraction(q * q + q + 1) - (q + 1) * N + Fraction(N * (N - 1), delta)


@dataclass(frozen=True)
class HasseWeilInterval:
    """q + 1 -/+ (delta-1)(delta-2) sqrt(q), compared exactly."""

    q: int
    delta: int

    @property
    def genus_factor(self) -> int:
        return (self.delta - 1) * (self.delta - 2)

    def contains(self, N: int) -> bool:
        g = self.genus_factor
        return (N - self.q - 1) ** 2 <= g * g * self.q

    def integer_range(self) -> tuple[int, int]:
        g = self.genus_factor
        w = isqrt(g * g * self.q)
        return self.q + 1 - w, self.q + 1 + w

    @property
    def low(self) -> float:
        return self.q + 1 - self.genus_factor * self.q**0.5

    @property
    def high(self) -> float:
        return self.q + 1 + self.genus_factor * self.q**0.5

    def __iter__(self):
        yield self.low
        yield self.high


def hasse_weil_interval(q: int, delta: int) -> HasseWeilInterval:
    if delta < 1:
        raise ValueError("need delta >= 1")
    return HasseWeilInterval(q, delta)


@dataclass
class BoundCheck:
    N: int
    lower_t0: Fraction
    actual_t0: int
    hasse_weil_low: float
    hasse_weil_high: float
    hasse_weil_ok: bool
    t0_bound_ok: bool

    @property
    def passed(self) -> bool:
        return self.hasse_weil_ok and self.t0_bound_ok and self.actual_t0 > 0

    def to_dict(self) -> dict:
        return {"N": self.N, "t0": self.actual_t0, "t0_bound": str(self.lower_t0),
                "t0_bound_ok": self.t0_bound_ok, "hasse_weil": [self.hasse_weil_low, self.hasse_weil_high],
                "hasse_weil_ok": self.hasse_weil_ok, "passed": self.passed}


def check_bounds(prof: IncidenceProfile) -> BoundCheck:
    hw = hasse_weil_interval(prof.q, prof.delta)
    lb = t0_lower_bound(prof.q, prof.delta, prof.N)
    return BoundCheck(prof.N, lb, prof.t0, hw.low, hw.high, hw.contains(prof.N), prof.t0 >= lb)


def line_count_at(C: HomForm, L: ProjLine) -> int:
    """m_L for a single line via the pure route."""
    return _line_count(C, L.coords)


def total_lines(q: int) -> int:
    return count_points(q, 2)
