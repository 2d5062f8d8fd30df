"""Homogeneous forms over a finite field and binary forms in (s, t)."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Mapping, Sequence

from .gf import FieldCtx, embedding


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given degree, graded-lex descending (x0^d first)."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


class HomForm:
    """A homogeneous polynomial with coefficients given by element codes.

    ``terms`` maps exponent vectors to nonzero codes.  Instances are treated
    as immutable.
    """

    __slots__ = ("ctx", "nvars", "degree", "terms", "_hash")

    def __init__(self, ctx: FieldCtx, nvars: int, degree: int,
                 terms: Mapping[tuple[int, ...], int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or sum(e) != degree or min(e) < 0:
                raise ValueError(f"exponent {e} does not fit a degree-{degree} form in {nvars} variables")
            if not 0 <= c < ctx.q:
                raise ValueError(f"coefficient code {c} out of range for {ctx}")
            if c:
                clean[e] = c
        self.ctx = ctx
        self.nvars = nvars
        self.degree = degree
        self.terms = clean
        self._hash = None

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, ctx, nvars, degree):
        return cls(ctx, nvars, degree)

    @classmethod
    def from_vector(cls, ctx, nvars, degree, coeffs: Sequence[int]):
        mons = monomials(nvars, degree)
        if len(coeffs) != len(mons):
            raise ValueError("coefficient vector has the wrong length")
        return cls(ctx, nvars, degree, dict(zip(mons, coeffs)))

    @classmethod
    def variable(cls, ctx, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(ctx, nvars, 1, {tuple(e): 1})

    def vector(self) -> tuple[int, ...]:
        return tuple(self.terms.get(e, 0) for e in monomials(self.nvars, self.degree))

    # value semantics --------------------------------------------------------

    def _key(self):
        return (self.ctx, self.nvars, self.degree, frozenset(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, HomForm) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"HomForm({self.to_text()!r} over {self.ctx})"

    def __str__(self):
        return self.to_text()

    def is_zero(self) -> bool:
        return not self.terms

    def _same_shape(self, other):
        if (self.ctx, self.nvars, self.degree) != (other.ctx, other.nvars, other.degree):
            raise ValueError("forms differ in field, variable count or degree")

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        ctx = self.ctx
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = ctx.add(terms.get(e, 0), c)
        return HomForm(ctx, self.nvars, self.degree, terms)

    def __neg__(self):
        return HomForm(self.ctx, self.nvars, self.degree,
                       {e: self.ctx.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a: int) -> "HomForm":
        ctx = self.ctx
        return HomForm(ctx, self.nvars, self.degree, {e: ctx.mul(a, c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ctx.from_int(other))
        if self.ctx != other.ctx or self.nvars != other.nvars:
            raise ValueError("forms differ in field or variable count")
        ctx = self.ctx
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = ctx.add(terms.get(e, 0), ctx.mul(c1, c2))
        return HomForm(ctx, self.nvars, self.degree + other.degree, terms)

    def partial(self, i: int) -> "HomForm":
        """Formal derivative in x_i; exponents are reduced mod p."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        if self.degree == 0:
            return HomForm(self.ctx, self.nvars, 0)
        ctx = self.ctx
        terms = {}
        for e, c in self.terms.items():
            k = ctx.from_int(e[i])
            if k:
                e2 = list(e)
                e2[i] -= 1
                terms[tuple(e2)] = ctx.mul(k, c)
        return HomForm(ctx, self.nvars, self.degree - 1, terms)

    def gradient(self) -> list["HomForm"]:
        return [self.partial(i) for i in range(self.nvars)]

    def over(self, field: FieldCtx) -> "HomForm":
        """The same form with coefficients mapped into an extension field."""
        if field == self.ctx:
            return self
        img = embedding(self.ctx, field)
        return HomForm(field, self.nvars, self.degree, {e: img[c] for e, c in self.terms.items()})

    # evaluation -------------------------------------------------------------

    def evaluator(self, field: FieldCtx | None = None) -> Callable[[Sequence[int]], int]:
        """Compiled point evaluator over ``field`` (default: the form's own)."""
        form = self.over(field) if field is not None else self
        f = form.ctx
        items = list(form.terms.items())
        if f.r == 1:
            p = f.p

            def ev(pt):
                total = 0
                for e, c in items:
                    m = c
                    for x, k in zip(pt, e):
                        if k:
                            m *= x**k
                    total += m
                return total % p
            return ev
        exp, log = f._exp_log()
        order = f.q - 1
        add = f.add
        logterms = [(log[c], e) for e, c in items]

        def ev(pt):
            total = 0
            logs = [log[x] if x else None for x in pt]
            for lc, e in logterms:
                acc = lc
                for lx, k in zip(logs, e):
                    if k:
                        if lx is None:
                            break
                        acc += lx * k
                else:
                    total = add(total, exp[acc % order])
            return total
        return ev

    def __call__(self, pt: Sequence[int], field: FieldCtx | None = None) -> int:
        return self.eval(pt, field)

    def eval(self, pt: Sequence[int], field: FieldCtx | None = None) -> int:
        if len(pt) != self.nvars:
            raise ValueError(f"point has {len(pt)} coordinates, form has {self.nvars} variables")
        return self.evaluator(field)(pt)

    # text -------------------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in monomials(self.nvars, self.degree):
            c = self.terms.get(e)
            if not c:
                continue
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i}")
                elif k > 1:
                    factors.append(f"x{i}^{k}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)


_TERM_RE = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_form(text: str, ctx: FieldCtx, nvars: int | None = None, degree: int | None = None) -> HomForm:
    """Parse ``"x0^2 + 2*x1*x2 - x2^2"``; coefficients are element codes."""
    src = text.replace("**", "^").strip()
    if not src:
        raise ValueError("empty form")
    raw = []
    pos = 0
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise ValueError(f"cannot parse form {text!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2).strip()
        coeff = 1
        exps: dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if fm:
                i = int(fm.group(1))
                exps[i] = exps.get(i, 0) + int(fm.group(2) or 1)
            elif re.fullmatch(r"\d+", factor):
                c = int(factor)
                if ctx.r == 1:
                    c %= ctx.p
                elif c >= ctx.q:
                    raise ValueError(f"coefficient code {c} out of range for {ctx}")
                coeff = ctx.mul(coeff, c)
            else:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
        if sign == "-":
            coeff = ctx.neg(coeff)
        raw.append((exps, coeff))
    if pos != len(src):
        raise ValueError(f"cannot parse form {text!r}")
    top = max((max(e) for e, _ in raw if e), default=-1)
    if nvars is None:
        nvars = top + 1
    elif top >= nvars:
        raise ValueError(f"variable x{top} exceeds {nvars} variables")
    terms: dict = {}
    degs = set()
    for exps, c in raw:
        e = tuple(exps.get(i, 0) for i in range(nvars))
        if not exps:
            # a bare constant: only "0" is homogeneous of unknown degree
            if c == 0:
                continue
            degs.add(0)
        else:
            degs.add(sum(e))
        terms[e] = ctx.add(terms.get(e, 0), c)
    if len(degs) > 1:
        raise ValueError(f"form {text!r} is not homogeneous")
    if degs:
        d = degs.pop()
        if degree is not None and degree != d:
            raise ValueError(f"form {text!r} has degree {d}, expected {degree}")
        degree = d
    elif degree is None:
        raise ValueError("degree of the zero form must be given explicitly")
    if nvars < 1:
        raise ValueError("number of variables must be given for a constant form")
    return HomForm(ctx, nvars, degree, terms)


def lincomb(coeffs: Sequence[int], forms: Sequence[HomForm]) -> HomForm:
    if len(coeffs) != len(forms) or not forms:
        raise ValueError("coefficient and form lists must have the same nonzero length")
    f0 = forms[0]
    ctx = f0.ctx
    terms: dict = {}
    for a, f in zip(coeffs, forms):
        f0._same_shape(f)
        if a:
            for e, c in f.terms.items():
                terms[e] = ctx.add(terms.get(e, 0), ctx.mul(a, c))
    return HomForm(ctx, f0.nvars, f0.degree, terms)


def euler_check(F: HomForm) -> bool:
    """Whether sum_i x_i dF/dx_i equals deg(F) * F formally."""
    lhs = HomForm.zero(F.ctx, F.nvars, F.degree)
    for i in range(F.nvars):
        lhs = lhs + HomForm.variable(F.ctx, F.nvars, i) * F.partial(i)
    return lhs == F * F.degree


class BiForm:
    """Binary form of a given degree; ``coeffs[k]`` multiplies s^(deg-k) t^k."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Sequence[int]):
        if not coeffs:
            raise ValueError("a binary form needs degree + 1 coefficients")
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def linear(cls, ctx, a_s: int, b_t: int) -> "BiForm":
        return cls(ctx, (a_s, b_t))

    @classmethod
    def zero(cls, ctx, degree):
        return cls(ctx, (0,) * (degree + 1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiForm) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"BiForm({self.to_text()!r})"

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("adding binary forms of different degrees")
        return BiForm(self.ctx, [self.ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BiForm(self.ctx, [self.ctx.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a: int) -> "BiForm":
        return BiForm(self.ctx, [self.ctx.mul(a, c) for c in self.coeffs])

    def __mul__(self, other):
        ctx = self.ctx
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return BiForm(ctx, out)

    def __pow__(self, k: int):
        out = BiForm(self.ctx, (1,))
        for _ in range(k):
            out = out * self
        return out

    def eval(self, s: int, t: int) -> int:
        ctx = self.ctx
        d = self.degree
        total = 0
        for k, c in enumerate(self.coeffs):
            if c:
                total = ctx.add(total, ctx.mul(c, ctx.mul(ctx.pow(s, d - k), ctx.pow(t, k))))
        return total

    def roots(self) -> list[tuple[int, int]]:
        """Distinct zeros [s:t] in P^1(F_q), ordered [1:0], [x:1] for x = 0..q-1."""
        pts = [(1, 0)] + [(x, 1) for x in range(self.ctx.q)]
        return [pt for pt in pts if self.eval(*pt) == 0]

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        d = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            fs = []
            if d - k:
                fs.append("s" if d - k == 1 else f"s^{d - k}")
            if k:
                fs.append("t" if k == 1 else f"t^{k}")
            if c != 1 or not fs:
                fs.insert(0, str(c))
            parts.append("*".join(fs))
        return " + ".join(parts)


def restrict_to_line(F: HomForm, A: Sequence[int], B: Sequence[int]) -> BiForm:
    """The binary form F(s*A + t*B)."""
    ctx = F.ctx
    if len(A) != F.nvars or len(B) != F.nvars:
        raise ValueError("points must have one coordinate per variable")
    from .linalg import rank
    if rank(ctx, [list(A), list(B)]) < 2:
        raise ValueError("points are projectively equal")
    lin = [BiForm(ctx, (a, b)) for a, b in zip(A, B)]
    powers = [[BiForm(ctx, (1,))] for _ in lin]
    out = BiForm.zero(ctx, F.degree)
    for e, c in F.terms.items():
        term = BiForm(ctx, (c,))
        for i, k in enumerate(e):
            while len(powers[i]) <= k:
                powers[i].append(powers[i][-1] * lin[i])
            if k:
                term = term * powers[i][k]
        out = out + term
    return out


def det_linear_matrix(M: Sequence[Sequence[BiForm]]) -> BiForm:
    """Determinant of a square matrix of binary forms by cofactor expansion."""
    k = len(M)
    if k == 0 or any(len(row) != k for row in M):
        raise ValueError("determinant of a non-square matrix")
    degs = {e.degree for row in M for e in row}
    if len(degs) != 1:
        raise ValueError("matrix entries must share one degree")
    ctx = M[0][0].ctx

    def expand(rows, cols):
        if len(rows) == 1:
            return M[rows[0]][cols[0]]
        r0, rest = rows[0], rows[1:]
        acc = None
        for j, c in enumerate(cols):
            entry = M[r0][c]
            if entry.is_zero():
                continue
            minor = expand(rest, cols[:j] + cols[j + 1:])
            term = entry * minor
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = BiForm.zero(ctx, len(rows) * degs_one)
        return acc

    degs_one = next(iter(degs))
    return expand(list(range(k)), list(range(k)))
