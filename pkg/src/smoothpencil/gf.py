"""Arithmetic in GF(p^r).

Elements are plain integers in ``[0, q)``: the base-p digits of the code are
the coefficients (low to high) of the representing polynomial modulo the
field's defining polynomial.  ``FieldCtx`` does all the arithmetic on codes;
``Fe`` is a thin operator-overloading wrapper for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from sympy import factorint, isprime

Q_MAX = 1 << 20
_TABLE_MAX = 2048


# --- polynomials over GF(p), coefficient lists low-to-high -----------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - f * mi) % p
        _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p) (coefficients low-to-high)."""
    poly = _trim(list(poly))
    r = len(poly) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**r, poly, p), x, p):
        return False
    for ell in factorint(r):
        h = _psub(_ppowmod(x, p ** (r // ell), poly, p), x, p)
        if len(_pgcd(poly, h, p)) != 1:
            return False
    return True


def _digits(code, p, r):
    out = []
    for _ in range(r):
        code, d = divmod(code, p)
        out.append(d)
    return out


def _undigits(digits, p):
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Monic irreducible of degree r over GF(p) with the smallest code.

    Candidates are ``x^r + sum(c_i x^i)`` scanned by the integer whose base-p
    digits are ``c_0, ..., c_{r-1}``.
    """
    for k in range(p**r):
        poly = _digits(k, p, r) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p^r, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, r), = f.items()
    return p, r


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except ValueError:
        return False
    return True


def parse_field_spec(spec: str | int) -> tuple[int, int]:
    """Accept ``"p^r"``, ``"q"`` or an int and return (p, r)."""
    if isinstance(spec, int):
        return factor_prime_power(spec)
    s = spec.strip()
    if "^" in s:
        a, b = s.split("^", 1)
        p, r = int(a), int(b)
        if not isprime(p) or r < 1:
            raise ValueError(f"bad field spec {spec!r}")
        return p, r
    return factor_prime_power(int(s))


# --- fields ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldCtx:
    """A concrete finite field GF(p^r) with a fixed defining polynomial."""

    p: int
    r: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.r)
        object.__setattr__(self, "_tables", None)
        object.__setattr__(self, "_addtab", None)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.r, self.modulus) == (
            other.p, other.r, other.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __call__(self, value: int) -> "Fe":
        return Fe(self, self.from_int(value) if self.r == 1 else self._check(value))

    @property
    def is_prime(self) -> bool:
        return self.r == 1

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.r}"

    def _check(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"{code} is not an element code of {self}")
        return code

    def from_int(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    # tables are built lazily: exp/log for multiplication, add table for
    # small odd-characteristic extensions
    def _build_tables(self):
        q, p, m = self.q, self.p, list(self.modulus)
        order = q - 1
        primes = list(factorint(order)) if order > 1 else []

        def primitive(gp):
            return all(_ppowmod(gp, order // ell, m, p) != [1] for ell in primes)

        exp = [0] * (2 * order)
        log = [0] * q
        if primitive([0, 1]):
            # powers of x: shift digits and fold the top one back via the modulus
            r = self.r
            digs = [0] * r
            digs[0] = 1
            tail = [(-c) % p for c in m[:r]]
            for i in range(order):
                c = _undigits(digs, p)
                exp[i] = c
                log[c] = i
                top = digs[-1]
                digs = [0] + digs[:-1]
                if top:
                    digs = [(d + top * t) % p for d, t in zip(digs, tail)]
        else:
            gen = next(gp for gp in (_digits(g, p, self.r) for g in range(1, q)) if primitive(gp))
            cur = [1]
            for i in range(order):
                c = _undigits(cur + [0] * (self.r - len(cur)), p)
                exp[i] = c
                log[c] = i
                cur = _pmod(_pmul(cur, gen, p), m, p)
        exp[order:] = exp[:order]
        object.__setattr__(self, "_tables", (exp, log))

    def _exp_log(self):
        if self._tables is None:
            self._build_tables()
        return self._tables

    def _add_table(self):
        if self._addtab is None:
            q, p, r = self.q, self.p, self.r
            digs = [_digits(a, p, r) for a in range(q)]
            tab = [[_undigits([(x + y) % p for x, y in zip(digs[a], digs[b])], p)
                    for b in range(q)] for a in range(q)]
            object.__setattr__(self, "_addtab", tab)
        return self._addtab

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= _TABLE_MAX:
            return self._add_table()[a][b]
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.r == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log()
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.r == 1:
            return pow(a, -1, self.p)
        exp, log = self._exp_log()
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.r == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        exp, log = self._exp_log()
        return exp[log[a] * e % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        if self.p == 2:
            raise ValueError("square test is degenerate in characteristic 2")
        return a == 0 or self.pow(a, (self.q - 1) // 2) == 1

    def count_squares(self) -> int:
        if self.p == 2:
            raise ValueError("square count is only defined here for odd q")
        return 1 + (self.q - 1) // 2

    def sqrt(self, a: int) -> int | None:
        """Smallest-code square root, or None."""
        for y in range(self.q):
            if self.mul(y, y) == a:
                return y
        return None

    def trace(self, a: int) -> int:
        """Absolute trace to GF(p)."""
        total, x = 0, a
        for _ in range(self.r):
            total = self.add(total, x)
            x = self.pow(x, self.p)
        return total

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)


def make_field(p: int, r: int = 1) -> FieldCtx:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    if p**r > Q_MAX:
        raise ValueError(f"{p}^{r} exceeds the field size cap {Q_MAX}")
    return _make_field(p, r)


@lru_cache(maxsize=None)
def _make_field(p, r):
    return FieldCtx(p, r, smallest_irreducible(p, r))


def field_from_spec(spec: str | int) -> FieldCtx:
    return make_field(*parse_field_spec(spec))


def enumerate_field(ctx: FieldCtx) -> list[int]:
    return list(range(ctx.q))


def trace_to_prime(ctx: FieldCtx, a: int) -> int:
    return ctx.trace(a)


@lru_cache(maxsize=None)
def embedding(sub: FieldCtx, sup: FieldCtx) -> tuple[int, ...]:
    """Image of every element code of ``sub`` inside ``sup``.

    The generator of ``sub`` is sent to the smallest-code root of
    ``sub.modulus`` in ``sup``.
    """
    if sub.p != sup.p:
        raise ValueError("fields have different characteristic")
    if sup.r % sub.r:
        raise ValueError(f"{sub} does not embed in {sup}")
    if sub.r == 1:
        return tuple(range(sub.p))
    root = None
    for z in range(sup.q):
        acc = 0
        for coeff in reversed(sub.modulus):
            acc = sup.add(sup.mul(acc, z), coeff)
        if acc == 0:
            root = z
            break
    assert root is not None
    powers = [1]
    for _ in range(sub.r - 1):
        powers.append(sup.mul(powers[-1], root))
    image = []
    for code in range(sub.q):
        acc = 0
        for d, zp in zip(_digits(code, sub.p, sub.r), powers):
            if d:
                acc = sup.add(acc, sup.mul(d, zp))
        image.append(acc)
    return tuple(image)


def embed(sub: FieldCtx, sup: FieldCtx, a: int) -> int:
    return embedding(sub, sup)[a]


def extension(ctx: FieldCtx, m: int) -> FieldCtx:
    """GF(q^m) as a field containing ``ctx``."""
    return make_field(ctx.p, ctx.r * m)


@dataclass(frozen=True)
class Fe:
    """A field element bound to its context."""

    ctx: FieldCtx
    value: int

    def _other(self, other):
        if isinstance(other, Fe):
            if other.ctx != self.ctx:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return Fe(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return Fe(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return Fe(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return Fe(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return Fe(self.ctx, self.ctx.neg(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        return Fe(self.ctx, self.ctx.div(self.value, b))

    def __pow__(self, e: int):
        return Fe(self.ctx, self.ctx.pow(self.value, e))

    def inv(self) -> "Fe":
        return Fe(self.ctx, self.ctx.inv(self.value))

    def is_square(self) -> bool:
        return self.ctx.is_square(self.value)

    def trace(self) -> "Fe":
        return Fe(self.ctx, self.ctx.trace(self.value))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other) if self.ctx.r == 1 else self.value == other
        return isinstance(other, Fe) and other.ctx == self.ctx and other.value == self.value

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}"


def fe_iter(ctx: FieldCtx) -> Iterator[Fe]:
    for a in range(ctx.q):
        yield Fe(ctx, a)
