"""Projective points and plane lines over a finite field.

Points are normalized so the first nonzero coordinate is 1.  Enumeration runs
through the affine charts in order: leading 1 in coordinate 0 first, then
coordinate 1, ...; inside a chart the free coordinates run lexicographically
by element code with the last coordinate varying fastest.  Every search that
reports "the first" object relies on this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .gf import FieldCtx


def normalize(ctx: FieldCtx, coords: Sequence[int]) -> tuple[int, ...]:
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    if lead == 1:
        return tuple(coords)
    inv = ctx.inv(lead)
    return tuple(ctx.mul(inv, c) for c in coords)


def count_points(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def iter_point_coords(ctx: FieldCtx, n: int) -> Iterator[tuple[int, ...]]:
    q = ctx.q
    for lead in range(n + 1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(q), repeat=n - lead):
            yield prefix + tail


def point_index(ctx: FieldCtx, coords: Sequence[int]) -> int:
    """Position of a normalized point in the enumeration order."""
    q = ctx.q
    n = len(coords) - 1
    lead = next(i for i, c in enumerate(coords) if c)
    offset = sum(q ** (n - j) for j in range(lead))
    idx = 0
    for c in coords[lead + 1:]:
        idx = idx * q + c
    return offset + idx


def point_at(ctx: FieldCtx, n: int, index: int) -> tuple[int, ...]:
    q = ctx.q
    for lead in range(n + 1):
        size = q ** (n - lead)
        if index < size:
            tail = []
            for _ in range(n - lead):
                index, d = divmod(index, q)
                tail.append(d)
            return (0,) * lead + (1,) + tuple(reversed(tail))
        index -= size
    raise IndexError("point index out of range")


@dataclass(frozen=True)
class ProjPoint:
    ctx: FieldCtx
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", normalize(self.ctx, self.coords))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __str__(self):
        return "[" + ":".join(map(str, self.coords)) + "]"


@dataclass(frozen=True)
class ProjLine:
    """The line a*x0 + b*x1 + c*x2 = 0 in P^2, stored by its dual coordinates."""

    ctx: FieldCtx
    coords: tuple[int, int, int]

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError("lines live in P^2 and need three dual coordinates")
        object.__setattr__(self, "coords", normalize(self.ctx, self.coords))

    def contains(self, pt: Sequence[int]) -> bool:
        ctx = self.ctx
        acc = 0
        for a, x in zip(self.coords, pt):
            acc = ctx.add(acc, ctx.mul(a, x))
        return acc == 0

    def __str__(self):
        return "[" + ":".join(map(str, self.coords)) + "]"


def parse_point(text: str, ctx: FieldCtx) -> ProjPoint:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"bad point {text!r}")
    return ProjPoint(ctx, tuple(int(x) for x in body[1:-1].split(":")))


def enum_points(ctx: FieldCtx, n: int) -> Iterator[ProjPoint]:
    if n < 1:
        raise ValueError("projective dimension must be at least 1")
    for c in iter_point_coords(ctx, n):
        yield ProjPoint(ctx, c)


def enum_lines(ctx: FieldCtx) -> Iterator[ProjLine]:
    for c in iter_point_coords(ctx, 2):
        yield ProjLine(ctx, c)


def line_basis(ctx: FieldCtx, coords: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two points spanning the (normalized) line with the given dual coordinates."""
    a, b, c = coords
    neg = ctx.neg
    if a:
        return (neg(b), 1, 0), (neg(c), 0, 1)
    if b:
        return (1, 0, 0), (0, neg(c), 1)
    return (1, 0, 0), (0, 1, 0)


def line_points_coords(ctx: FieldCtx, A, B) -> list[tuple[int, ...]]:
    """Normalized points s*A + t*B for [s:t] = [1:0], [x:1] (x = 0..q-1)."""
    add, mul = ctx.add, ctx.mul
    pts = [normalize(ctx, A)]
    for x in range(ctx.q):
        pts.append(normalize(ctx, [add(mul(x, u), v) for u, v in zip(A, B)]))
    return pts


def points_on_line(L: ProjLine) -> tuple[list[ProjPoint], tuple[tuple[int, ...], tuple[int, ...]]]:
    A, B = line_basis(L.ctx, L.coords)
    pts = [ProjPoint(L.ctx, c) for c in line_points_coords(L.ctx, A, B)]
    return pts, (A, B)


def cross(ctx: FieldCtx, u, v) -> tuple[int, int, int]:
    sub, mul = ctx.sub, ctx.mul
    return (sub(mul(u[1], v[2]), mul(u[2], v[1])),
            sub(mul(u[2], v[0]), mul(u[0], v[2])),
            sub(mul(u[0], v[1]), mul(u[1], v[0])))


def line_through(P1: ProjPoint, P2: ProjPoint) -> ProjLine:
    if P1 == P2:
        raise ValueError("a line needs two distinct points")
    return ProjLine(P1.ctx, cross(P1.ctx, P1.coords, P2.coords))
