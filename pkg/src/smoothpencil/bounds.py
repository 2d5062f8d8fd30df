"""Exact threshold arithmetic.

Every comparison involving sqrt(2) or sqrt(q) is decided by squaring with
sign guards (``sign_sqrt``); floats only appear in display values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .gf import is_prime_power


def sign_sqrt(a, b, n: int) -> int:
    """Sign of a + b*sqrt(n) for rationals a, b and an integer n >= 0."""
    a, b = Fraction(a), Fraction(b)
    if n < 0:
        raise ValueError("negative radicand")
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0) if n else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 n
    diff = a * a - b * b * n
    return sa if diff > 0 else (-sa if diff < 0 else 0)


def discriminant_degree(n: int, d: int) -> int:
    """Degree (n+1)(d-1)^n of the hypersurface of singular degree-d forms in P^n."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    return (n + 1) * (d - 1) ** n


def k_factor(delta: int) -> int:
    return delta * (delta - 1) * (delta - 2)


@dataclass(frozen=True)
class ThresholdReport:
    """The threshold ((1+sqrt2)/2)^2 K^2 = (3K^2 + 2K^2 sqrt2)/4, K = delta(delta-1)(delta-2)."""

    delta: int
    n: int | None = None
    d: int | None = None

    @property
    def K(self) -> int:
        return k_factor(self.delta)

    @property
    def integer_pair(self) -> tuple[int, int]:
        K2 = self.K**2
        return 3 * K2, 2 * K2

    @property
    def value(self) -> float:
        a, b = self.integer_pair
        return (a + b * 2**0.5) / 4

    @property
    def display(self) -> str:
        return f"{self.value:.1f}"

    def q_passes(self, q: int) -> bool:
        """q > threshold, i.e. 4q - 3K^2 > 2K^2 sqrt2."""
        a, b = self.integer_pair
        return sign_sqrt(4 * q - a, -b, 2) > 0

    def exceeded_by(self, x) -> bool:
        """Same test for a rational x."""
        a, b = self.integer_pair
        return sign_sqrt(4 * Fraction(x) - a, -b, 2) > 0

    def exceeds(self, x) -> bool:
        """threshold > x for a rational x."""
        a, b = self.integer_pair
        return sign_sqrt(a - 4 * Fraction(x), b, 2) > 0

    def smallest_passing_prime_power(self) -> int:
        a, b = self.integer_pair
        # start just below the real value and walk up
        q = max(2, (a + isqrt(2 * b * b)) // 4 - 1)
        while not (self.q_passes(q) and is_prime_power(q)):
            q += 1
        return q

    def to_dict(self) -> dict:
        out = {"delta": self.delta, "K": self.K, "threshold_display": self.display,
               "threshold_exact": f"({self.integer_pair[0]} + {self.integer_pair[1]}*sqrt(2))/4"}
        if self.n is not None:
            out.update(n=self.n, d=self.d)
        return out


def theorem_threshold(n: int, d: int) -> ThresholdReport:
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    return ThresholdReport(discriminant_degree(n, d), n, d)


def curve_prop_threshold(delta: int) -> ThresholdReport:
    if delta < 2:
        raise ValueError("need delta >= 2")
    return ThresholdReport(delta)


def kaltofen_threshold(delta: int) -> Fraction:
    """(3 delta^4 - 4 delta^3 + 5 delta^2) / 2."""
    if delta < 1:
        raise ValueError("need delta >= 1")
    return Fraction(3 * delta**4 - 4 * delta**3 + 5 * delta**2, 2)


def curve_threshold_dominates_kaltofen(delta: int) -> bool:
    """((1+sqrt2)/2)^2 K^2 >= kaltofen_threshold(delta), exactly."""
    a, b = ThresholdReport(delta).integer_pair
    return sign_sqrt(a - 4 * kaltofen_threshold(delta), b, 2) >= 0


def reducible_point_bound(delta: int) -> Fraction:
    """delta^2 / 4 bounds #X(F_q) for X irreducible but not geometrically irreducible."""
    if delta < 2:
        raise ValueError("need delta >= 2")
    return Fraction(delta * delta, 4)


def reducible_lines_fit(q: int, delta: int) -> bool:
    """(delta^2/4)(q+1) < q^2 + q + 1: some line misses every F_q-point."""
    return reducible_point_bound(delta) * (q + 1) < q * q + q + 1


def quadratic_formula_step(delta: int) -> bool:
    """delta^2(delta-1)^2(delta-2)^2 >= 4(delta-1)^2(delta-2)^2 + 4(delta+1)."""
    g = (delta - 1) * (delta - 2)
    return k_factor(delta) ** 2 >= 4 * g * g + 4 * (delta + 1)


def side_condition_margin(delta: int) -> bool:
    """((delta+1)(delta-1)(delta-2)/2)^2 < ((1+sqrt2)/2)^2 K^2."""
    h = Fraction((delta + 1) * (delta - 1) * (delta - 2), 2)
    return ThresholdReport(delta).exceeds(h * h)


@dataclass
class SufficiencyChain:
    q: int
    delta: int
    threshold_passed: bool
    product_form: bool
    expanded_form: bool
    side_condition: bool
    reduced_form: bool

    @property
    def all_hold(self) -> bool:
        return self.product_form and self.expanded_form and self.side_condition and self.reduced_form

    def to_dict(self) -> dict:
        return dict(self.__dict__, all_hold=self.all_hold)


def proof_sufficiency_chain(q: int, delta: int) -> SufficiencyChain:
    """Evaluate the chain of inequalities that make t0 > 0, each exactly.

    product_form:  delta(q^2+q+1) > (q+1+g sqrt q)((delta-1)(q+1) + g sqrt q + 1)
    expanded_form: q^2 > K q sqrt q + (g^2 + delta - 1) q + (delta+1) g sqrt q
    side_condition: q > (delta+1) g sqrt(q) / 2
    reduced_form:  q > K sqrt q + g^2 + delta + 1
    with g = (delta-1)(delta-2) and K = delta g.
    """
    if delta < 3:
        raise ValueError("the chain is stated for delta >= 3")
    g = (delta - 1) * (delta - 2)
    K = delta * g
    # (q+1+g u)((delta-1)(q+1)+1+g u) with u = sqrt(q): rational part and sqrt part
    lin = (delta - 1) * (q + 1) + 1
    prod_a = (q + 1) * lin + g * g * q
    prod_b = g * lin + g * (q + 1)
    product_form = sign_sqrt(delta * (q * q + q + 1) - prod_a, -prod_b, q) > 0
    expanded_form = sign_sqrt(q * q - (g * g + delta - 1) * q, -(K * q + (delta + 1) * g), q) > 0
    side_condition = sign_sqrt(q, Fraction(-(delta + 1) * g, 2), q) > 0
    reduced_form = sign_sqrt(q - g * g - delta - 1, -K, q) > 0
    return SufficiencyChain(q, delta, curve_prop_threshold(delta).q_passes(q),
                            product_form, expanded_form, side_condition, reduced_form)


def bound_report(n: int, d: int, q: int | None = None) -> dict:
    rep = theorem_threshold(n, d)
    out = rep.to_dict()
    out["kaltofen_threshold"] = str(kaltofen_threshold(rep.delta))
    if q is not None:
        out["q"] = q
        out["q_passes"] = rep.q_passes(q)
    return out
