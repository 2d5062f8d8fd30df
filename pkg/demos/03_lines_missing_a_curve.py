"""Counting how lines of P^2(F_q) meet a smooth plane curve.

For each line L we count the F_q-points of C on L.  Double counting ties the
tallies t_i to N = #C(F_q), and a lower bound on t_0 follows.  Once q is
large compared with the degree, that bound is positive: some line misses C.

Run:  python demos/03_lines_missing_a_curve.py
"""

from smoothpencil import make_field
from smoothpencil.bounds import curve_prop_threshold
from smoothpencil.incidence import check_bounds, find_avoiding_line, hasse_weil_interval, profile
from smoothpencil.smoothness import random_smooth_forms

for q, delta in ((7, 3), (53, 3), (59, 4)):
    C = random_smooth_forms(make_field(q), 3, delta, 1, seed=1)[0]
    prof = profile(C)
    bc = check_bounds(prof)
    lo, hi = hasse_weil_interval(q, delta).integer_range()
    thr = curve_prop_threshold(delta)
    print(f"q = {q}, degree {delta}: C = {C.to_text()}")
    print(f"    N = {prof.N}  (Hasse-Weil window [{lo}, {hi}])")
    print(f"    t = {prof.t}; identities hold: {prof.identities_ok}")
    print(f"    t0 = {prof.t0} >= lower bound {float(bc.lower_t0):.1f}: {bc.t0_bound_ok}")
    print(f"    q above the degree-{delta} threshold {thr.display}? {thr.q_passes(q)}")
    print(f"    first line missing C: {find_avoiding_line(C)}\n")
