"""Where the field-size threshold for pencils of quadric surfaces sits.

The singular quadric surfaces form a hypersurface of degree 4 in the space of
all quadrics.  A line missing its F_q-points is a pencil with every member
smooth, and the incidence argument guarantees one once q exceeds
((1 + sqrt 2) / 2)^2 * (4*3*2)^2.  All comparisons are exact.

Run:  python demos/04_threshold.py
"""

from smoothpencil.bounds import (
    curve_prop_threshold,
    discriminant_degree,
    kaltofen_threshold,
    proof_sufficiency_chain,
    theorem_threshold,
)

t = theorem_threshold(3, 2)
print(f"degree of the discriminant for (n, d) = (3, 2): {discriminant_degree(3, 2)}")
print(f"threshold = {t.to_dict()['threshold_exact']} ~ {t.display}")
for q in (839, 840, 841, 843):
    print(f"    q = {q}: passes {t.q_passes(q)}")
print(f"smallest passing prime power: {t.smallest_passing_prime_power()}")

print("\ndelta  threshold      slicing threshold   smallest q")
for delta in (3, 4, 5, 8, 12):
    c = curve_prop_threshold(delta)
    print(f"{delta:5d}  {c.display:>12}  {float(kaltofen_threshold(delta)):>18.1f}  "
          f"{c.smallest_passing_prime_power():>10}")

ch = proof_sufficiency_chain(841, 4)
print(f"\ninequality chain at q = 841, delta = 4: {ch.to_dict()}")
