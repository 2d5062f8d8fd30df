"""Conics over F_2: a net whose seven members are all smooth, and why no web is.

Run:  python demos/01_conics_over_f2.py
"""

from smoothpencil import make_field
from smoothpencil.constructions import example_f2_conic_net
from smoothpencil.linsys import enumerate_smooth_forms, members, search_all_smooth, verify_all_smooth

F2 = make_field(2)

smooth = enumerate_smooth_forms(F2, 2, 2)
print(f"P^5(F_2) holds 63 conics up to scalar; {len(smooth)} of them are smooth.")

net = example_f2_conic_net()
print("\nA net of conics spanned by")
for g in net.generators:
    print("   ", g.to_text())
print("has these F_2-members:")
for coeffs, F in members(net):
    print(f"    {coeffs}  {F.to_text():<28}")
rep = verify_all_smooth(net, exhaustive=True)
print(f"{rep.smooth_count} of {rep.total_members} are smooth.")

print("\nCan we go one dimension up?  Try every 4-subset of the smooth conics.")
res = search_all_smooth(F2, 2, 2, 3, "exhaustive")
print(f"{res.subsets_examined} subsets, {res.independent_subsets} linearly independent, "
      f"{res.valid_subsets} with all 15 members smooth.")

nets = search_all_smooth(F2, 2, 2, 2, "exhaustive")
print(f"\nFor comparison, {nets.valid_subsets} triples span all-smooth nets "
      f"({len(nets.systems)} distinct nets).")
