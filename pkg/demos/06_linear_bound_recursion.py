"""The closing recursion: a removal condition that does imply linearity.

f(0) = 0 and f(n) = 1 + max sum f(n_i) over parts n_i < n with total at
most n + c majorizes the Dehn function of any complex satisfying the
boundary-shortening removal condition.  Its increments are nondecreasing
and become constant from n = c + 2 on, so the bound is linear with slope
1 + K where K = f(c+2) - f(c+1) - 1.
"""

from vankampen.dehn_props import brute_force_f, f_values, verify_proposition_bound

for c in (1, 5):
    seq = f_values(c, 30)
    rep = verify_proposition_bound(c, 30)
    print(f"c = {c}: f(0..10) = {seq.values[:11]}")
    print(f"         tail slope {rep.slope} = 1 + K, K = {rep.K}; "
          f"increments nondecreasing: {rep.increments_nondecreasing}")

print()
print("dynamic program vs brute-force part-multiset search (c = 3, n <= 12):")
print("  dp   :", f_values(3, 12).values)
print("  brute:", brute_force_f(3, 12))
