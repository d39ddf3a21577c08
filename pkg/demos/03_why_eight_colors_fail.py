"""
Why eight colors never work
===========================

Triangle-free colorings of K_N with m colors force N below a recursive
bound, so checking every qualifying prime up to that bound settles the
m = 8 question outright: there is none.
"""

from collections import Counter

from ramsey_forge import ramsey_recursive_bound, sweep_nonexistence

bound = ramsey_recursive_bound(8)
print(f"eight colors cannot support a modulus of {bound} or more")

result = sweep_nonexistence(8, bound, workers=4)
rec = result.record
print(f"swept {rec.candidates_tested} primes = 1 (mod 16): {rec.status}")

# what kills the candidates: nearly always a sum inside class 0
tally = Counter(f.failed_check for f in result.failures)
for cond, count in tally.most_common():
    print(f"  {cond:<12} {count:>5} candidates")

# the first few rejections with their witnesses
print("\nsmallest rejected moduli:")
for f in result.failures[:5]:
    w = f.witness
    print(f"  N={f.N}: {f.failed_check} fails at residue {w.residue} (classes {w.classes})")

# thirteen colors are open much further out; the bound explodes
print(f"\nthirteen colors would need sweeping to {ramsey_recursive_bound(13)}")
