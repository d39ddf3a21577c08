"""
Anatomy of a three-color partition of Z_13
==========================================

Build the cube-residue classes mod 13 by hand, watch each of the four
conditions hold, and render the induced edge coloring of K_13.
"""

from ramsey_forge import (
    ResidueSet,
    build_partition,
    export_coloring,
    full_fast_check,
    sumset,
)

p = build_partition(N=13, m=3, x=2)

# class i collects the residues 2^e with e = i (mod 3)
for i, cls in enumerate(p.classes):
    print(f"X_{i} = {sorted(cls)}")

# symmetric: each class contains the negation of each of its members
X0 = p.classes[0]
print("\n-X_0 =", sorted(X0.negated()), "(same set)")

# sum-free: no element of X_0 is a sum of two of them
S = sumset(X0, X0)
print("X_0 + X_0 =", sorted(S))
print("overlap with X_0:", sorted(S & X0) or "none")

# basis: those sums are exactly 0 plus everything outside X_0
print("X_0 + X_0 covers complement of X_0:", S == X0.complement())

# triangle condition: cross sums hit every nonzero residue
for j in (1, 2):
    covers = sumset(X0, p.classes[j]) == ResidueSet.nonzero(13)
    print(f"X_0 + X_{j} = all of Z_13 minus 0: {covers}")

report = full_fast_check(p)
print("\nfull check:", report.to_json())

# the DOT rendering colors the 78 edges of K_13 in red/blue/green
dot = export_coloring(p, "dot")
print("\nfirst lines of the DOT document:")
print("\n".join(dot.splitlines()[:6]))
