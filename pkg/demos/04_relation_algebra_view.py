"""
The same structure as a relation algebra
========================================

Each class X_i induces the relation A_i = {(u, v) : u - v in X_i} on
Z_N.  A valid partition makes these atoms of a finite relation algebra:
self-converse, self-composition giving the identity plus all the other
atoms, cross-composition giving everything off the diagonal.
"""

from ramsey_forge import (
    Relation,
    atom_decomposition,
    build_partition,
    partition_atoms,
    relation_algebra_check,
)

# the pentagon: two colors on K_5
p = build_partition(5, 2, 2)
red, blue = partition_atoms(p)
ident = Relation.identity(5)

print("axioms hold on K_5:", relation_algebra_check(p))


def show(name, rel, atoms):
    has_id, picked = atom_decomposition(rel, atoms, ident)
    parts = (["Id"] if has_id else []) + [f"A_{i}" for i in picked]
    print(f"  {name} = {' u '.join(parts)}")


show("red o red  ", red.compose(red), [red, blue])
show("blue o blue", blue.compose(blue), [red, blue])
show("red o blue ", red.compose(blue), [red, blue])

# three colors on K_13: same shape, one more atom
p13 = build_partition(13, 3, 2)
atoms13 = partition_atoms(p13)
ident = Relation.identity(13)
print("\naxioms hold on K_13:", relation_algebra_check(p13))
for i in range(3):
    show(f"A_{i} o A_{i}", atoms13[i].compose(atoms13[i]), atoms13)

# a partition that fails the set checks fails the algebra too
bad = build_partition(7, 3, 3)
print("\nK_7 with three colors satisfies the axioms:", relation_algebra_check(bad))
