"""
Six rows of the shipped table can be beaten
===========================================

The bundled catalog lists a least modulus for every color count from 2
to 400 (minus 8 and 13).  Re-running the search shows six of those
rows are not least at all: a smaller qualifying prime passes every
check.  Verification with the minimality flag reports this honestly.
"""

from ramsey_forge import check_candidate, load_catalog, smallest_generator, verify_row

DISPUTED = (266, 287, 291, 293, 298, 318)

rows = {r.m: r for r in load_catalog()}

print(f"{'m':>4} {'listed N':>9} {'smaller N':>10} {'x':>3}  both pass?")
for m in DISPUTED:
    row = rows[m]
    v = verify_row(row, minimality=True)
    better = v.first_smaller_pass
    x = smallest_generator(better)
    ok = v.report.overall and check_candidate(better, m, x).overall
    print(f"{m:>4} {row.N:>9} {better:>10} {x:>3}  {ok}")

print("\nso each listed triple is a valid construction, just not the least;")
print("`ramsey-forge verify --m 266..266 --minimality` exits nonzero for them")
