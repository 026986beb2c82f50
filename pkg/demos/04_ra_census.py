"""Which graphs reduce to the abelian picture, at desk scale.

A graph is RA when [G,G]^n lands inside G^Gamma for every G; equivalently
(via Heisenberg groups) when the pairwise neighborhood-intersection matrix
spans the full integer lattice. This scans all small graphs, then the first
non-RA families.
"""

from graphpower import (
    census,
    complete_bipartite,
    cycle,
    divisor_tuple_str,
    folded_cube,
    grid,
    heisenberg_ra,
    hypercube,
    is_ra,
    pqr_criterion,
    structural_ra_hints,
)

print("Census of connected, neighborhood-distinguishable graphs:")
report = census(6)
print("  n  classes  eligible  full-lattice  RA")
for s in report.summaries:
    print(f"  {s.n}  {s.connected_classes:7d}  {s.distinguishable:8d}  "
          f"{s.full_lattice:12d}  {s.ra_count}")
print("Every eligible graph through 7 vertices is RA (run census(7) to see;")
print("the smallest non-RA graph is the 8-vertex cube).")

print()
print("Divisor table for the non-full graphs on up to 5 vertices:")
for row in report.nontrivial_rows(5):
    print(f"  n={row.n}  {row.graph6:6s} {divisor_tuple_str(row.divisors)}")

print()
print("Cubes and folded cubes:")
for d in (2, 3, 4, 5):
    g = hypercube(d)
    print(f"  Q{d}: ra={is_ra(g).ra}  rank test mod 2 full={heisenberg_ra(g, 2)}  "
          f"row-sum obstruction={pqr_criterion(g, 2)}")
for d in (4, 5):
    g = folded_cube(d)
    print(f"  folded cube (d={d}): ra={is_ra(g).ra}")

print()
print("Structural shortcuts (advisory; the lattice test decides):")
for name, g in [("C7", cycle(7)), ("grid 2x3", grid(2, 3)),
                ("K_{2,3}", complete_bipartite(2, 3))]:
    hints = structural_ra_hints(g)
    print(f"  {name}: " + ("; ".join(f"{h.rule} => {h.conclusion}" for h in hints) or "none"))
