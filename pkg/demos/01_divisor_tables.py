"""Elementary divisors of activation matrices, and what they say.

The activation matrix of a graph is adjacency plus identity: row v is the
indicator of the closed neighborhood of v. Its divisor chain over Z
classifies the reachable states for every abelian state group at once: a
divisor d means one coordinate direction is only reachable in multiples of
d, a divisor 0 means a direction is pinned entirely.
"""

from graphpower import (
    activation_matrix,
    complete_bipartite,
    cycle,
    divisor_tuple_str,
    known_family_divisors,
    path,
    reachability_profile,
    snf_divisors,
    star,
    tadpole,
)

SMALL_NON_FULL = [
    ("C4", cycle(4)),
    ("St3", star(3)),
    ("P5", path(5)),
    ("C5", cycle(5)),
    ("St4", star(4)),
    ("K_{2,3}", complete_bipartite(2, 3)),
    ("T_{4,1}", tadpole(4, 1)),
]

print("The seven graphs on up to 5 vertices whose clicks do not fill Z^n:")
for name, g in SMALL_NON_FULL:
    divs = snf_divisors(activation_matrix(g))
    print(f"  {name:8s} -> {divisor_tuple_str(divs)}")

print()
print("Closed forms vs computed divisors:")
for n in (4, 5, 6, 7, 8):
    got = divisor_tuple_str(snf_divisors(activation_matrix(cycle(n))))
    formula = divisor_tuple_str(known_family_divisors("cycle", n))
    print(f"  C{n}: computed {got:14s} formula {formula}")

print()
print("Reachability, concretely. For C4 the echelon basis gives free rein")
print("over three coordinates; the last moves only in steps of 3:")
prof = reachability_profile(cycle(4))
print(f"  free={prof.free_count}  constrained={prof.constrained}  fixed={prof.fixed_count}")

prof5 = reachability_profile(path(5))
print(f"For P5 one coordinate is fully determined: free={prof5.free_count}, "
      f"fixed={prof5.fixed_count}")
