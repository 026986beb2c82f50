"""Reachable-state groups G^Gamma for nonabelian G.

Clicking a vertex multiplies its closed neighborhood by a group element.
The reachable states from all-identity form a subgroup of G^n computed here
with exact orders via a stabilizer chain.
"""

from graphpower import (
    alternating,
    complete,
    cycle,
    dihedral,
    graph_power,
    matrix_power,
    path,
    symmetric,
)

s3 = symmetric(3)
print("Three puzzles in a row (P3) over S3: clicks reach every combination,")
print("so three linked Rubik-style puzzles can always be solved coordinate")
print("by coordinate whenever each is individually solvable.")
gp = graph_power(s3, path(3))
print(f"  |S3^P3| = {gp.order()} = 6^3 is full: {gp.order() == 6 ** 3}")

print()
print("On a complete graph every click hits everything, so only the diagonal")
print("subgroup survives:")
for n in (3, 4, 5):
    print(f"  |D8^K{n}| = {graph_power(dihedral(8), complete(n)).order()}")

print()
print("The choice of group matters. On the 5-cycle, S4 fills the whole")
print("product but its commutator subgroup A4 does not fill its own:")
print(f"  |S4^C5| = {graph_power(symmetric(4), cycle(5)).order()} (24^5 = {24 ** 5})")
a4 = graph_power(alternating(4), cycle(5))
print(f"  |A4^C5| = {a4.order()} < 12^5 = {12 ** 5}")
print("  so reaching some all-even states needs clicks by odd permutations.")

print()
print("Matrices beyond 0/1 behave differently. Clicking by g with weight 2")
print("lands on squares only; over D8 that is the two-element center:")
p = matrix_power(dihedral(8), [[2]])
states = sorted(tuple(c.order() for c in s.components) for s in p.elements_as_states())
print(f"  |D8^[2]| = {p.order()}, component orders {states}")
