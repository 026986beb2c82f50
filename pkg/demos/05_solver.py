"""Constructive solving for abelian state groups.

Over a sum of cyclic groups each factor is an independent lattice problem;
the solver returns explicit click multiplicities or the first obstructed
coordinate.
"""

from graphpower import INTEGERS, Solution, cycle, grid, path, solve, solvable_iff_lights_out

print("The classic puzzle: 5x5 grid, two states, light everything up.")
res = solve(grid(5, 5), (2,), [1] * 25)
assert isinstance(res, Solution)
clicks = res.clicks[0]
print("Press the marked cells:")
for r in range(5):
    print("   " + " ".join("#" if clicks[5 * r + c] else "." for c in range(5)))

print()
print("Integer states on C4: every reachable state has coordinate sum")
print("divisible by 3, so a lone 1 is unreachable and the solver names the")
print("pivot coordinate that blocks it:")
print(" ", solve(cycle(4), INTEGERS, [1, 0, 0, 0]))
print("  sum-3 target: ", solve(cycle(4), INTEGERS, [1, 1, 1, 0]))

print()
print("Several cyclic factors solve independently:")
res = solve(path(3), (2, 3), [(1, 2), (0, 1), (1, 0)])
print(f"  clicks mod 2: {res.clicks[0]}   clicks mod 3: {res.clicks[1]}")

print()
print("Parity picture for permutation puzzles on a path (a tree, hence RA):")
print("any odd/even pattern can be cleared:", solvable_iff_lights_out(path(3), [1, 0, 1]))
