"""Solve the classic structured families with both engines.

Run from the repository root after installing the package:

    python3 demos/classic_families.py
"""

from kcsp import enumerate_solutions, gen_coloring, gen_latin, gen_nqueens, solve_dpll, solve_ppsz

# 3-coloring the triangle graph: 3 vertices, all adjacent, 3 colors.
triangle = gen_coloring([(1, 2), (2, 3), (1, 3)], num_vertices=3, d=3)
print("triangle K3, 3 colors:", triangle)

stats = solve_dpll(triangle)
print("  dpll:", stats.status, stats.assignment, f"({stats.nodes} nodes)")

stats = solve_ppsz(triangle, seed=0)
print("  ppsz:", stats.status, stats.assignment,
      f"({stats.iterations_used} iteration(s) of {stats.max_repeats} allowed)")

print("  oracle:", len(enumerate_solutions(triangle)), "solutions, expected 6 = 3!")

# The same graph with only 2 colors has no proper coloring.
tight = gen_coloring([(1, 2), (2, 3), (1, 3)], num_vertices=3, d=2)
print("\ntriangle K3, 2 colors:", solve_dpll(tight).status)

# Latin squares: cell (i, j) is variable (i-1)N + j, values are symbols.
for size in (2, 3):
    square = gen_latin(size)
    stats = solve_dpll(square)
    count = len(enumerate_solutions(square))
    print(f"\nlatin {size}x{size}: {stats.status}, {count} squares total")
    if stats.status == "SAT":
        rows = [stats.assignment[r * size:(r + 1) * size] for r in range(size)]
        for row in rows:
            print("  ", " ".join(str(value) for value in row))

# N-queens with one variable per row; value = column of that row's queen.
print()
for size in range(1, 7):
    board = gen_nqueens(size)
    dpll = solve_dpll(board)
    count = len(enumerate_solutions(board))
    print(f"queens {size}: dpll {dpll.status:5s} nodes={dpll.nodes:3d} placements={count}")
