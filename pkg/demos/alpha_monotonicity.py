"""Minimum least eigenvalue over unicyclic classes, swept in k and girth.

alpha(n, k, g) is the least Q-eigenvalue of the broom-cycle graph, which is
the class minimum over connected non-bipartite unicyclic graphs of order n
with k pendant vertices and odd girth g.  It grows strictly with both the
pendant count and the girth.
"""

from qminlab import alpha

n = 15
print(f"alpha({n}, k, g) grid:\n")
header = "  k " + "".join(f"       g={g}     " for g in (3, 5, 7))
print(header)
grid = {}
for k in range(1, 6):
    cells = []
    for g in (3, 5, 7):
        grid[(k, g)] = alpha(n, k, g)
        cells.append(f"{grid[(k, g)]:.12f}")
    print(f"{k:>3} " + "  ".join(cells))

rows_increase = all(
    grid[(k + 1, g)] > grid[(k, g)] for g in (3, 5, 7) for k in range(1, 5)
)
cols_increase = all(
    grid[(k, 5)] > grid[(k, 3)] and grid[(k, 7)] > grid[(k, 5)] for k in range(1, 6)
)
print(f"\nstrictly increasing in k (each column): {rows_increase}")
print(f"strictly increasing in g (each row):    {cols_increase}")

print("\nrelocating one pendant edge outward explains the k-monotonicity;")
print("see demos/minimizer_search.py for the exhaustive confirmation.")
