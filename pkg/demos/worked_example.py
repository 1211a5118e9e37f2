"""The two order-10 clique graphs with equal least Q-eigenvalue.

K(2,2,2,0) and K(2,2,1,1) both have q_min = (5 - sqrt(17))/2, even though
the first profile strictly majorizes the second: a unit pendant transfer
that changes the graph but not the bottom of the spectrum.
"""

import math

import numpy as np

from qminlab import PendantProfile, build_K, eig_sym, q_matrix, q_min_of, rayleigh, residual

QM = (5 - math.sqrt(17)) / 2

print(f"target value (5 - sqrt(17))/2 = {QM:.12f}\n")

for entries in [(2, 2, 2, 0), (2, 2, 1, 1)]:
    graph, lm = build_K(PendantProfile(entries))
    value, vector, mult = q_min_of(graph)
    spec = eig_sym(q_matrix(graph))
    print(f"K{entries}: order {graph.n}, clique {lm.clique}")
    print(f"  q_min        = {value:.12f}   (error {abs(value - QM):.2e})")
    print(f"  multiplicity = {mult}")
    print(f"  bottom of spectrum: {np.round(spec.eigenvalues[:4], 6)}")
    print()

print("the two independent least-eigenvalue eigenvectors of K(2,2,2,0),")
print("given in closed form on clique vertices then pendants:")
a = (math.sqrt(17) - 3) / 2
graph, _ = build_K(PendantProfile((2, 2, 2, 0)))
for name, raw in [
    ("x", [a, 0, -a, 0, -1, -1, 0, 0, 1, 1]),
    ("y", [a, -a, 0, 0, -1, -1, 1, 1, 0, 0]),
]:
    vec = np.array(raw) / np.linalg.norm(raw)
    print(
        f"  {name}: residual {residual(graph, QM, vec):.2e}, "
        f"Rayleigh quotient {rayleigh(graph, vec):.12f}"
    )

print()
print("note: the doubled least eigenvalue also appears one order up, on")
graph, _ = build_K(PendantProfile((2, 2, 2, 1)))
value, _, mult = q_min_of(graph)
print(f"K(2,2,2,1): q_min = {value:.12f}, multiplicity {mult}")
