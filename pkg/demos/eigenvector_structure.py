"""Structure of the least-eigenvalue eigenvector on the broom-cycle family.

The eigenvector mirrors across the cycle, alternates in sign on every edge
except the one opposite the stem attachment, decays strictly in magnitude
around the cycle, and never vanishes.
"""

from qminlab import build_U_std, check_U_pattern, q_min_of, split_branches, check_tree_monotone

n, k, girth = 9, 2, 5
graph, lm = build_U_std(n, k, girth)
value, x, mult = q_min_of(graph)

print(f"family member: order {n}, {k} pendant edges, girth {girth}")
print(f"q_min = {value:.12f} (multiplicity {mult})\n")

print("cycle values (v_1 .. v_g, stem attached at v_g):")
for i, v in enumerate(lm.cycle, start=1):
    print(f"  v_{i} (vertex {v}): {x[v]:+.9f}")
print("stem and brooms:")
for v in lm.stem[1:]:
    print(f"  stem vertex {v}: {x[v]:+.9f}")
for path in lm.pendant_paths:
    print(f"  pendant {path[1]}: {x[path[1]]:+.9f}")

report = check_U_pattern(graph, lm, x)
print(f"\nmirror / sign / decay / nonzero assertions all hold: {report.passed}")

half = (girth - 1) // 2
print(f"mirror pairs: " + ", ".join(
    f"x(v_{i})=x(v_{girth - i})" for i in range(1, half + 1)
))
special = (lm.cycle[half - 1], lm.cycle[half])
print(f"the single positive-product edge: vertices {special}")

tree = split_branches(graph, lm.cycle[-1])[1]
print(
    "magnitudes strictly increase along the stem away from the cycle:",
    check_tree_monotone(graph, x, tree).passed,
)
