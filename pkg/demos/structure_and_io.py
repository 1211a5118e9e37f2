"""Graph I/O, structure reports, and spectral interlacing under edge deletion.

graph6 is the interchange format (bit-exact, order <= 62); a plain edge-list
text format covers hand-written inputs.  Deleting any edge interlaces the
whole Q-spectrum.
"""

from qminlab import (
    coalesce,
    cycle_graph,
    decode_graph6,
    encode_graph6,
    eig_sym,
    format_edge_list,
    interlacing_check,
    path_graph,
    q_matrix,
    structure_report,
)

g = coalesce(cycle_graph(5), 4, path_graph(3), 0)  # 5-cycle with a 2-edge tail
code = encode_graph6(g).decode()
print(f"graph6: {code}")
print(f"round trip ok: {decode_graph6(code) == g}")
print("edge list:")
print(format_edge_list(g), end="")

rep = structure_report(g)
print(f"\nconnected={rep.connected}  bipartite={rep.bipartite is not None}")
print(f"girth={rep.girth}  odd_girth={rep.odd_girth}")
print(f"pendant_count={rep.pendant_count}  degrees={rep.degrees}")

spec = eig_sym(q_matrix(g))
print(f"\nQ-spectrum: {[round(float(v), 6) for v in spec.eigenvalues]}")

print("\ninterlacing after deleting each edge:")
for e in g.edges():
    ok = interlacing_check(g, e).passed
    sub = eig_sym(q_matrix(g.without_edge(*e))).eigenvalues
    print(f"  drop {e}: interlaces={ok}, new least={sub[0]:.6f}")
