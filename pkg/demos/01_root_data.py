"""Root data for a few types and the action of a Weyl group element on weights.

Run with ``python demos/01_root_data.py``.
"""

from strong_minuscule import build_datum, evaluate, is_minuscule_weight
from strong_minuscule.cartan import adjacency, group_order

for label in ["B3", "C3", "G2", "E6"]:
    d = build_datum(label)
    print(f"{label}: |W| = {group_order(d.label)}, {len(d.positive_roots)} positive roots")
    print("  Cartan matrix rows:", d.cartan.tolist())
    print("  short nodes K:", sorted(d.K))
    print("  minuscule fundamental weights:", [i for i in d.nodes if is_minuscule_weight(d, i)])
    short, long_ = adjacency(d, d.rank)
    print(f"  node {d.rank}: short neighbours {sorted(short)}, long neighbours {sorted(long_)}")

# s1 s2 moves the second fundamental weight of A2 to (-1, 0)
d = build_datum("A2")
w = evaluate(d, [1, 2])
print("\nA2: s1 s2 applied to Lambda_2 =", w.apply(d.fundamental_weight(2)).coords)
