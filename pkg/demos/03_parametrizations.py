"""Product-form parametrization of a parabolic quotient and the closed-form counts.

Each coset representative of W / W_J is a product of prefixes of fixed words,
indexed by an integer sequence. The strong elements form an explicit subfamily.
"""

from strong_minuscule import build_datum, count_smi, enumerate_smi, v_element
from strong_minuscule.stumbo import enumerate_quotient_stumbo, smi_sequences

d = build_datum("D5")
i = 4
rows = list(enumerate_quotient_stumbo(d, i))
print(f"D5, i={i}: {len(rows)} quotient elements from sequences; first few:")
for seq, w in rows[:6]:
    print(f"  l={seq.l} branch={seq.branch} -> {w.reduced_word().letters}")

print(f"\nv_{i} =", v_element(d, i).reduced_word().letters)
print("strong sequences:", [s.l for s in smi_sequences(d, i)])
print("strong elements:", [w.reduced_word().letters for w in enumerate_smi(d, i)])

print("\nCounts #SM_i by node:")
for label in ["A6", "B5", "C5", "D6", "E6", "E7", "F4", "G2"]:
    e = build_datum(label)
    print(f"  {label}:", {k: count_smi(e, k) for k in sorted(e.K)})
