"""Classifying elements: which dominant weights make a reduced word minuscule.

Every element lands in one of four classes. Strong elements pin down a single
dominant weight, always a fundamental weight attached to a short node.
"""

from collections import Counter

from strong_minuscule import ReducedWord, build_datum, classify, enumerate_group
from strong_minuscule.minuscule import parity_profile, solve_word

examples = [("B3", (3, 2, 1)), ("A4", (2, 1, 2, 4, 3)), ("G2", (1, 2)), ("A3", (1, 2))]
for label, letters in examples:
    word = ReducedWord(build_datum(label), letters)
    sol = solve_word(word)
    print(f"{label} {letters}: {classify(word.element())}, "
          f"forced {sol.forced.coords if sol.consistent else None}")

# census of a whole group
d = build_datum("C3")
census = Counter(classify(w).status.text for w in enumerate_group(d))
print("\nC3 census:", dict(census))

# the strong elements, grouped by their weight
for w in enumerate_group(d):
    c = classify(w)
    if c.is_strong:
        prof = parity_profile(w)
        print(f"  {w.reduced_word().letters} -> Lambda_{c.node()}, parity ok: {prof.ok}")
