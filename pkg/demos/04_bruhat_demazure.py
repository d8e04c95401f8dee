"""Bruhat intervals in a parabolic quotient and Demazure-module dimensions.

For a minuscule fundamental weight the Demazure module at tau has dimension
#[e, tau]^J. Applying the order-reversing involution to v_i turns that into
the size of the upper interval [v_i, top]^J, which coincides with the strong
set. At the last node of types C and D the top element is strong as well, so
the strong set fills the whole interval there too.
"""

from strong_minuscule import (
    IntervalQuery,
    ParabolicContext,
    bar_involution,
    build_datum,
    demazure_dim,
    enumerate_smi,
    evaluate,
    interval,
    smi_as_interval,
    v_element,
)
from strong_minuscule.bruhat import bruhat_leq
from strong_minuscule.weyl import w0J

# an element between v_3 and the top that falls outside the quotient
d = build_datum("A4")
ctx = ParabolicContext(d, 3)
v3, top = v_element(d, 3), w0J(ctx)
x = evaluate(d, [2]) * v3
print("A4: s2 v3 =", x.reduced_word().letters,
      "| v3 <= x:", bruhat_leq(v3, x), "| x <= top:", bruhat_leq(x, top),
      "| in quotient:", ctx.contains(x))
print("  full interval size", len(interval(IntervalQuery(v3, top))),
      "vs quotient interval", len(interval(IntervalQuery(v3, top, ctx))))

for label, i in [("B4", 1), ("E6", 1), ("E7", 6), ("C4", 4), ("D5", 5)]:
    d = build_datum(label)
    ctx = ParabolicContext(d, i)
    v = v_element(d, i)
    verdict = smi_as_interval(d, i)
    dim = demazure_dim(d, i, bar_involution(v, ctx))
    smi = set(enumerate_smi(d, i))
    print(f"{label}, i={i}: #SM_i = {len(smi)}, Demazure dim = {dim}, "
          f"SM_i equals whole interval: {verdict.full_interval_matches}, "
          f"top is strong: {w0J(ctx) in smi}")
