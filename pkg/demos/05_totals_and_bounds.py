"""Assemble the six components into the drawing's total and place it between the bounds.

    python demos/05_totals_and_bounds.py
"""

from aqcross import formulas

print(f"{'n':>3} {'total':>14} {'upper':>16} {'slack':>12} {'lower':>14}")
for n in (8, 9, 10, 12, 16, 24, 32):
    bd = formulas.breakdown(n)
    print(f"{n:>3} {bd.total:>14} {float(bd.bound):>16.6g} {float(bd.slack):>12.6g} {float(bd.lower):>14.6g}")

bd = formulas.breakdown(8)
print("\ncomponents at n=8:", {w: getattr(bd, w) for w in formulas.COMPONENTS})
print("lower bound at n=8 (exact):", formulas.lower_bound(8))
print("first n with a positive lower bound:", formulas.first_positive_lower_bound())

print("\nchain of estimates at n=8:")
for label, left, rel, right, ok in formulas.ladder(8):
    print(f"  {label:28s} {float(left):>14.2f} {rel} {float(right):<14.2f} {'ok' if ok else 'BROKEN'}")

print("\nsmall cases:")
for c in formulas.small_cases():
    print(f"  n={c.n}: {c.value} ({c.kind}; {c.note})")
