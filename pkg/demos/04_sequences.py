"""The s and t sequences: measure t from the drawing, propagate both, and evaluate the inner sums.

    python demos/04_sequences.py
"""

from aqcross import seqtables

print("t_8 measured:", seqtables.t_geometry(8))
print("t_8 tabulated:", list(seqtables.T8))
print("s_9 propagated:", seqtables.s_table(9))

# The measured sequence keeps obeying the doubling recurrence.
for n in range(9, 13):
    same = seqtables.t_geometry(n) == seqtables.t_recurrence(n)
    print(f"n={n}: t from drawing == t from recurrence: {same}")

for n in range(8, 12):
    print(f"n={n}: blue/red inner {seqtables.blue_red_inner(n)}, blue/black inner {seqtables.blue_black_inner(n)}")

print()
print(seqtables.seq_table(8).to_csv(), end="")
