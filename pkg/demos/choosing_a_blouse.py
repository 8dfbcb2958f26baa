"""Rank five blouses with the comparison-matrix method.

Each object is compared with every other on each attribute. A cell counts the
rivals it matches or beats in truth and indeterminacy and subtracts the ones it
matches or beats in falsity. Row sums are the scores.
"""

import numpy as np

from gnss import comparison_matrix, decide, fixture, restrict, scores

ratings = fixture("table10")
for obj, row in zip(ratings.universe, ratings.rows()):
    print(obj, "  ".join(str(x) for x in row))

m = comparison_matrix(ratings)
print("\ncomparison matrix")
print("    " + " ".join(f"{k.label[:6]:>6}" for k in m.cols))
for obj, row in zip(m.rows, m.cells):
    print(f"{obj:>3} " + " ".join(f"{v:>6}" for v in row))

sv = scores(m)
print("\nscores:", sv.as_dict())
print("best by numpy argmax:", m.rows[int(np.argmax(m.cells.sum(axis=1)))])

r = decide(ratings)
for place, (score, objs) in enumerate(r.groups, start=1):
    print(f"{place}. {', '.join(objs)} ({score})")
print("winners:", r.winners)

# a shopper who only cares about price sees a different order
cheap_only = decide(restrict(ratings, ["cheap", "costly"]))
print("\nprice only:", cheap_only.groups)

# the printed matrix disagrees with the recount in two cells
printed = fixture("table11")
mask = m.cells != printed.cells
for i, j in zip(*np.nonzero(mask)):
    print(f"printed ({m.rows[i]}, {m.cols[j].label}) = {printed.cells[i, j]}, recount gives {m.cells[i, j]}")
