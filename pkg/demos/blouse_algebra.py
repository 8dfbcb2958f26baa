"""Walk through the soft-set algebra on two small blouse surveys.

Run with ``python demos/blouse_algebra.py``.
"""

from gnss import (
    fixture,
    gnss_and,
    gnss_complement,
    gnss_intersection,
    gnss_or,
    gnss_subset,
    gnss_union,
    not_params,
)
from gnss.tabio import serialize_csv


def show(title, s):
    print(f"== {title}")
    print(serialize_csv(s).decode())


# two judges rated five blouses; they share only the "colorful" attribute
f, g = fixture("table4"), fixture("table5")
show("first judge", f)
show("second judge", g)

# union keeps every attribute, merging the shared one optimistically
show("union", gnss_union(f, g))

# intersection keeps only what both judged, pessimistically
show("intersection", gnss_intersection(f, g))

# AND / OR pair every attribute of one judge with every attribute of the other
both = gnss_and(f, g)
either = gnss_or(f, g)
print(f"AND has {len(both.params)} pair columns: {', '.join(k.label for k in both.params)}")
print("b1 on bright|costly:", both.cell("b1", "bright|costly"), "vs", either.cell("b1", "bright|costly"))
print()

# complement swaps truth and falsity and negates the attribute names
survey = fixture("table1")
print("negated attributes:", [k.label for k in not_params(survey.params)])
show("complement", gnss_complement(survey))
assert gnss_complement(gnss_complement(survey)) == survey

small, large = fixture("table2"), fixture("table3")
print("table2 inside table3:", gnss_subset(small, large))
print("table3 inside table2:", gnss_subset(large, small))
