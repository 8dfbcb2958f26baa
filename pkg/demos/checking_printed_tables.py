"""Recompute published tables from their inputs and list every disagreement.

The stored fixtures keep the printed values exactly, mistakes included, so the
diff is the errata list.
"""

from gnss import comparison_matrix, fixture, gnss_and, gnss_intersection, gnss_or, gnss_union
from gnss.tabio import diff_tables

f, g = fixture("table4"), fixture("table5")
checks = [
    ("table6", gnss_union(f, g)),
    ("table7", gnss_intersection(f, g)),
    ("table8", gnss_and(f, g)),
    ("table9", gnss_or(f, g)),
    ("table11", comparison_matrix(fixture("table10"))),
]

for name, computed in checks:
    report = diff_tables(fixture(name), computed)
    print(f"{name}: {report.summary()}")
    for entry in report:
        print("   ", entry)

# the same report from the command line:
#   python -m gnss verify-paper
