"""Independent reference computations used to check the library.

Everything here works on plain ``fractions.Fraction`` triples read straight
from decimal strings and shares no code with ``gnss``.
"""

from fractions import Fraction


def frac_triple(text):
    """'(0.5, 0.6, 0.3)' -> (Fraction, Fraction, Fraction)."""
    parts = text.strip().strip("()").split(",")
    assert len(parts) == 3
    return tuple(Fraction(p.strip()) for p in parts)


def union(a, b):
    return (max(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2]))


def intersection(a, b):
    return (min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2]))


def brute_force_matrix(rows):
    """rows[i][j] = (T, I, F) of object i under parameter j.

    Counts, for each other object k, whether i's degree is >= k's, one
    component at a time.
    """
    n = len(rows)
    m = len(rows[0]) if rows else 0
    out = []
    for i in range(n):
        line = []
        for j in range(m):
            a = d = c = 0
            for k in range(n):
                if k == i:
                    continue
                if rows[i][j][0] >= rows[k][j][0]:
                    a += 1
                if rows[i][j][1] >= rows[k][j][1]:
                    d += 1
                if rows[i][j][2] >= rows[k][j][2]:
                    c += 1
            line.append(a + d - c)
        out.append(line)
    return out


def to_fracs(s):
    """Fraction rows of a GNSoftSet, read back through its text form."""
    return [[frac_triple(str(x)) for x in row] for row in s.rows()]
