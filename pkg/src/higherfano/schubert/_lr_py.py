"""Pure-Python Littlewood-Richardson kernel.

Counts LR tableaux of skew shape outer/inner with a given content: fillings
that are semistandard and whose reverse reading word (rows top to bottom,
each right to left) is a lattice word.
"""

from __future__ import annotations


def lr_coefficient(outer: tuple, inner: tuple, content: tuple) -> int:
    nrows = len(outer)
    inner = tuple(inner) + (0,) * (nrows - len(inner))
    if len(inner) > nrows or any(i > o for i, o in zip(inner, outer)):
        return 0
    content = tuple(c for c in content if c)
    if sum(outer) - sum(inner) != sum(content):
        return 0
    if not content:
        return 1
    # rows of the skew shape; cells are filled left to right
    m = len(content)
    width = outer[0] if outer else 0
    above = [0] * width  # entry above each column; 0 = inner cell or nothing
    counts = [0] * (m + 1)

    def fill_row(r: int) -> int:
        if r == nrows:
            return int(all(counts[i + 1] == content[i] for i in range(m)))
        lo, hi = inner[r], outer[r]
        row = [0] * (hi - lo)
        total = 0

        def place(c: int, prev: int) -> int:
            if c == hi:
                # lattice check: each letter v+1 of this row is read before
                # the letters v of this row
                added = [0] * (m + 2)
                for v in row:
                    added[v] += 1
                for v in range(1, m):
                    if counts[v + 1] + added[v + 1] > counts[v]:
                        return 0
                for v in range(1, m + 1):
                    if counts[v] + added[v] > content[v - 1]:
                        return 0
                saved = above[lo:hi]
                above[lo:hi] = row
                for v in range(1, m + 1):
                    counts[v] += added[v]
                got = fill_row(r + 1)
                for v in range(1, m + 1):
                    counts[v] -= added[v]
                above[lo:hi] = saved
                return got
            start = max(prev, above[c] + 1, 1)
            got = 0
            for v in range(start, min(m, r + 1) + 1):
                row[c - lo] = v
                got += place(c + 1, v)
            return got

        if lo == hi:
            saved = above[:]
            total = fill_row(r + 1)
            above[:] = saved
            return total
        saved = above[lo:hi]
        total = place(lo, 1)
        above[lo:hi] = saved
        return total

    # above[c] == 0 for columns still covered by the inner shape
    return fill_row(0)
