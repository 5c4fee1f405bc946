"""3x3 matrices of Polys with a per-row truncation bound.

``cuts[i]`` is the largest weighted degree kept in row i (``None``: exact).
Products are formed exactly and cut row by row, which is sound whenever the
matrices respect the degree filtration (true for every matrix built here).
"""

from __future__ import annotations

from .algebra import Poly, TruncSeries

RANGE3 = range(3)


def _cut(p, cut):
    return p.truncate(cut)


def identity(vs, cuts):
    one, zero = Poly.const(vs, 1), Poly.zero(vs)
    return tuple(tuple(_cut(one if i == j else zero, cuts[i]) for j in RANGE3) for i in RANGE3)


def zero(vs):
    z = Poly.zero(vs)
    return tuple(tuple(z for _ in RANGE3) for _ in RANGE3)


def truncate_rows(m, cuts):
    return tuple(tuple(_cut(m[i][j], cuts[i]) for j in RANGE3) for i in RANGE3)


def add(a, b, cuts):
    return tuple(tuple(_cut(a[i][j] + b[i][j], cuts[i]) for j in RANGE3) for i in RANGE3)


def sub(a, b, cuts):
    return tuple(tuple(_cut(a[i][j] - b[i][j], cuts[i]) for j in RANGE3) for i in RANGE3)


def mul(a, b, cuts):
    out = []
    for i in RANGE3:
        row = []
        for j in RANGE3:
            acc = Poly.zero(a[i][0].vs)
            for k in RANGE3:
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k].mul_trunc(b[k][j], cuts[i])
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def scale(s, m, cuts):
    """Multiply every entry by a scalar series ``s`` (Poly, TruncSeries or rational)."""
    if isinstance(s, TruncSeries):
        s = s.poly
    if isinstance(s, Poly):
        return tuple(tuple(m[i][j].mul_trunc(s, cuts[i]) for j in RANGE3) for i in RANGE3)
    return tuple(tuple(m[i][j].scale(s) for j in RANGE3) for i in RANGE3)


def trace(m):
    return m[0][0] + m[1][1] + m[2][2]


def to_text(m):
    width = [max(len(str(m[i][j])) for i in RANGE3) for j in RANGE3]
    lines = []
    for i in RANGE3:
        cells = [str(m[i][j]).ljust(width[j]) for j in RANGE3]
        lines.append("[ " + " | ".join(cells) + " ]")
    return "\n".join(lines)


def to_json(m):
    return [[m[i][j].to_json() for j in RANGE3] for i in RANGE3]


def from_json(rows, vs=None):
    return tuple(tuple(Poly.from_json(rows[i][j], vs) for j in RANGE3) for i in RANGE3)
