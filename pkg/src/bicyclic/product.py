"""Image of cells and regions under the bicyclic multiplication.

For a = (k, l) and b = (m, n) the product is

    a.b = (k + max(0, m - l), n + max(0, l - m)),

which splits into two overlapping cases:

    l <= m:  a.b = (k - l + m, n)
    l >= m:  a.b = (k, l - m + n)

Case ``l <= m``.  Put u = k - l (the diagonal of a).  The image point is
S = u + m, T = n.  Eliminating l from

    l in [A.t_min, A.t_max],  u + l in [A.s_min, A.s_max],  l <= m

leaves u in [A.d_min, A.d_max] (tight for a tight cell), m >= A.t_min and
S >= A.s_min.  Substituting u = S - m and eliminating m from

    S - A.d_max <= m <= S - A.d_min
    max(B.s_min, A.t_min) <= m <= B.s_max
    T + B.d_min <= m <= T + B.d_max

(every constraint has unit coefficients, so Fourier-Motzkin is exact over
the integers) gives a single cell with, writing m0 = max(B.s_min, A.t_min):

    S   in [max(A.s_min, m0 + A.d_min), B.s_max + A.d_max]
    T   in [max(B.t_min, m0 - B.d_max), min(B.t_max, B.s_max - B.d_min)]
    S-T in [A.d_min + B.d_min, A.d_max + B.d_max]

and the image is empty when m0 > B.s_max.

Case ``l >= m`` follows from the first by inversion, since (a.b)^-1 =
b^-1 . a^-1 and the inverses fall into case ``l <= m``.  So the image of
two cells is at most two cells and the class of regions is closed under
products.
"""

from __future__ import annotations

from functools import lru_cache

from .region import Cell, Region, make_cell


def _image_left_le_right(a: Cell, b: Cell) -> Cell | None:
    m0 = max(b.s_min, a.t_min)
    if m0 > b.s_max:
        return None
    return make_cell(
        s_min=max(a.s_min, m0 + a.d_min),
        s_max=b.s_max + a.d_max,
        t_min=max(b.t_min, m0 - b.d_max),
        t_max=min(b.t_max, b.s_max - b.d_min),
        d_min=a.d_min + b.d_min,
        d_max=a.d_max + b.d_max,
    )


@lru_cache(maxsize=1 << 18)
def cell_product(a: Cell, b: Cell) -> tuple[Cell, ...]:
    """Cells whose union is exactly {x.y : x in a, y in b}."""
    out = []
    first = _image_left_le_right(a, b)
    if first is not None:
        out.append(first)
    mirrored = _image_left_le_right(b.inverse(), a.inverse())
    if mirrored is not None:
        out.append(mirrored.inverse())
    return tuple(out)


def product_image(r1: Region, r2: Region) -> Region:
    """{x.y : x in r1, y in r2} as a canonical region."""
    return Region(c for a in r1.cells for b in r2.cells for c in cell_product(a, b))


def left_shift_image(a, r: Region) -> Region:
    """{a.x : x in r}"""
    return product_image(Region.point(a), r)


def right_shift_image(r: Region, a) -> Region:
    """{x.a : x in r}"""
    return product_image(r, Region.point(a))
