"""Random regions for the property tests (seeded, plus hypothesis strategies)."""

import math
import random

from hypothesis import strategies as st

from bicyclic.region import Region, make_cell

INF = math.inf


def random_cell(rng: random.Random, b: int = 12):
    while True:
        s_min = rng.randint(0, b)
        t_min = rng.randint(0, b)
        s_max = rng.choice([INF, s_min + rng.randint(0, b)])
        t_max = rng.choice([INF, t_min + rng.randint(0, b)])
        d_min = rng.choice([-INF, rng.randint(-b, b)])
        d_max = rng.choice([INF, (d_min if d_min != -INF else rng.randint(-b, b)) + rng.randint(0, b)])
        c = make_cell(s_min, s_max, t_min, t_max, d_min, d_max)
        if c is not None:
            return c


def random_region(rng: random.Random, b: int = 12, max_cells: int = 3) -> Region:
    cells = [random_cell(rng, b) for _ in range(rng.randint(0, max_cells))]
    if rng.random() < 0.3:
        cells += [make_cell(s, s, t, t) for s, t in
                  ((rng.randint(0, b), rng.randint(0, b)) for _ in range(rng.randint(1, 3)))]
    return Region(cells)


def random_regions(seed: int, count: int, b: int = 12):
    rng = random.Random(seed)
    return [random_region(rng, b) for _ in range(count)]


elements = st.tuples(st.integers(0, 30), st.integers(0, 30))
regions = st.integers(0, 2**32 - 1).map(lambda seed: random_region(random.Random(seed)))
