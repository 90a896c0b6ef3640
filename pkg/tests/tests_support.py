"""Shared helpers for the test suite."""


def random_unimodular(rng, dim, max_entry=3):
    """Random integer unimodular matrix with small entries (shear products)."""
    while True:
        m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        for _ in range(rng.randint(1, 5)):
            i, j = rng.sample(range(dim), 2)
            s = rng.choice([-1, 1])
            for k in range(dim):
                m[i][k] += s * m[j][k]
        if max(abs(x) for row in m for x in row) <= max_entry:
            return m
