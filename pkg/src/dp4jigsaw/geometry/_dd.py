"""Incremental double description for rational polyhedral cones.

Computes a generating set (lineality basis + extreme rays) of
{z in R^n : <h, z> >= 0 for all rows h}, entirely over the integers:
rays are kept as primitive integer vectors, so no Fraction arithmetic
happens inside the hot loop.

Extreme-ray adjacency uses the combinatorial test on tight-row bitmasks.
Callers that need certified extremeness (vertex enumeration) re-verify
candidates with an active-set rank check afterwards.
"""

from ._intlinalg import primitive


def _dot(h, v):
    return sum(a * b for a, b in zip(h, v))


def dd_cone(dim, rows):
    """Return (lineality, rays) for the cone {z : <h, z> >= 0 for h in rows}.

    Both lists hold primitive integer vectors.  The cone equals
    span(lineality) + cone(rays).
    """
    lineality = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays = []  # entries [vector, tight-row bitmask]
    for idx, h in enumerate(rows):
        bit = 1 << idx
        pivot = None
        for k, ell in enumerate(lineality):
            if _dot(h, ell) != 0:
                pivot = k
                break
        if pivot is not None:
            ell = lineality.pop(pivot)
            s = _dot(h, ell)
            if s < 0:
                ell = tuple(-x for x in ell)
                s = -s
            new_lineality = []
            for v in lineality:
                t = _dot(h, v)
                if t != 0:
                    v = primitive(tuple(v[j] * s - ell[j] * t for j in range(dim)))
                new_lineality.append(v)
            lineality = new_lineality
            new_rays = []
            for vec, mask in rays:
                t = _dot(h, vec)
                if t != 0:
                    vec = primitive(tuple(vec[j] * s - ell[j] * t for j in range(dim)))
                new_rays.append([vec, mask | bit])
            # The pivot survives as a ray: tight on every earlier row
            # (it came from the lineality space), strictly feasible for h.
            new_rays.append([ell, bit - 1])
            rays = new_rays
            continue

        plus, zero, minus = [], [], []
        for vec, mask in rays:
            t = _dot(h, vec)
            if t > 0:
                plus.append((vec, mask, t))
            elif t == 0:
                zero.append([vec, mask | bit])
            else:
                minus.append((vec, mask, t))
        if not minus:
            rays = [[vec, mask] for vec, mask, _ in plus] + zero
            continue

        all_masks = [m for _, m, _ in plus] + [m for _, m in zero] + [m for _, m, _ in minus]
        n_plus, n_zero = len(plus), len(zero)
        new_rays = [[vec, mask] for vec, mask, _ in plus] + zero
        seen = {vec for vec, _ in new_rays}
        for ip, (vp, mp, tp) in enumerate(plus):
            for im, (vm, mm, tm) in enumerate(minus):
                common = mp & mm
                im_global = n_plus + n_zero + im
                adjacent = True
                for k, mk in enumerate(all_masks):
                    if k != ip and k != im_global and (mk & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = primitive(tuple(tp * vm[j] - tm * vp[j] for j in range(dim)))
                if not any(combo) or combo in seen:
                    continue
                seen.add(combo)
                # exact tight set: accumulated masks can undershoot, which
                # would poison later adjacency tests
                mask = 0
                for k in range(idx + 1):
                    if _dot(rows[k], combo) == 0:
                        mask |= 1 << k
                new_rays.append([combo, mask])
        rays = new_rays
    return lineality, [tuple(vec) for vec, _ in rays]
