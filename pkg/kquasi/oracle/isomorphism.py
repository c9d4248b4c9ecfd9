import numpy as np

from .. import defaults
from ..errors import OrderTooLarge


def _propagate(T1, T2, mapping, used):
    """Closes ``mapping`` under products; ``False`` on a contradiction."""
    changed = True
    while changed:
        changed = False
        assigned = np.flatnonzero(mapping >= 0)
        for x in assigned:
            for y in assigned:
                product = T1[x, y]
                image = T2[mapping[x], mapping[y]]
                if mapping[product] < 0:
                    if used[image]:
                        return False
                    mapping[product] = image
                    used[image] = True
                    changed = True
                elif mapping[product] != image:
                    return False
    return True


def _search(T1, T2, mapping, used):
    free = np.flatnonzero(mapping < 0)
    if len(free) == 0:
        return mapping
    x = free[0]
    for target in np.flatnonzero(~used):
        trial, trial_used = mapping.copy(), used.copy()
        trial[x] = target
        trial_used[target] = True
        if _propagate(T1, T2, trial, trial_used):
            found = _search(T1, T2, trial, trial_used)
            if found is not None:
                return found
    return None


def are_isomorphic(t1, t2, max_n=defaults.ISOMORPHISM_MAX_N):
    """
    A bijection φ with ``φ(x·y) = φ(x)∘φ(y)`` from ``t1`` onto ``t2``, as a
    tuple ``(φ(0), ..., φ(n-1))``, or ``None``.

    Plain backtracking over images with product propagation. Orders above
    ``max_n`` raise ``OrderTooLarge``.
    """
    if t1.n != t2.n:
        return None
    n = t1.n
    if n > max_n:
        raise OrderTooLarge(f'are_isomorphic: n={n} exceeds the search bound {max_n}')
    # Idempotency is preserved by isomorphisms
    if t1.is_idempotent() != t2.is_idempotent():
        return None
    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    found = _search(t1.entries, t2.entries, mapping, used)
    if found is None:
        return None
    return tuple(int(v) for v in found)
