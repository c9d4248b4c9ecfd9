from dataclasses import dataclass, field
from functools import partial
from itertools import islice, permutations
from typing import List, Optional, Tuple

import numpy as np

from .. import defaults
from ..errors import OrderTooLarge, RangeError
from ..linear import recover_linear
from ..log import Log, LogLevel
from ..tables import from_translatable_sequence, is_quasigroup
from ..utils import partitioned_map

_CHUNK = 20000


@dataclass
class EnumerationResult:
    """Survivors of ``enumerate(n, k)``; ``linear_matches[i]`` is the linear form of ``tables[i]``."""
    n: int
    k: int
    tables: list = field(default_factory=list)
    linear_matches: List[Optional[Tuple[int, int]]] = field(default_factory=list)

    def __len__(self):
        return len(self.tables)

    def to_dict(self):
        return {
            'n': self.n, 'k': self.k, 'count': len(self.tables),
            'tables': [t.tolist() for t in self.tables],
            'linear_matches': [None if m is None else list(m) for m in self.linear_matches],
        }


def check_enumeration_order(n, max_n):
    if max_n > defaults.ENUMERATION_HARD_MAX_N:
        raise OrderTooLarge(
            f'enumeration is limited to n <= {defaults.ENUMERATION_HARD_MAX_N}, asked for {max_n}')
    if n > max_n:
        raise OrderTooLarge(f'n={n} exceeds the enumeration bound {max_n}; pass max_n to raise it')


def _first_rows(n, k, second, quasigroups_only=True):
    """Every surviving first row with ``row0[0] = 0`` and ``row0[1] = second``."""
    rest = [v for v in range(1, n) if v != second]
    # the diagonal cell T[i][i] reads row0[(1 - k)i]
    diagonal = ((1 - k) * np.arange(n)) % n
    expected = np.arange(n)
    rows = []
    candidates = permutations(rest)
    while True:
        chunk = list(islice(candidates, _CHUNK))
        if not chunk:
            break
        block = np.empty((len(chunk), n), dtype=np.int64)
        block[:, 0] = 0
        block[:, 1] = second
        block[:, 2:] = np.array(chunk, dtype=np.int64).reshape(len(chunk), n - 2)
        keep = np.all(block[:, diagonal] == expected[None, :], axis=1)
        for row0 in block[keep]:
            if quasigroups_only and not is_quasigroup(from_translatable_sequence(row0, k)):
                continue
            rows.append(tuple(int(v) for v in row0))
    return rows


def enumerate(n, k, quasigroups_only=True, max_n=defaults.ORACLE_MAX_N, verbose=False):
    """
    Brute-force search for the idempotent k-translatable quasigroups of order n.

    Every first row is a permutation fixing 0; each is extended by
    ``T[i][j] = row0[(j - k·i) mod n]`` and kept when the whole diagonal is
    idempotent and, unless ``quasigroups_only`` is off, the table is Latin.
    The search is partitioned by ``row0[1]`` over ``worker_count()`` processes.
    """
    if n < 2 or not 1 <= k < n:
        raise RangeError(f'enumerate: need n >= 2 and 1 <= k < n, got n={n}, k={k}')
    check_enumeration_order(n, max_n)

    search = partial(_search_partition, n=n, k=k, quasigroups_only=quasigroups_only)
    parts = partitioned_map(search, range(1, n), verbose, desc=f'enumerate n={n} k={k}')
    result = EnumerationResult(n, k)
    for rows in parts:
        for row0 in rows:
            table = from_translatable_sequence(row0, k)
            result.tables.append(table)
            result.linear_matches.append(recover_linear(table))
    Log(LogLevel.Debug, f'enumerate(n={n}, k={k}): {len(result)} survivor(s)')
    return result


def _search_partition(second, n, k, quasigroups_only):
    return _first_rows(n, k, second, quasigroups_only)
