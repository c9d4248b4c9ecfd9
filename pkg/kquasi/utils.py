import os
from math import gcd

import numpy as np
from sympy import mod_inverse

from .log import Log, LogLevel

_worker_count = 1


def set_worker_count(count):
    """Define the number of worker processes used by partitioned sweeps"""
    global _worker_count
    cores_available = os.cpu_count() or 1
    final_count = max(1, min(cores_available, count))
    if count > cores_available:
        Log(LogLevel.Warn,
            f'{count} workers exceeds the number of available cores of your machine ({cores_available}). Setting it to {final_count}.')
    _worker_count = final_count


def worker_count():
    return _worker_count


def indent(obj, amount=2):
    """Indent output of subobjects"""
    output = str(obj)
    result = ""
    lines = output.splitlines(keepends=True)
    if len(lines) == 1:
        result += lines[0]
    else:
        for line in lines:
            result += line + ' '*amount
    return result


def inverse(x, n):
    """Inverse of ``x`` modulo ``n``, or ``None`` when it does not exist."""
    if n == 1:
        return 0
    if gcd(x % n, n) != 1:
        return None
    return int(mod_inverse(x % n, n))


def odd_orders(max_n, start=3):
    """Odd orders ``start <= n <= max_n``."""
    first = start if start % 2 == 1 else start + 1
    return range(first, max_n + 1, 2)


def valid_a(n):
    """Boolean mask over a in Z_n: both a and 1-a are units."""
    a = np.arange(n, dtype=np.int64)
    return (np.gcd(a, n) == 1) & (np.gcd((1 - a) % n, n) == 1)


def progress(iterable, verbose=False, desc=None, total=None):
    """Wrap ``iterable`` in a tqdm bar when ``verbose`` is set."""
    if not verbose:
        return iterable
    from tqdm import tqdm
    return tqdm(iterable, desc=desc, total=total)


def partitioned_map(func, items, verbose=False, desc=None):
    """
    ``[func(item) for item in items]``, spread over ``worker_count()`` processes
    when more than one worker is configured. ``func`` must be picklable.
    """
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in progress(items, verbose, desc=desc)]
    from multiprocessing import Pool
    with Pool(min(workers, len(items))) as pool:
        return list(progress(pool.imap(func, items), verbose, desc=desc, total=len(items)))
