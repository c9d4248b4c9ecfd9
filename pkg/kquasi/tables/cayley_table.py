import io
import json

import numpy as np

from ..errors import RangeError, ShapeError
from ..utils import indent


class CayleyTable:
    r"""

    .. table-cayley_table:

    Cayley table (:monosp:`CayleyTable`)
    ------------------------------------

    Explicit multiplication table of a finite groupoid on the elements
    ``0, 1, ..., n-1``: ``entries[i, j]`` is the product ``i·j``.

    Tables are immutable values. ``entries`` is a read-only ``numpy`` array,
    and equality and hashing are by content, so tables can be collected in
    sets and compared directly against each other.

    The natural ordering of the elements is the stored one; translatability
    is always measured against it.
    """

    def __init__(self, entries):
        array = np.array(entries, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ShapeError(
                f'CayleyTable: expected a square table, got shape {array.shape}')
        n = array.shape[0]
        if n < 1:
            raise ShapeError('CayleyTable: a table must have at least one element')
        if array.min() < 0 or array.max() >= n:
            bad = np.argwhere((array < 0) | (array >= n))[0]
            raise RangeError(
                f'CayleyTable: entry {array[tuple(bad)]} at {tuple(int(v) for v in bad)} is out of range for n={n}')
        array.setflags(write=False)
        self._entries = array

    @property
    def n(self):
        return self._entries.shape[0]

    @property
    def entries(self):
        return self._entries

    def row(self, i):
        return self._entries[i]

    def __call__(self, x, y):
        return self._entries[x, y]

    def is_idempotent(self):
        return bool(np.all(np.diagonal(self._entries) == np.arange(self.n)))

    def is_commutative(self):
        return bool(np.array_equal(self._entries, self._entries.T))

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash((self.n, self._entries.tobytes()))

    def tolist(self):
        return self._entries.tolist()

    # ------------------------------------------------------------------
    # Serialisation

    def to_dict(self):
        return {'n': self.n, 'rows': self.tolist()}

    def to_json(self):
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        if not isinstance(data, dict) or 'rows' not in data:
            raise ShapeError('CayleyTable: JSON tables need a "rows" field')
        table = from_rows(data['rows'])
        if 'n' in data and data['n'] != table.n:
            raise ShapeError(
                f'CayleyTable: declared n={data["n"]} does not match {table.n} rows')
        return table

    def to_csv(self):
        buffer = io.StringIO()
        np.savetxt(buffer, self._entries, fmt='%d', delimiter=',')
        return buffer.getvalue()

    @staticmethod
    def from_csv(text):
        rows = [[int(v) for v in line.split(',')]
                for line in text.strip().splitlines() if line.strip()]
        return from_rows(rows)

    def to_string(self, one_based=False):
        shift = 1 if one_based else 0
        width = len(str(self.n - 1 + shift))
        lines = [' '.join(f'{v + shift:>{width}}' for v in row) for row in self._entries]
        string = f"{type(self).__name__}[\n"
        string += f"  n = {self.n},\n"
        string += f"  entries = {indent(chr(10).join(lines), amount=12)}\n"
        string += "]"
        return string

    def __repr__(self):
        return self.to_string()


def from_rows(rows):
    """Validate a list of rows and return the corresponding table."""
    if len(rows) == 0 or any(len(row) != len(rows) for row in rows):
        raise ShapeError(
            f'from_rows: expected {len(rows)} rows of length {len(rows)}')
    return CayleyTable(rows)


def from_translatable_sequence(row0, k):
    """
    Extends a first row ``row0`` to the table ``T[i][j] = row0[(j - k·i) mod n]``,
    the unique k-translatable groupoid with that first row.
    """
    row0 = np.asarray(row0, dtype=np.int64)
    n = row0.shape[0]
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return CayleyTable(row0[(j - k * i) % n])


def dual(t):
    """The dual groupoid x*y = y·x."""
    return CayleyTable(t.entries.T)


def cyclic_reorder(t):
    """
    Renumbers the elements along the cyclic shift x -> x+1 of the ordering:
    ``new[i][j] = old[i-1][j-1] + 1 (mod n)``. Applying it n times gives back
    the original table, and any k-translatable sequence of the input becomes a
    k-translatable sequence of the output.
    """
    n = t.n
    shifted = np.roll(np.roll(t.entries, 1, axis=0), 1, axis=1)
    return CayleyTable((shifted + 1) % n)
