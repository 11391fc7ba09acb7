"""Bernoulli numbers of both kinds.

The table is grown with the triangular recurrence that comes from
``B * H = id`` in the exponential-basis product::

    sum_{j=0}^{n} C(n, j) B_j / (n - j + 1) = [n == 0]

which gives the first-kind convention B_1 = -1/2.
"""
from __future__ import annotations

import os
import threading
from fractions import Fraction
from math import comb
from pathlib import Path

from .exact import format_rational, parse_rational

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "bernoulli_second",
    "beta_plus",
    "default_table",
    "load_cache",
    "save_cache",
]


class BernoulliTable:
    """Append-only table of first-kind Bernoulli numbers.

    Reads of entries that already exist take no lock; extension is
    serialized so concurrent callers never compute the same entry twice.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {k}")
        values = self._values
        if k < len(values):
            return values[k]
        self.extend(k)
        return self._values[k]

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def extend(self, k: int) -> None:
        with self._lock:
            vals = self._values
            for n in range(len(vals), k + 1):
                s = Fraction(0)
                for j in range(n):
                    s += comb(n, j) * vals[j] / (n - j + 1)
                vals.append(-s)

    def seed(self, values: list[Fraction]) -> None:
        """Adopt a previously computed prefix (e.g. from disk).

        The last entry is re-derived from the ones before it; a mismatch
        means the prefix is corrupt and nothing is adopted.
        """
        if not values or values[0] != 1:
            raise ValueError("cache must start with B_0 = 1")
        check = BernoulliTable()
        with check._lock:
            check._values = list(values[:-1])
        check.extend(len(values) - 1)
        if check._values[-1] != values[-1]:
            raise ValueError(
                f"cached B_{len(values) - 1} does not match its recurrence"
            )
        with self._lock:
            if len(values) > len(self._values):
                # existing entries must agree with the cache
                for a, b in zip(self._values, values):
                    if a != b:
                        raise ValueError("cache disagrees with computed table")
                self._values = list(values)


_DEFAULT = BernoulliTable()


def default_table() -> BernoulliTable:
    return _DEFAULT


def bernoulli(k: int) -> Fraction:
    """First-kind B_k (B_1 = -1/2)."""
    return _DEFAULT[k]


def bernoulli_second(k: int) -> Fraction:
    """Second-kind B+_k: identical to B_k except B+_1 = +1/2."""
    b = _DEFAULT[k]
    return -b if k == 1 else b


def beta_plus(k: int) -> Fraction:
    """B_k / k with the sign of the k = 1 entry flipped (so beta+_1 = 1/2)."""
    if k < 1:
        raise ValueError("beta_plus(k) needs k >= 1")
    return bernoulli_second(k) / k


def save_cache(path: str | os.PathLike, table: BernoulliTable | None = None) -> None:
    """Write/extend the on-disk cache, one "k num/den" line per entry."""
    table = table or _DEFAULT
    p = Path(path)
    have = 0
    if p.exists():
        have = len(load_cache(p))
    vals = table.values
    with p.open("a", encoding="utf-8") as fh:
        for k in range(have, len(vals)):
            fh.write(f"{k} {format_rational(vals[k])}\n")


def load_cache(path: str | os.PathLike) -> list[Fraction]:
    out: list[Fraction] = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            idx, _, val = line.partition(" ")
            if int(idx) != len(out):
                raise ValueError(f"{path}:{lineno + 1}: expected index {len(out)}")
            out.append(parse_rational(val))
    return out
