# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import numpy as np

from zneqv.errors import CircuitError


@dataclass(frozen=True)
class HeavySet:
    """
    Basis states whose ideal probability strictly exceeds the median.
    """
    n: int
    members: frozenset
    median: float

    def __len__(self):
        return len(self.members)

    def __contains__(self, index):
        return index in self.members

    def mask(self):
        m = np.zeros(2 ** self.n, dtype=bool)
        m[sorted(self.members)] = True
        return m

    def bitstrings(self):
        return [index_to_bitstring(i, self.n) for i in sorted(self.members)]

    def to_dict(self):
        return {"n": self.n, "members": sorted(int(m) for m in self.members),
                "median": float(self.median)}

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["n"]), frozenset(int(m) for m in d["members"]), float(d["median"]))


def index_to_bitstring(index, n):
    """
    Qubit (or classical bit) 0 is printed rightmost.
    """
    return format(int(index), "0%db" % n)


def bitstring_to_index(bitstring):
    return int(bitstring, 2)


def heavy_set(p):
    """
    Computes the heavy set of an ideal output distribution.

    :param p: probability vector of length 2^n
    :type p: numpy.ndarray
    :return: the heavy set
    :rtype: HeavySet

    :Example:
        >>> sorted(heavy_set([0., 0., 0., 1.]).members)
        [3]
    """
    p = np.asarray(p, dtype=float)
    n = int(round(np.log2(len(p))))
    if 2 ** n != len(p):
        raise CircuitError("Distribution length %d is not a power of two" % len(p))
    if abs(p.sum() - 1.) > 1e-6:
        raise CircuitError("Distribution sums to %.9f, expected 1" % p.sum())
    median = float(np.median(p))
    members = frozenset(int(i) for i in np.flatnonzero(p > median))
    return HeavySet(n, members, median)
