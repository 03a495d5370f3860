# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

try:
    from numba import jit
    numba_installed = True
except ImportError:
    from pandapower.pf.no_numba import jit
    numba_installed = False


@jit(nopython=True)
def readout_convolve(probs, n, flip):
    """
    Applies an independent symmetric bit flip with probability ``flip`` to every bit of a
    distribution over n-bit integers.
    """
    out = probs.copy()
    if flip == 0.:
        return out
    for bit in range(n):
        mask = 1 << bit
        nxt = np.empty_like(out)
        for i in range(out.shape[0]):
            nxt[i] = (1. - flip) * out[i] + flip * out[i ^ mask]
        out = nxt
    return out


@jit(nopython=True)
def heavy_mass(probs, mask):
    total = 0.
    for i in range(probs.shape[0]):
        if mask[i]:
            total += probs[i]
    return total
