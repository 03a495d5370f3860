# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
from scipy.linalg import qr


def haar_random_unitary(dim, rng):
    """
    Draws a Haar-distributed unitary from U(dim): QR decomposition of a complex Ginibre matrix,
    with the phases of R's diagonal moved into Q.

    :param dim: matrix dimension
    :type dim: int
    :param rng: random generator (or seed)
    :type rng: numpy.random.Generator, int
    :return: dim x dim unitary
    :rtype: numpy.ndarray
    """
    rng = np.random.default_rng(rng)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.)
    q, r = qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_random_su4(rng):
    """
    Haar-random 4x4 unitary rephased to determinant 1.
    """
    u = haar_random_unitary(4, rng)
    return u / np.linalg.det(u) ** 0.25
