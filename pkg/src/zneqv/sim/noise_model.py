# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
from pandapower.io_utils import JSONSerializableClass

from zneqv.errors import ConfigError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


class NoiseModel(JSONSerializableClass):
    """
    Parameters of the simulated device noise.
    """

    def __init__(self, p2=0., p1=None, readout_flip=0., idle_z_rate=0.):
        """

        :param p2: depolarizing probability applied after every CX
        :type p2: float, default 0
        :param p1: depolarizing probability applied after every X/SX; None means p2 / 10
        :type p1: float, default None
        :param readout_flip: symmetric bit-flip probability per measured bit
        :type readout_flip: float, default 0
        :param idle_z_rate: coherent Z drift on idle qubits in radians per time unit
        :type idle_z_rate: float, default 0
        """
        super(NoiseModel, self).__init__()
        p1 = p2 / 10. if p1 is None else p1
        for name, value, high in (("p2", p2, 1.), ("p1", p1, 1.),
                                  ("readout_flip", readout_flip, 0.5)):
            if not 0. <= value <= high:
                raise ConfigError("%s must lie in [0, %g], got %s" % (name, high, value))
        if not np.isfinite(idle_z_rate):
            raise ConfigError("idle_z_rate must be finite, got %s" % idle_z_rate)
        self.p2 = float(p2)
        self.p1 = float(p1)
        self.readout_flip = float(readout_flip)
        self.idle_z_rate = float(idle_z_rate)

    def __repr__(self):
        return "NoiseModel(p2=%g, p1=%g, readout_flip=%g, idle_z_rate=%g)" \
               % (self.p2, self.p1, self.readout_flip, self.idle_z_rate)

    @property
    def is_noiseless(self):
        return self.p2 == 0 and self.p1 == 0 and self.readout_flip == 0 and self.idle_z_rate == 0

    def with_p2(self, p2, scale_p1=True):
        """
        Copy with a different CX error; p1 follows as p2 / 10 if ``scale_p1``.
        """
        return NoiseModel(p2, p2 / 10. if scale_p1 else self.p1, self.readout_flip,
                          self.idle_z_rate)

    def to_dict(self):
        return {"p2": self.p2, "p1": self.p1, "readout_flip": self.readout_flip,
                "idle_z_rate": self.idle_z_rate}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)
