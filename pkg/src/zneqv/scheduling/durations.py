# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from pandapower.io_utils import JSONSerializableClass

from zneqv.circuit.gates import X, SX, SXDG, RZ, CX, BARRIER, MEASURE
from zneqv.errors import ConfigError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


class DurationModel(JSONSerializableClass):
    """
    Gate durations in abstract time units. RZ is a virtual gate and takes no time.
    """

    def __init__(self, x=1., sx=1., cx=5., measure=15., rz=0.):
        """

        :param x: duration of an X pulse
        :type x: float, default 1
        :param sx: duration of an SX pulse
        :type sx: float, default 1
        :param cx: duration of a CX gate
        :type cx: float, default 5
        :param measure: duration of a measurement
        :type measure: float, default 15
        :param rz: must be 0
        :type rz: float, default 0
        """
        super(DurationModel, self).__init__()
        if rz != 0:
            raise ConfigError("RZ is virtual and must have duration 0, got %s" % rz)
        for name, value in (("x", x), ("sx", sx), ("cx", cx), ("measure", measure)):
            if not value > 0:
                raise ConfigError("Duration of %s must be positive, got %s" % (name, value))
        self.x = float(x)
        self.sx = float(sx)
        self.cx = float(cx)
        self.measure = float(measure)
        self.rz = 0.

    def __repr__(self):
        return "DurationModel(x=%g, sx=%g, cx=%g, measure=%g, rz=0)" \
               % (self.x, self.sx, self.cx, self.measure)

    def duration(self, gate):
        kind = gate.kind
        if kind == X:
            return self.x
        if kind in (SX, SXDG):
            return self.sx
        if kind == CX:
            return self.cx
        if kind == MEASURE:
            return self.measure
        if kind in (RZ, BARRIER):
            return 0.
        raise ConfigError("No duration for non-native %s gates" % kind)

    def to_dict(self):
        return {"x": self.x, "sx": self.sx, "cx": self.cx, "measure": self.measure, "rz": self.rz}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)
