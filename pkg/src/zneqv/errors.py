# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from pandapower.auxiliary import ppException


class ZneqvError(ppException):
    """
    Base class of all errors raised by zneqv.
    """
    pass


class CircuitError(ZneqvError, ValueError):
    """
    Raised for malformed gates or circuits (bad qubit indices, non-unitary blocks, misplaced
    measurements).
    """
    pass


class QasmParseError(CircuitError):
    """
    Raised if an OpenQASM document does not conform to the supported subset. Carries the line and
    column of the offending token (both 1-based).
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %s, column %s: %s" % (line, column, message)
        super().__init__(message)


class DecompositionError(ZneqvError, ValueError):
    pass


class RoutingError(ZneqvError, ValueError):
    pass


class FoldingError(ZneqvError, ValueError):
    pass


class SimulationError(ZneqvError, ValueError):
    pass


class AnalysisError(ZneqvError, ValueError):
    pass


class ExtrapolationError(AnalysisError):
    pass


class ConfigError(ZneqvError, ValueError):
    pass


class IngestError(ZneqvError, ValueError):
    pass


class ExperimentError(ZneqvError):
    """
    Wraps an error raised while a single benchmark circuit was processed.
    """

    def __init__(self, message, circuit_id=None):
        self.circuit_id = circuit_id
        super().__init__(message)

    def __reduce__(self):
        return self.__class__, (str(self), self.circuit_id)
