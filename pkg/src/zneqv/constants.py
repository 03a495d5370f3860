# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

# QV pass threshold on the heavy output probability
HOP_THRESHOLD = 2. / 3.
# asymptotic noiseless mean HOP
HOP_IDEAL_ASYMPTOTE = (1. + np.log(2.)) / 2.
# fully decohered limit
HOP_DECOHERED = 0.5
CONFIDENCE_Z = 2.

DEFAULT_LAMBDAS = (1., 1.2, 1.5, 1.8, 2.)
MAX_SCALE_FACTOR = 3.

SHOTS_BASE = 10000
SHOTS_GLOBAL_FOLDED = 1000
SHOTS_LOCAL_FOLDED = 100
LOCAL_INSTANCES = 10

BOOTSTRAP_RESAMPLES = 100
RECORD_FLUSH_INTERVAL = 250

MAX_UNITARY_QUBITS = 12
MAX_QV_QUBITS = 12
MAX_SIM_QUBITS = 10
MAX_SUBGRAPH_SIZE = 8

DECISION_PASS = "pass"
DECISION_FAIL = "fail"

ENV_WORKERS = "ZNEQV_WORKERS"
