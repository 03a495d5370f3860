# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.harness.config import *
from zneqv.harness.record_log import *
from zneqv.harness.run_experiment import *
from zneqv.harness.report import *
from zneqv.harness.ingest import *
from zneqv.harness.qv_search import *
from zneqv.harness.calibration import *
