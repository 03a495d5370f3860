# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.analysis.hop import *
from zneqv.analysis.extrapolation import *
from zneqv.analysis.statistics import *
from zneqv.analysis.records import *
