# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import importlib.metadata

__version__ = importlib.metadata.version("zneqv")
__format_version__ = '1.0.0'

import os

zq_dir = os.path.dirname(os.path.realpath(__file__))

from zneqv.errors import *
from zneqv.constants import *
from zneqv.circuit import *
from zneqv.qv import *
from zneqv.topology import *
from zneqv.networks import *
from zneqv.transpiler import *
from zneqv.folding import *
from zneqv.scheduling import *
from zneqv.sim import *
from zneqv.analysis import *
from zneqv.io.file_io import *
from zneqv.harness import *
from zneqv.toolbox import *
