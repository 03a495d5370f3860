# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os
from zneqv import zq_dir

test_path = os.path.join(zq_dir, 'test')
from zneqv.test.run_tests import *
from zneqv.test.test_imports import *
from zneqv.test.test_toolbox import *
