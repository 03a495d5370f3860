# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import sys

from zneqv.harness.cli import main

sys.exit(main())
