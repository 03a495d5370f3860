# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.circuit.gates import *
from zneqv.circuit.circuit import *
from zneqv.circuit.unitary import *
from zneqv.circuit.qasm import *
