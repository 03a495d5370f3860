# -*- coding: utf-8 -*-

# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from setuptools import setup

setup()
