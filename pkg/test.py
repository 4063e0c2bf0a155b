#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#  Copyright (c) 2026 Multivalent Checks contributors
#
#  This file is part of Multivalent Checks.
#
#  Multivalent Checks is free software under terms of the GNU Lesser
#  General Public License version 3 (LGPLv3) as published by the Free
#  Software Foundation. See the file README for copying conditions.
#

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(['multivalent'] + sys.argv[1:]))
