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

"""
Embedded defaults. Nothing here is read from the environment; every value
can be overridden per call with a keyword argument and per run with a
command-line flag.
"""

import numpy

# series-core
DEFAULT_ORDER = 64
COEFF_EPSILON = 1e-10

# pointwise evaluation
ZERO_EPSILON = 1e-9
ORIGIN_EPSILON = 1e-6

# radial branch tracking: initial steps along [0, z], doubled on demand
BRANCH_STEPS = 16
BRANCH_MAX_STEPS = 4096

# derivative of h by a small circle around z
CONTOUR_NODES = 16
CONTOUR_RADIUS = 1e-2

# disk sampling
DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_ANGLES = 256
MAX_EXCLUDED_FRACTION = 0.01
WORST_POINTS = 5

# admissibility scans
THETA_COUNT = 512
K_MULTIPLIERS = (1.0, 2.0, 10.0)
_logspaced = numpy.logspace(-2, 3, 64)
X_SAMPLES = tuple([0.0] + sorted(list(-_logspaced) + list(_logspaced)))
Y_MULTIPLIERS = (1.0, 2.0)
SCAN_TOLERANCE = 1e-12

# |a| searches and fixture defaults
BISECT_TOLERANCE = 1e-6
BISECT_FLOOR = 1e-9
A_FRACTION = 0.9
