# -*- coding: utf-8 -*-
#
#  Copyright (c) 2026 Multivalent Checks contributors
#
#  Multivalent Checks is free software under terms of the GNU Lesser
#  General Public License version 3 (LGPLv3) as published by the Free
#  Software Foundation. See the file README for copying conditions.
#

" Numerical checks of class-membership results for multivalent functions. "

__author__  = 'Multivalent Checks contributors'
__license__ = 'GNU Lesser General Public License (LGPL), Version 3'
__url__     = 'https://github.com/multivalent-checks/multivalent-checks/'
__version__ = '0.1.0'
