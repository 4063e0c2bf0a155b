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

" Multivalent Checks setup "

from setuptools import setup

long_description = '''Numerical checks of two class-membership results for
p-valent analytic functions of the unit disk. The package evaluates the
linear operator and the power product built on it, scans the admissibility
conditions behind both results, and runs every corollary and worked example
of the family through an empirical hypothesis -> conclusion check on a disk
grid.
'''

setup(
    name         = 'multivalent-checks',
    version      = '0.1.0',
    packages     = ['multivalent', 'multivalent.tests'],

    python_requires  = '>=3.8',
    install_requires = ['numpy >= 1.20'],
    extras_require   = {'tests': ['pytest >= 6', 'hypothesis >= 6']},
    entry_points     = {'console_scripts': ['multivalent = multivalent.cli:main']},

    description  = 'Empirical checks of membership theorems for multivalent functions.',
    long_description = long_description,
    author       = 'Multivalent Checks contributors',
    url          = 'https://github.com/multivalent-checks/multivalent-checks/',
    license      = 'GNU Lesser General Public License (LGPL), Version 3',
    keywords     = 'multivalent analytic functions starlike convex subordination',
    classifiers  = [
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
