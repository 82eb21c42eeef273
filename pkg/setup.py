#!/usr/bin/env python3

# PyBlowup - Hilbert coefficients and blowup certificates for Python
# Copyright (C) 2024 PyBlowup contributors
#
# This file is part of PyBlowup.
#
# PyBlowup is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyBlowup is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with PyBlowup.  If not, see <http://www.gnu.org/licenses/>.


import os
import re

from setuptools import setup


def get_version():
    init_path = os.path.join(os.path.abspath(os.path.dirname(__file__)), 'src', 'blowup', '__init__.py')
    with open(init_path, encoding='utf-8') as f:
        version = re.findall(r"__version__ = '(.+)'", f.read())[0]
        if os.environ.get('BUILD') is None and 'pip' not in __file__:
            version += '+develop'
        return version


def get_long_description():
    with open(os.path.join(os.path.abspath(os.path.dirname(__file__)), 'README.md'), encoding='utf-8') as f:
        return f.read()


setup(
    name='pyblowup',
    version=get_version(),
    license='LGPLv3+',
    author='PyBlowup contributors',
    description='Hilbert coefficients, reductions and Cohen-Macaulay certificates of m-primary ideals',
    long_description=get_long_description(),
    long_description_content_type='text/markdown',
    keywords='commutative algebra hilbert coefficients integral closure groebner basis reduction number',
    python_requires='>=3.8',
    packages=['blowup'],
    package_dir={'blowup': 'src/blowup'},
    install_requires=[
        'sympy>=1.9',
        'tqdm>=4.50',
    ],
    extras_require={
        'fast': ['gmpy2>=2.1'],
        'test': ['pytest>=7.0', 'hypothesis>=6.0'],
    },
    entry_points={
        'console_scripts': ['blowup=blowup.__main__:main'],
    },
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
)
