#   ephoton -- Photon-electron entanglement in a highly excited radiation mode
#   Copyright (C) 2019  The ephoton developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name='ephoton',
    packages=find_packages(exclude=["examples", "examples.*"]),
    version='0.1.0',
    author='The ephoton developers',
    description='Entanglement of a free electron with a highly excited '
                'radiation mode',
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='GPLv3',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    install_requires=[
        "nengo>=2.8",
        "numpy>=1.16.3",
        "scipy>=1.2.0",
    ],
    extras_require={
        "tests": [
            "pytest>=4.0",
            "hypothesis>=4.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "ephoton=ephoton.cli:main",
        ],
    },
)
