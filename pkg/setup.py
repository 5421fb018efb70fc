# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# Script for generating the spaceform wheel.
# ```
# $ python setup.py bdist_wheel
# ```
#
# The package version can be set with the SPACEFORM_PYTHON_PACKAGE_VERSION
# environment variable. For example, this can be "20221019.12" for a snapshot
# release on 2022-10-19 with build number 12.
#
# Implementation notes:
# The wheel holds the `spaceform` and `spaceform_e2e_test` packages from the
# `python` directory. The canonical pairing documents in `fixtures` are found
# next to a source checkout, or through SPACEFORM_FIXTURE_DIR.
import os

from setuptools import setup, find_packages

PACKAGE_VERSION = os.environ.get("SPACEFORM_PYTHON_PACKAGE_VERSION") or "0.0.1"

setup(
    name="spaceform",
    version=f"{PACKAGE_VERSION}",
    description="Face-pairing construction and verification of Euclidean and "
                "hyperbolic 3-dimensional space forms",
    long_description="",
    package_dir={"": "python"},
    packages=find_packages(where="python",
                           include=["spaceform", "spaceform_e2e_test",
                                    "spaceform_e2e_test.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "scipy",
        "sympy",
        "networkx",
        "pycairo",
    ],
    entry_points={
        "console_scripts": ["spaceform = spaceform.cli:main"],
    },
    zip_safe=False,
)
