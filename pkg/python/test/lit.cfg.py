# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import os
import shutil
import sys
import tempfile

import lit.formats

# Configuration file for the 'lit' test runner.

# name: The name of this test suite.
config.name = 'SPACEFORM_PYTHON'

config.test_format = lit.formats.ShTest(execute_external=True)

# suffixes: A list of file extensions to treat as test files.
config.suffixes = ['.py']

# excludes: A list of directories to exclude from the testsuite. The 'Inputs'
# subdirectories contain auxiliary inputs for various tests in their parent
# directories.
config.excludes = ['lit.cfg.py', 'Inputs', 'README.txt', '__pycache__']

# test_source_root: The root path where tests are located.
config.test_source_root = os.path.dirname(__file__)

# test_exec_root: The root path where tests should be run.
config.test_exec_root = os.path.join(
    os.environ.get('SPACEFORM_TEST_BUILD_DIR', tempfile.gettempdir()), 'spaceform-lit')

python_root = os.path.dirname(config.test_source_root)
repo_root = os.path.dirname(python_root)

for var in ['HOME', 'PATH', 'TMP', 'TEMP', 'TMPDIR']:
    if var in os.environ:
        config.environment[var] = os.environ[var]
# The package and `framework.py` import without installation.
config.environment['PYTHONPATH'] = os.pathsep.join(
    p for p in [python_root, config.test_source_root, os.environ.get('PYTHONPATH')] if p)
config.environment['SPACEFORM_FIXTURE_DIR'] = os.path.join(repo_root, 'fixtures')

config.substitutions.append(('%PYTHON', sys.executable))
config.substitutions.append(('%FIXTURES', os.path.join(repo_root, 'fixtures')))

# LLVM's FileCheck when available, else the `filecheck` Python port.
filecheck = shutil.which('FileCheck') or shutil.which('filecheck')
if filecheck:
    config.substitutions.append(('FileCheck', filecheck))
