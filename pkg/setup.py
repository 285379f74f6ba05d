# stratatools | pythonic package setup
from setuptools import setup, find_packages

import io

# read file content
def readfile(path):
    with io.open(path, 'r', encoding='utf-8') as f:
        return f.read()

setup(
    name        = 'stratatools',
    version     = '0.0.0.dev1',
    description = 'Admissible C-VHS types, stratum dimensions and Simpson limits for de Rham moduli',
    long_description = '%s\n----\n\n%s' % (
                            readfile('README.rst'), readfile('CHANGELOG.rst')),
    license     = 'GPLv3+ with wide exception for Open-Source',
    author      = 'Nexedi + Community',

    keywords    = 'higgs bundle vhs oper stratification moduli',

    packages    = find_packages(),
    install_requires = ['zope.interface', 'pygolang >= 0.1', 'six'],

    extras_require = {
                  'test': ['pytest', 'mock;python_version<="2.7"', 'random2', 'hypothesis'],
    },

    entry_points= {'console_scripts': ['strata = stratatools.strata:main']},

    classifiers = [_.strip() for _ in """\
        Development Status :: 3 - Alpha
        Intended Audience :: Science/Research
        Operating System :: POSIX :: Linux
        Programming Language :: Python :: 2
        Programming Language :: Python :: 2.7
        Programming Language :: Python :: 3
        Topic :: Scientific/Engineering :: Mathematics
        Topic :: Utilities\
    """.splitlines()]
)
