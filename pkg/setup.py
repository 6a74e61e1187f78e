# PyPI supports rST, hence:
__doc__ = """
`plotkin_wef` computes exact weight distributions of codes built by the
Plotkin construction ``(u + v, v)`` when a uniformly random interleaver is
applied to ``v``: the ensemble-average spectrum of the length-2n code
follows in closed form from the spectra of the two length-n components.

Applied recursively over a code tree with frozen and active leaves, this
gives the ensemble spectra of Reed-Muller and polar-style codes in
polynomial time, with all arithmetic in exact rationals.

The package provides:

* the combine of two component spectra, whole or one weight at a time,
  and its truncated form for the low-weight end of a spectrum
* code trees: Reed-Muller builders, trees from active-leaf sets,
  recursive ensemble spectra, generator matrices, minimum distance
* independent oracles: brute-force spectra of generator matrices, the
  exact average over all n! interleavers, and a seeded Monte-Carlo estimate
* truncated union bounds on block error probability over the AWGN channel
* a command line tool, ``plotkin-wef``, with poly, JSON and CSV output

Calls of the expensive entry points can be logged and profiled with the
bundled `traced` decorator; budgets and defaults live in a small settings
layer that reads settings files and environment variables.
"""

import sys
if sys.version_info < (3, 9):
    print("Sorry, plotkin_wef requires Python 3.9 or higher.", file=sys.stderr)
    sys.exit(1)

#-------------------
import os
import re


def _version():
    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, 'plotkin_wef', 'version.py')) as f:
        return re.search(r"__version__\s*=\s*'([^']+)'", f.read()).group(1)


from setuptools import setup
setup(
    name='plotkin_wef',
    version=_version(),
    description='Exact ensemble weight enumerators of Plotkin-construction codes '
                'with random interleavers, with RM/polar code trees, oracles '
                'and union bounds.',
    long_description=__doc__,
    license='MIT',
    keywords='coding theory weight enumerator weight distribution Plotkin construction '
             'Reed-Muller polar code interleaver ensemble union bound',
    packages=['plotkin_wef'],
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.4',
    ],
    test_suite='tests',
    entry_points={
        'console_scripts': [
            'plotkin-wef = plotkin_wef.cli:main',
        ],
    },
    include_package_data=True,
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Information Analysis',
    ]
)
