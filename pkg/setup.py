# -*- coding: utf-8; mode: python -*-
from pathlib import Path
from setuptools import find_packages, setup
from polyflow import __version__

here = Path(__file__).absolute().parent
with (here / 'CHANGES.rst').open(encoding='utf-8') as f:
    CHANGES = f.read()
with (here / 'readme.rst').open(encoding='utf-8') as f:
    README = f.read()

setup(
    name='polyflow',
    version=__version__,
    description='Wiring diagrams over polynomial functors, run as '
                'control-flow programs',
    long_description=README + '\n\n' + CHANGES,
    license='MIT',
    packages=find_packages(exclude=["*.test", "*.test.*"]),
    install_requires=['jsonschema>=4.0'],
    extras_require={
        'test': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['polyflow = polyflow.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
)
