#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pathlib import Path

from setuptools import find_packages, setup

# Test tooling stays in requirements.txt only
TEST_ONLY = ('pytest', 'hypothesis', 'iniconfig', 'pluggy', 'sortedcontainers')


def get_requirements() -> list[str]:
    """
    Read requirements.txt

    :return:
    """
    path = Path(__file__).resolve().parent / 'requirements.txt'
    if not path.exists():
        return []
    lines = [line.strip() for line in path.read_text(encoding='utf-8').splitlines()]
    return [line for line in lines if line and not line.startswith('#') and not line.startswith(TEST_ONLY)]


setup(
    name='equivariant-index',
    version='1.0.0',
    description='Equivariant radial and GSV indices in the Burnside ring with exact arithmetic',
    packages=find_packages(include=['backend', 'backend.*']),
    py_modules=['main'],
    install_requires=get_requirements(),
    entry_points={'console_scripts': ['equivariant-index=main:main']},
    python_requires='>=3.10',
    zip_safe=False,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
)
