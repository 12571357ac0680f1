"""A setuptools based module for PIP installation."""
# Docs/example setup.py: https://github.com/pypa/sampleproject/blob/master/setup.py

import os
from setuptools import setup, find_packages

__VERSION__ = '0.2.0'
base_dir = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(base_dir, 'README.md')) as readme:
    readme_contents = readme.read()


def read_requirements(filename):
    with open(os.path.join(base_dir, filename)) as requirements:
        # Drop pip-compile comments, keep the pinned requirement.
        requirements_list = [l.split('#')[0].strip() for l in requirements.readlines()]
        return [l for l in requirements_list if l]


setup(
    name='desargues',
    version=__VERSION__,
    long_description=readme_contents,
    long_description_content_type='text/markdown',
    python_requires='>=3.9',
    # These packages may be imported after the egg is installed.
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    package_data={
        'desargues': ['schemas/*.schema', 'examples/*.geo'],
    },
    install_requires=read_requirements('requirements.txt'),
    extras_require={
        'test': read_requirements('requirements-test.txt'),
    },
    entry_points={
        'console_scripts': [
            'desargues-cli = desargues.tools.__main__:run',
        ],
    },
)
