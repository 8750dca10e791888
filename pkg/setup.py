from setuptools import setup, find_packages


with open('README.rst') as f:
    readme = f.read()

setup(
    name='tori',
    version='1.0.0',
    author='tori developers',
    packages=find_packages(exclude=('tests', 'docs')),
    package_data={'tori': ['data/*.json']},
    description='Python 3 tools to compute rationality and Hasse norm principle invariants of norm-one tori',
    long_description=readme,
    python_requires='>=3.5',
    install_requires=[
        'click>=7.0',
        'sympy>=1.5',
    ],
    entry_points={
        'console_scripts': ['tori=tori.cli:tori'],
    },
)
