from setuptools import setup, find_packages
from graytools import __version__

with open('README.rst') as f:
    readme = f.read()

setup(
    name='graytools',
    version=__version__,
    packages=find_packages(exclude=[
        'graytools.test',
        'graytools.test.*',
    ]),
    install_requires=[
        'numpy',
        'pandas',
        'h5py',
    ],
    entry_points={
        'console_scripts': [
            'graytools = graytools.app.cli:main',
        ],
    },
    author='graytools developers',
    description='Maximum-length sigma_k-Gray cycles: builders, loopless generators and checkers',
    long_description=readme,
)
