import re

from setuptools import find_packages, setup

def readme():
    with open('README.md') as f:
        return f.read()

_pkg_name = 'pyellcop'

with open(f'{_pkg_name}/__init__.py', 'r') as fd:
    VERSION = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', fd.read(), re.MULTILINE).group(1)

setup(
    name=_pkg_name,
    version=VERSION,
    description="Exact maximum likelihood estimation of Gaussian and Student's t copula correlation matrices.",
    long_description=readme(),
    long_description_content_type='text/markdown',
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules"
    ],
    license='License :: OSI Approved :: Apache Software License',
    packages=find_packages(include=[_pkg_name, f"{_pkg_name}.*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.26,<3",
        "scipy>=1.11,<2",
        "pydantic>=2.10,<2.11",
        "typing_extensions>=4.6",
    ],
    entry_points={
        "console_scripts": [
            f"{_pkg_name}={_pkg_name}.cli.main:main",
        ]
    },
)
