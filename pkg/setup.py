from setuptools import setup, find_packages

# read the contents of your README file (https://packaging.python.org/en/latest/guides/making-a-pypi-friendly-readme/)
from pathlib import Path
this_directory = Path(__file__).parent
readme = (this_directory / "README.md").read_text()

# Read version information without loading all the library
with open('kquasi/version.py') as f:
    exec(f.read())

setup(
    name='kquasi',
    version=__version__,
    description='Idempotent k-translatable quasigroups over Z_n: classification, parastrophes and brute-force checks',
    license='BSD',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    install_requires=[
        f"numpy>={__np_version_min__}",
        "sympy>=1.9",
        "tqdm>=4.60",
        "matplotlib>=3.5",
    ],
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis>=6.0'],
        'docs': ['sphinx==5.3.0', 'furo==2022.12.7', 'sphinx-copybutton==0.5.1'],
    },
    entry_points={
        'console_scripts': ['qg = kquasi.cli:main'],
    },
    long_description=readme,
    long_description_content_type="text/markdown",
    python_requires=">=3.8"
)
