from os import path
from setuptools import setup, find_packages
from codecs import open

with open(
    path.join(path.abspath(path.dirname(__file__)), "README.md"), encoding="utf-8"
) as f:
    long_description = f.read()

setup(
    name="delta-modular",
    version="0.1.0",
    license="MIT",
    description="Exact computation of the column numbers g(Δ,r) and h(Δ,r) of Δ-modular integer matrices.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
    keywords="integer-programming subdeterminants hermite-normal-form clique",
    packages=find_packages(include=["delta_modular"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.23.5",
        "tqdm>=4.64.1",
        "sympy>=1.12",
    ],
    extras_require={
        "plot": ["plotext~=5.2.8"],
        "test": ["plotext~=5.2.8"],
    },
    entry_points={
        "console_scripts": ["gdelta=delta_modular.cli:main"],
    },
)
