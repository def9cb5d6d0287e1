"""
Setup script for the higgs-fourier package.
"""

from setuptools import setup, find_packages

with open("requirements.txt") as f:
    requirements = [line for line in f.read().splitlines() if line and not line.startswith("#")]

# Test dependencies (installed with pip install -e ".[test]")
test_requirements = [
    "pytest>=7.0.0",
    "hypothesis>=6.0.0",
]

setup(
    name="higgs-fourier",
    version="0.1.0",
    description="Exact fiberwise Fourier-Mukai transforms of Higgs bundles on hyperelliptic curves",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=requirements,
    extras_require={
        "test": test_requirements,
        "all": test_requirements,
    },
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "higgs-fourier=higgs_fourier.__main__:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
