from codecs import open

from setuptools import setup, find_packages

# Get the long description from the README file
with open("README.rst") as f:
    long_description = f.read()

# Get the version without importing the package
about = {}
with open("maxarc/__init__.py") as f:
    exec(f.read(), about)

INSTALL_REQUIRES = [
    "numpy>=1.17",
]

TESTS_REQUIRE = [
    "pytest",
    "pytest-cov",
    "pytest-mock",
    "mock",
    "PyHamcrest",
]


setup(
    name="maxarc",
    version=about["__version__"],
    packages=find_packages(exclude=["tests", "tests.*"]),
    license="MIT",
    description="Optimal binary codes from maximal arcs in projective spaces over GF(2^m)",
    long_description=long_description,
    keywords="coding theory maximal arcs denniston finite fields subfield codes minimum distance",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: Implementation :: CPython",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    install_requires=INSTALL_REQUIRES,
    tests_require=TESTS_REQUIRE,
    extras_require={"test": TESTS_REQUIRE},
    entry_points={"console_scripts": ["maxarc=maxarc.cli:main"]},
    python_requires=">=3.8",
)
