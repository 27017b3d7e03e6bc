import os

from setuptools import setup, find_packages

__version__ = "1.0.0"


install_requires = [
    'sympy',
]

tests_require = [
    'pytest',
    'pycodestyle',
]

mypy_require = [
    'mypy',
]

doc_require = [
    'sphinx',
    'sphinx_rtd_theme',
]

extras_require = {
    'test': tests_require,
    'mypy': mypy_require,
    'doc': doc_require,
}


def extra_files_line(dir_: str):
    return dir_, [os.path.join(dir_, i) for i in os.listdir(dir_) if os.path.isfile(os.path.join(dir_, i))]


data_files = [
    extra_files_line('share/typek'),
]

setup(
    name="typek",
    version=__version__,
    packages=find_packages(exclude=['tests']),
    data_files=data_files,
    install_requires=install_requires,
    extras_require=extras_require,
    description="Exact verification of Calabi-Yau threefolds of type K",
    license="GPL3",
    setup_requires=['pytest-runner'],
    tests_require=tests_require,
    test_suite="tests",
    keywords="lattices calabi-yau mirror-symmetry picard-fuchs exact-arithmetic",
    python_requires='>=3.8',
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        'console_scripts': [
            'typek = typek.cli:typek',
        ],
    }
)
