import os
import re
from setuptools import setup, find_packages

script_dir = os.path.dirname(os.path.abspath(__file__))


def read_version():
    with open(os.path.join(script_dir, "python", "riemann_susy", "__init__.py")) as f:
        return re.search(r'__version__ = "([^"]+)"', f.read()).group(1)


def regular_setup():
    setup(
        name="riemann_susy",
        version=read_version(),
        description="symbolic and numeric verification of the Riemann invariant system and its supersymmetric extension",
        packages=find_packages(where="python"),
        package_dir={"": "python"},
        package_data={"riemann_susy": ["config.ini"]},
        python_requires=">=3.8",
        install_requires=[
            "prettytable",
            "sympy>=1.9",
            "numpy",
            "scipy",
        ],
        extras_require={"test": ["pytest"]},
        entry_points={
            "console_scripts": ["riemann_susy = riemann_susy.__main__:main"]
        },
        zip_safe=False,
    )


if __name__ == "__main__":
    regular_setup()
