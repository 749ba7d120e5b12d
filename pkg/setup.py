# setup.py

from setuptools import setup, find_packages

setup(
    name="fuchsian-spectra",
    version="1.0.0",
    description="Thurston and length-spectrum distances between marked Fuchsian groups",
    author="Your Name",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main"],
    install_requires=[
        "pandas>=1.5.0",
        "numpy>=1.24.0",
        "python-dotenv>=1.0.0",
        "click>=8.1.0",
        "tabulate>=0.9.0",
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "fuchsian-spectra=main:main",
        ],
    },
)
