from setuptools import setup, find_packages

setup(
    name="kdcfg",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "python-dotenv>=1.0.0",
        "pytest>=8.0.2",
        "typing-extensions>=4.12.2",
        "colorama>=0.4.6",
        "lark>=1.1.9",
        "hypothesis>=6.100.0",
    ],
    python_requires=">=3.9",
    description="Displacement context-free grammars: normal form, parsing and pumping",
    entry_points={"console_scripts": ["kdcfg=kdcfg.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
)
