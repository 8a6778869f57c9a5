from setuptools import find_namespace_packages, setup

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="smg-factorization",
    version="0.0.1",
    description="Single-shot factorization of Schrödinger equations by confluent hypergeometric functions",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["smg.factorization", "smg.factorization.*"]),
    include_package_data=True,
    install_requires=[
        "mpmath",
        "numpy",
        "scipy"
    ],
    extras_require={
        "test": ["pytest"]
    },
    entry_points={
        "console_scripts": [
            "smg-factorization=smg.factorization.cli.factorization_cli:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.6',
)
