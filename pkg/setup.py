from setuptools import setup, find_packages

setup(
    name="mimo_dof",
    version="0.1.0",
    description="DoF regions of two-user MIMO interference channels with isotropic fading, with Monte Carlo checks",
    packages=find_packages(exclude=["tests", "scripts"]),
    install_requires=[
        "numpy",
        "scipy>=1.9",
    ],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["mimo-dof=mimo_dof.cli:main"]},
)
