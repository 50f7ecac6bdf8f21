import re
from setuptools import setup

with open("README.md") as f:
    long_desc = f.read()
with open("pad_planner/__init__.py") as f:
    pp_version = re.search(r'__version__ = "([^"]+)"', f.read())[1]

setup(
    name="pad-planner",
    version=pp_version,
    description="Temporal planning for a toy-tidying robot that keeps an eye on the children's emotions",
    long_description=long_desc,
    long_description_content_type="text/markdown",
    packages=["pad_planner", "pad_planner.pddl"],
    package_data={"pad_planner": ["data/*.pddl", "data/*.txt"]},
    license="MIT",
    install_requires=["pygame>=2.0", "pyparsing>=3.0"],
    extras_require={"tests": ["pytest"]},
    entry_points={"console_scripts": ["pad-planner=pad_planner.cli:main"]},
    python_requires=">=3.8",
    keywords=["pddl", "temporal-planning", "emotions", "robotics"],
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8"
    ]
)
