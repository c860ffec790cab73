#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
subdyn - 安装脚本

用于安装依赖并注册命令行入口。
"""

from setuptools import setup, find_packages
from src import __version__

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as f:
    requirements = [line for line in f.read().splitlines() if line and not line.startswith("#")]

setup(
    name="subvariety-dynamics",
    version=__version__,
    description="射影空间子簇算术动力学的精确计算工具",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "subdyn=main:main",
        ],
    },
)
