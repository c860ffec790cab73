#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
测试公共夹具：常用多项式环、算例中的态射与带种子的随机数发生器。
"""

import random
import sys
from pathlib import Path

import pytest

# 确保src包在Python路径中
root_path = Path(__file__).resolve().parent.parent
if str(root_path) not in sys.path:
    sys.path.insert(0, str(root_path))

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_polys
from src.algebra.polynomial import PolyRing
from src.dynamics.morphism import Morphism
from src.utils.config import get_default_config, set_active_config
from src.utils.logger import setup_logger

DEFAULT_SEED = 20240101


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=DEFAULT_SEED, help="随机性质测试的种子")
    parser.addoption("--run-slow", action="store_true", default=False, help="运行标记为 slow 的测试")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 完整规模的性质测试与穷举搜索")
    setup_logger(log_level="WARNING")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="需要 --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def default_config():
    set_active_config(get_default_config())
    yield
    set_active_config(get_default_config())


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def full_runs(request) -> bool:
    return request.config.getoption("--run-slow")


@pytest.fixture
def qq_ring() -> PolyRing:
    return PolyRing(["x", "y", "z"], ScalarField.rationals())


@pytest.fixture
def f2_ring() -> PolyRing:
    return PolyRing(["x", "y", "z"], ScalarField.prime(2))


@pytest.fixture
def param_ring() -> PolyRing:
    field = ScalarField.function_field(ScalarField.rationals(), ["a0", "a1", "a2"])
    return PolyRing(["x", "y", "z"], field)


@pytest.fixture
def example_map(f2_ring) -> Morphism:
    """F_2 上的 (z², y² + xz + z², x²)"""
    return Morphism(parse_polys(["z^2", "y^2 + x*z + z^2", "x^2"], f2_ring))


@pytest.fixture
def squaring_map(qq_ring) -> Morphism:
    return Morphism(parse_polys(["x^2", "y^2", "z^2"], qq_ring))


@pytest.fixture
def conic_map(qq_ring) -> Morphism:
    """(x², y² + z², z²)"""
    return Morphism(parse_polys(["x^2", "y^2 + z^2", "z^2"], qq_ring))


@pytest.fixture
def jobs_dir() -> Path:
    return root_path / "jobs"
