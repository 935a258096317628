#!/usr/bin/env python3
"""
Shared fixtures: preset base contexts.
"""

import os
import sys

import pytest

# Repository root on the path so ``src`` imports resolve
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebraic import make_algebraic
from src.bases import midpoint_base, p1, p2, q2
from src.counting import silver_context
from src.expansions import BaseContext


@pytest.fixture(scope="session")
def silver_ctx() -> BaseContext:
    """M = 2, q = 1 + sqrt(2)."""
    return silver_context()


@pytest.fixture(scope="session")
def golden_ctx() -> BaseContext:
    """M = 1, q = golden ratio (= p1(1))."""
    return BaseContext.create(1, make_algebraic([1, -1, -1], (1, 2)))


@pytest.fixture(scope="session")
def m1_q2_ctx() -> BaseContext:
    return BaseContext.create(1, q2(1))


@pytest.fixture(scope="session")
def m2_mid_ctx() -> BaseContext:
    return BaseContext.create(2, midpoint_base(2))


@pytest.fixture(scope="session")
def m2_p2_ctx() -> BaseContext:
    return BaseContext.create(2, p2(2))


@pytest.fixture(scope="session")
def m3_mid_ctx() -> BaseContext:
    return BaseContext.create(3, midpoint_base(3))


@pytest.fixture(scope="session")
def m3_p1_ctx() -> BaseContext:
    return BaseContext.create(3, p1(3))


@pytest.fixture(scope="session")
def m4_q2_ctx() -> BaseContext:
    return BaseContext.create(4, q2(4))
