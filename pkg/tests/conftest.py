"""Shared helpers: seeded random parameter draws for the exact pipelines."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from heunpoly import CASE_ASCENDING, HeunParams, build_decomposition


def rand_fraction(rng: random.Random, lo=-5, hi=5, max_den=6, exclude=()) -> Fraction:
    while True:
        den = rng.randint(1, max_den)
        num = rng.randint(lo * den, hi * den)
        value = Fraction(num, den)
        if value not in exclude:
            return value


def rand_noninteger(rng: random.Random, lo=-5, hi=5) -> Fraction:
    den = rng.choice((2, 3, 4))
    num = rng.randint(lo, hi - 1) * den + rng.randint(1, den - 1)
    return Fraction(num, den)


def rand_c(rng: random.Random) -> Fraction:
    return rand_fraction(rng, lo=-4, hi=4, max_den=3, exclude=(Fraction(0), Fraction(1)))


def rand_params(rng: random.Random, sigma=Fraction(0)) -> HeunParams:
    return HeunParams(
        alpha=rand_fraction(rng),
        beta=rand_fraction(rng),
        gamma=rand_fraction(rng),
        delta=rand_fraction(rng),
        epsilon=rand_fraction(rng),
        q=rand_fraction(rng),
        c=rand_c(rng),
        sigma=sigma,
    )


def constrained_params(rng: random.Random, alpha=None, q=None) -> HeunParams:
    """Draw with the exponent-sum relation gamma+delta+epsilon = alpha+beta+1."""
    alpha = rand_fraction(rng) if alpha is None else Fraction(alpha)
    beta = rand_fraction(rng)
    gamma = rand_fraction(rng)
    delta = rand_fraction(rng)
    epsilon = alpha + beta + 1 - gamma - delta
    q = rand_fraction(rng) if q is None else Fraction(q)
    return HeunParams(alpha, beta, gamma, delta, epsilon, q, rand_c(rng))


def descending_safe_params(rng: random.Random, n: int, q=Fraction(0)) -> HeunParams:
    """case_i setup with alpha = -n, beta non-integer so the descent never resonates."""
    beta = rand_noninteger(rng)
    gamma = rand_fraction(rng)
    delta = rand_fraction(rng)
    epsilon = -n + beta + 1 - gamma - delta
    return HeunParams(Fraction(-n), beta, gamma, delta, epsilon, q, rand_c(rng))


def ascending_resonance_free(rng: random.Random, lam: Fraction, order: int) -> HeunParams:
    """Draw until F(lam + k) != 0 for k = 1..order on the ascending split."""
    while True:
        params = rand_params(rng)
        d = build_decomposition(params, CASE_ASCENDING)
        if d.F(lam if lam is not None else Fraction(0)) != 0:
            continue
        if all(d.F(lam + k) != 0 for k in range(1, order + 1)):
            return params


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
