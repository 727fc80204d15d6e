"""Exact and Monte Carlo statistics of finite classical groups."""

from fractions import Fraction

from . import _core
from ._core import ArgumentError, ResourceError, __version__, limit, q_infinity, monte_carlo, weyl_monte_carlo, run_cli

__all__ = [
    "ArgumentError",
    "ResourceError",
    "__version__",
    "limit",
    "q_infinity",
    "gl_series",
    "sl_coset_series",
    "proportion",
    "monte_carlo",
    "group_order",
    "coset_average",
    "symmetric_a",
    "symmetric_expectation",
    "derangements",
    "weyl_exact",
    "weyl_monte_carlo",
    "inverse_transpose_identity",
    "orthogonal_reflection_identity",
    "generation_probe",
    "run_cli",
]


def gl_series(q, t, order):
    return [Fraction(c) for c in _core.gl_series(q, t, order)]


def sl_coset_series(q, t, mu, order):
    return [Fraction(c) for c in _core.sl_coset_series(q, t, mu, order)]


def proportion(family, n, q, t=1, coset=-1, method="enumeration", samples=100000, seed=1):
    r = _core.proportion(family, n, q, t, coset, method, samples, seed)
    if r["exact"]:
        r["value"] = Fraction(r["value"])
    return r


def group_order(family, n, q):
    return int(_core.group_order(family, n, q))


def coset_average(family, n, q, action, label=-1, tau=False):
    return Fraction(_core.coset_average(family, n, q, action, label, tau))


def symmetric_a(n, t):
    return Fraction(_core.symmetric_a(n, t))


def symmetric_expectation(n, k, t):
    return Fraction(_core.symmetric_expectation(n, k, t))


def derangements(n):
    return int(_core.derangements(n))


def weyl_exact(m):
    return Fraction(_core.weyl_exact(m))


def _identity(r):
    r["lhs"] = Fraction(r["lhs"])
    r["rhs"] = Fraction(r["rhs"])
    return r


def inverse_transpose_identity(n, q, t):
    return _identity(_core.inverse_transpose_identity(n, q, t))


def orthogonal_reflection_identity(n, q, eps, t):
    return _identity(_core.orthogonal_reflection_identity(n, q, eps, t))


def generation_probe(name, trials=0, seed=1):
    r = _core.generation_probe(name, trials, seed)
    for c in r["classes"]:
        c["exact"] = Fraction(c["exact"])
    return r
