"""Python access to the modjac C++ core.

Forms are returned as parsed JSON dicts. ``coefficients`` turns one into a
mapping from exponent to coefficient, both as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import cohen_h, hurwitz_h, kronecker, r3, suite_names

__all__ = [
    "coefficients",
    "cohen_h",
    "cohen_star",
    "e_3_2_8",
    "eigen_chain",
    "eta_pow",
    "hurwitz_h",
    "j_even",
    "jacobi_eisenstein",
    "kronecker",
    "newforms",
    "r3",
    "run_suite",
    "suite_names",
    "theta_pow",
]


def coefficients(form):
    """Exponent -> coefficient for a series dict. Jacobi forms give a list, one per component."""
    if "components" in form:
        return [coefficients(c) for c in form["components"]]
    den = form["den"]
    return {Fraction(e, den): Fraction(c) for e, c in form["coeffs"]}


def theta_pow(m, prec):
    return json.loads(_core.theta_pow(m, prec))


def cohen_star(r, k, prec):
    return json.loads(_core.cohen_star(r, k, prec))


def e_3_2_8(prec):
    return json.loads(_core.e_3_2_8(prec))


def eta_pow(s, prec):
    return json.loads(_core.eta_pow(s, prec))


def jacobi_eisenstein(r, k, prec):
    return json.loads(_core.jacobi_eisenstein(r, k, prec))


def j_even(phi):
    return json.loads(_core.j_even(json.dumps(phi)))


def newforms(twok, prec):
    return [(json.loads(f), csv) for f, csv in _core.newforms(twok, prec)]


def eigen_chain(r, k, primes, prec):
    return json.loads(_core.eigen_chain(r, k, list(primes), prec))


def run_suite(name, bound=0):
    return json.loads(_core.run_suite(name, bound))
