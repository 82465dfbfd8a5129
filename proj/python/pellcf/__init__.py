"""Exact continued fractions of sqrt(D) over Q(x), units and pseudo-elliptic integrals.

Polynomials are passed as strings such as "x^4+4*x^3-6*x^2+4*x+1".
"""

import json

from . import _pellcf
from ._pellcf import ParseError, galois, normalize_poly

__all__ = [
    "ParseError",
    "acceptance",
    "cf",
    "classify",
    "factor",
    "family",
    "family_poly",
    "galois",
    "integrate",
    "normalize_poly",
    "run_cli",
    "unit",
]


def factor(poly):
    return json.loads(_pellcf.factor_json(poly))


def cf(poly, steps=0):
    """Tableau as a list of {h, P, Q, a} plus a status string."""
    return json.loads(_pellcf.cf_json(poly, steps))


def unit(poly):
    """Unit certificate dict, or None when none is found within the default bounds."""
    s = _pellcf.unit_json(poly)
    return None if s is None else json.loads(s)


def integrate(poly, format="text"):
    out = _pellcf.integrate(poly, format)
    if out is not None and format == "json":
        return json.loads(out)
    return out


def classify(poly):
    return json.loads(_pellcf.classify_json(poly))


def family(m=None, t=None, spec=None):
    if spec is None:
        spec = f"m={m},t={t}"
    return json.loads(_pellcf.family_json(spec))


def family_poly(m, t):
    return _pellcf.family_poly(m, str(t))


def run_cli(*args):
    """(exit_code, stdout, stderr) for the command line front end."""
    return _pellcf.run_cli(list(args))


def acceptance():
    return [dict(zip(("id", "title", "pass", "detail"), r)) for r in _pellcf.acceptance()]
