"""Exact verification of duality data for the Morita bicategory of algebras over Q."""

import json
from fractions import Fraction

from ._alg2 import *  # noqa: F401,F403
from ._alg2 import __version__, verify as _verify


def to_fractions(rows):
    """Matrix of "p/q" strings to nested lists of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def run(suite, corpus="default", **kwargs):
    """verify() with the report decoded from JSON."""
    return json.loads(_verify(suite, corpus, **kwargs))
