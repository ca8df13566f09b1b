"""Permutation routing on Ramanujan hypergraphs and expander overlays."""

from hyperroute._hyperroute import *  # noqa: F401,F403
