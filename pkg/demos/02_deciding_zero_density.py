#!/usr/bin/env python3
"""Decide whether a 3-graph has vanishing uniform Turán density.

A 3-graph decides to "zero" exactly when its vertices can be enumerated so
that coloring each edge's pairs red / blue / green by position never assigns
two colors to one pair.  The decider searches enumerations, pruning any
prefix that already places a monotone 2-edge path in some link, and returns
either the certificate or exhaustion evidence.
"""

import json

from turanzero import decide_uniform_turan_zero, make_threegraph, validate_certificate
from turanzero.decider import decision_to_json_dict

# One edge: the forced coloring {red, blue, green} is trivially consistent.
single = make_threegraph(3, [(0, 1, 2)])
decision = decide_uniform_turan_zero(single)
print("single edge:", decision.verdict)
print("  enumeration:", decision.certificate.enumeration)
print("  coloring:", dict(decision.certificate.coloring))
print("  validates:", validate_certificate(single, decision.certificate))

# The 4-vertex, 3-edge graph is the classic positive instance: among any
# three vertices of its link triangle, one label always lands in the middle.
k4_minus = make_threegraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
decision = decide_uniform_turan_zero(k4_minus)
print("K4 minus an edge:", decision.verdict, f"({decision.searched} nodes searched)")

# Any 3-partite 3-graph decides to zero: order the parts block by block and
# the three pair classes never collide.
tripartite = make_threegraph(6, [(0, 2, 4), (0, 3, 5), (1, 2, 5)])
decision = decide_uniform_turan_zero(tripartite)
print("3-partite instance:", decision.verdict)

# Decisions serialize to a stable JSON schema (the same one the CLI emits).
print(json.dumps(decision_to_json_dict(decision), indent=2, sort_keys=True)[:200], "...")
