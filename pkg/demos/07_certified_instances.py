#!/usr/bin/env python3
"""Grow zero-density instances and read codegree-1 pairs off their certificates.

Accepting random triples only while the identity-order forced coloring stays
consistent produces arbitrarily large 3-graphs with vanishing uniform Turán
density.  But such graphs can never be codegree-rich: the certificate itself
pins a pair of codegree at most 1, in every subhypergraph.  Dense-looking
certified instances therefore never hide a subhypergraph with large minimum
codegree.
"""

import random

from turanzero import codegree_one_witness, induced, min_codegree, random_zero_instance
from turanzero.decider import restrict_certificate, validate_certificate

h, cert = random_zero_instance(n=30, m=50, seed=0)
print(f"grew {len(h.edges)} edges on {h.n} vertices")
print("certificate validates:", validate_certificate(h, cert))

pair, value = codegree_one_witness(h, cert)
print(f"witness pair {pair} has codegree {value}")

# The same extraction works on any subhypergraph: restrict the certificate
# along with the graph and ask again.
rng = random.Random(5)
for trial in range(3):
    keep = sorted(rng.sample(range(h.n), 20))
    sub, old_ids = induced(h, keep)
    sub_cert = restrict_certificate(cert, old_ids)
    pair, value = codegree_one_witness(sub, sub_cert)
    print(f"subhypergraph {trial}: {len(sub.edges)} edges, "
          f"witness {pair} codegree {value}, min codegree {min_codegree(sub)}")
