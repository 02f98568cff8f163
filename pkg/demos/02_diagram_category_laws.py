"""Composing decorated diagrams: identity, associativity, the signed variant.

Morphisms are rational combinations of diagrams whose blocks carry
Specht module elements.  The composition rule transports the blocks of
the second diagram backwards along the matching of the first; for the
one-dimensional types the only trace this leaves is a sign, which the
symmetric ((2)) and antisymmetric ((1,1)) variants make visible.
"""

import json
import random

from sigmabrauer import (
    Morphism,
    make_diagram,
    morphism_to_json,
    parse_tuple,
    random_morphism,
    upwards_view,
)

sig2 = parse_tuple("2")
sig11 = parse_tuple("1,1")

cross = make_diagram(sig2, 2, 2, (), ((1, 2), (2, 1)))
pair = make_diagram(sig2, 2, 0, (((1, 2), 0, 0),), ())
crossing = Morphism.from_diagram(sig2, cross)
cap = Morphism.from_diagram(sig2, pair)

print("== symmetric pair after a crossing: nothing happens ==")
print("  cap o crossing == cap:", cap.compose(crossing) == cap)

cross_s = Morphism.from_diagram(sig11, make_diagram(sig11, 2, 2, (), ((1, 2), (2, 1))))
cap_s = Morphism.from_diagram(sig11, make_diagram(sig11, 2, 0, (((1, 2), 0, 0),), ()))
print("\n== antisymmetric pair after a crossing: a sign ==")
print("  cap o crossing == -cap:", cap_s.compose(cross_s) == cap_s.scale(-1))

print("\n== random associativity and interchange checks ==")
rng = random.Random(0)
checked = 0
while checked < 25:
    n = rng.randint(0, 4)
    m = rng.randint(0, n)
    l = rng.randint(0, m)
    f = random_morphism(sig2, n, m, rng)
    g = random_morphism(sig2, m, l, rng)
    h = random_morphism(sig2, l, 0, rng)
    if f.is_zero() or g.is_zero() or h.is_zero():
        continue
    checked += 1
    assert h.compose(g.compose(f)) == (h.compose(g)).compose(f)
print(f"  {checked} random triples associate exactly")

print("\n== the upwards category is the formal opposite ==")
up = upwards_view(cap)
print("  source/target swap:", (up.source, up.target), "and twice is the identity:",
      upwards_view(up) == cap)

print("\n== serialized form of the cap (exact rationals as strings) ==")
print(" ", json.dumps(morphism_to_json(cap)))
