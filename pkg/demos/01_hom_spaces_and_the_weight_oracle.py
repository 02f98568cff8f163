"""Hom spaces of the downwards category, checked against the weight-space basis.

The category depends on a pure tuple of partitions.  For the single
partition (2) a basis diagram from [n] to [0] is a perfect matching, so
the Hom dimensions are the double factorials 1, 3, 15, 105, ...  For a
tuple of r copies of (1) the diagrams are injections with an r-coloring
of the leftover points.  Independently of the diagram count, the same
numbers arise as monomial bases of weight spaces; the script sweeps
both enumerations side by side.
"""

from sigmabrauer import hom_dim, parse_tuple, weight_space_basis

print("== perfect matchings: sigma = [(2)] ==")
sig2 = parse_tuple("2")
for k in range(1, 5):
    print(f"  Hom([{2*k}], [0]) has dimension {hom_dim(sig2, 2*k, 0)}")

print("\n== injections with two colors: sigma = [(1),(1)] ==")
sig11 = parse_tuple("1|1")
for n in range(4):
    row = [hom_dim(sig11, n, m) for m in range(n + 1)]
    print(f"  n={n}: {row}")

print("\n== the weight-space oracle agrees across a family of tuples ==")
for text in ["2", "1,1", "1", "1|1", "3", "2|1"]:
    sigma = parse_tuple(text)
    worst = 0
    for n in range(6):
        for m in range(n + 1):
            h = hom_dim(sigma, n, m)
            w = len(weight_space_basis(sigma, n, m))
            assert h == w, (text, n, m)
            worst = max(worst, h)
    print(f"  sigma = {text:5s}: all (n, m) up to n=5 agree; largest space {worst}")
