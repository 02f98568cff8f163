"""Character-level invariants: shifts, composition multiplicities, Ext groups.

All three reduce to exact symmetric function computations: shifts are
skew expansions, multiplicities pair a Schur function against the
graded character of a free symmetric algebra, Ext dimensions pair
against its Koszul exterior powers.
"""

from sigmabrauer import (
    Partition,
    ext_dim,
    format_partition,
    multiplicity,
    parse_partition,
    parse_tuple,
    partitions,
    shift_decompose,
)

print("== shifting a Schur functor down one rank ==")
for text in ["2", "1,1", "2,1"]:
    lam = parse_partition(text)
    dec = shift_decompose(lam, 1)
    pretty = ", ".join(
        f"{format_partition(nu)}:{m}" for nu, m in sorted(dec.items())
    )
    print(f"  shift_1({text}) = {{{pretty}}}")

sig2 = parse_tuple("2")
print("\n== composition multiplicities for the symmetric pair type ==")
for lam_text, mu_text in [("2", "0"), ("2,2", "2"), ("2,2", "0"), ("3,1", "1,1")]:
    m = multiplicity(sig2, parse_partition(lam_text), parse_partition(mu_text))
    print(f"  [injective {lam_text} : simple {mu_text}] = {m}")

print("\n== Ext groups out of the unit simple ==")
for i in range(4):
    support = []
    for size in range(0, 2 * i + 1):
        for mu in partitions(size):
            d = ext_dim(sig2, i, Partition(()), mu)
            if d:
                support.append(f"{format_partition(mu)}:{d}")
    print(f"  Ext^{i}(unit, -) supported on {{{', '.join(support)}}}")
