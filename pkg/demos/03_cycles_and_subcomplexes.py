"""From a satisfied identity to a two-cycle and a subcomplex.

Every satisfied inner identity x*w = x attaches to each assignment the
degree-2 chain of its prefix products; its boundary telescopes to
(x) - (x*w), hence vanishes.  Shifting the same pattern through longer
tuples generates a subcomplex: boundaries of generators stay inside the
integer span one degree down.
"""

from quandlehom import (Assignment, boundary, format_chain, identity_cycle,
                        in_span, medial_cycle, parse_word,
                        subcomplex_generators)
from quandlehom.constructions import alexander_zn, dihedral

dih3 = dihedral(3)
aa = parse_word("aa")

# ---------------------------------------------------------------------------
L = identity_cycle(dih3, aa, Assignment(x=0, ys=(1,)))
print("cycle for x*1*1 = x at x=0:", format_chain(L))
print("its boundary:", format_chain(boundary(dih3, L)))

# an unsatisfied identity still telescopes (permissive mode)
abab = parse_word("abab")
L = identity_cycle(dih3, abab, Assignment(0, (0, 1)), permissive=True)
print("permissive boundary of an unsatisfied word:",
      format_chain(boundary(dih3, L)), " (that is (x) - (x*w))")

# medial tables have their own 4-term two-cycles
print("medial 4-term cycle boundary:",
      format_chain(boundary(dih3, medial_cycle(dih3, 0, 1, 2, 0))))

# ---------------------------------------------------------------------------
# subcomplex generators: the identity pattern shifted through tuple slots
for degree in (2, 3, 4):
    gens = subcomplex_generators(dih3, "identity", degree, word=aa)
    closed = all(
        boundary(dih3, ch).is_zero() if degree == 2 else
        in_span(boundary(dih3, ch),
                subcomplex_generators(dih3, "identity", degree - 1, word=aa))
        for ch in gens.chains)
    print(f"degree {degree}: {len(gens)} generators, span rank "
          f"{gens.lattice.rank}, boundaries stay in the span: {closed}")

gens3 = subcomplex_generators(dih3, "identity", 3, word=aa)
print("\nfirst degree-3 generator:", format_chain(gens3.chains[0]))

# a bare basis tuple is generally not in the span
from quandlehom import FormalChain
gens2 = subcomplex_generators(dih3, "identity", 2, word=aa)
print("(1,2) in degree-2 span:",
      in_span(FormalChain.of((0, 1)), gens2))

# degeneracy subcomplex: tuples with equal adjacent entries
az52 = alexander_zn(5, 2)
gd3 = subcomplex_generators(az52, "degenerate", 3)
gd2 = subcomplex_generators(az52, "degenerate", 2)
ok = all(in_span(boundary(az52, ch), gd2) for ch in gd3.chains)
print(f"degenerate tuples of A(5,2): degree 3 has {len(gd3)}, closure: {ok}")
