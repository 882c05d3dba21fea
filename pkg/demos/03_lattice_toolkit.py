# %% [markdown]
# # Integer lattice toolkit
#
# Everything above runs on a small exact linear algebra layer over Z.
# Lattices are stored by their canonical row Hermite normal form, so equality
# of lattices is equality of bases.

# %%
from gkmcohom.intlinalg import Lattice, hnf, intersect, kernel, preimage, quotient_with_lifts, snf

print(hnf([[4, 6], [2, 2]]))
print(snf([[2, 4], [4, 8], [0, 6]])[0])

# %% [markdown]
# Intersections and kernels. 12Z meets 32Z in 96Z, which is exactly the
# intersection that produces the top coefficient in the first demo.

# %%
print(intersect(Lattice.from_generators([[12]]), Lattice.from_generators([[32]])).basis)
print(kernel([[2, 4, 6], [1, 3, 5]]).basis)

# %% [markdown]
# Preimage of a sublattice under an integer map, then the quotient of two
# nested lattices with lifts of its generators.

# %%
pre = preimage([[1, -1]], Lattice.from_generators([[6]]))
print(pre.basis)
lifts, factors = quotient_with_lifts(Lattice.from_generators([[4, 0], [0, 6]]), Lattice.full(2))
print(lifts, factors)
