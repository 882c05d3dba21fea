# %% [markdown]
# # When does the recursion change anything?
#
# If adjacent edge weights have coprime contents there are no relevant primes
# and the two invariants agree. Otherwise the report lists the index of the
# recursive module inside ordinary graph cohomology in each degree.

# %%
from gkmcohom import exactness_report, fixtures

for name in ["cp2-coprime", "square-2x-2y", "s6-pullback-p2q3", "s2xs2-2x-2y"]:
    rep = exactness_report(fixtures.load(name), 4)
    tree = ", ".join(f"{node.n}->{list(node.children)}" for node in rep.tree)
    print(f"{name:20s} exact={rep.exact!s:5s} tree=[{tree}] indices={rep.indices}")

# %% [markdown]
# Primes that divide an index must come from the divisor tree.

# %%
rep = exactness_report(fixtures.load("s6-pullback-p2q3"), 4)
print(rep.index_primes)

# %% [markdown]
# Weights of a single edge never trigger the recursion, whatever they are.

# %%
from gkmcohom import GkmGraph

g = GkmGraph.build(2, ["N", "S"], [("N", "S", [6, -4])])
print(exactness_report(g, 3).exact)
