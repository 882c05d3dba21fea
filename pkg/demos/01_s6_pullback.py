# %% [markdown]
# # Two fixed points, three edges
#
# The graph below has vertices N and S joined by three edges with weights
# p^2 x1, p^2 x2 and pq x3. Plain graph cohomology only sees the lcm of the
# edge labels. The recursive invariant also looks at the subgraphs where
# weights are divisible by p and p^2, and it comes out smaller.

# %%
from gkmcohom import fixtures, graph_cohomology, run_pipeline
from gkmcohom.polyring import format_poly

g = fixtures.load("s6-pullback-p2q3")
for e in g.edges:
    print(g.vertices[e.a], g.vertices[e.b], e.weight)

# %% [markdown]
# Ordinary graph cohomology over Z[x1, x2, x3]. Slices are computed up to
# polynomial degree 4 (cohomological degree 8).

# %%
h = graph_cohomology(g, 1, 4)
for gen in h.generators:
    print(2 * gen.degree, [format_poly(p) for p in gen.values])

# %% [markdown]
# The recursion visits n = 1, 2, 4. At n = 4 every edge except the x3 one
# survives and the top generator drops to degree 2.

# %%
res = run_pipeline(g, 4)
for n, node in res.nodes.items():
    top = node.hhat.generators[-1]
    print(f"n={n} primes={node.relevant_primes} top generator in degree {2 * top.degree}:",
          [format_poly(p) for p in top.values])

# %% [markdown]
# The coefficient at the root is p^5 q. Varying p and q confirms the pattern.

# %%
for p, q in [(2, 3), (2, 5), (3, 2)]:
    m = run_pipeline(fixtures.load(f"s6-pullback-p{p}q{q}"), 4).root.hhat
    coeff = m.generators[-1].values[1][(1, 1, 1)]
    print(p, q, coeff, p**5 * q)
