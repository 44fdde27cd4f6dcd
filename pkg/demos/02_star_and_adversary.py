# %% [markdown]
# # Why orient the edges
#
# A star has quadratically many 2-paths and no 4-cycle. The fast lister never
# looks at them: leaves are low-degree, so no low-centered or all-high path
# exists.

# %%
from fourcycles import (
    ListingStats,
    degree_partition,
    gen_lhh_adversary,
    gen_star,
    list_m43,
    two_path_census,
)

star = gen_star(20_000)
census = two_path_census(star, degree_partition(star))
stats = ListingStats()
list_m43(star, None, stats)
print(f"star: {census.total:,} 2-paths in total, {stats.useful_2paths} examined")

# %% [markdown]
# The harder instance: a hub with n leaves and h mid nodes, each mid node with
# l private leaves. There are about n*h low-high-high 2-paths through the hub,
# yet only h*l of them follow the degree orientation leaf -> mid -> hub.

# %%
for n in (1_000, 10_000, 100_000):
    g = gen_lhh_adversary(n, "1/10")
    c = two_path_census(g, degree_partition(g))
    print(
        f"n={n:>7,}  m={g.m:>7,}  unoriented LHH={c.unoriented_lhh:>12,}  "
        f"oriented P={c.oriented_lhh:>7,}  ratio={c.unoriented_lhh / c.oriented_lhh:6.0f}x"
    )
    assert list_m43(g) == 0
