# %% [markdown]
# # Counting diagnostics
#
# Closed 4-walks, the average-degree floor, the L->H->H implication and the
# regular A/B view, on a random graph.

# %%
import json

from fourcycles import (
    census_report,
    degree_partition,
    find_regular_partition,
    gen_erdos_renyi,
)

g = gen_erdos_renyi(300, 3000, seed=7)
report = census_report(g)
print(json.dumps(report.to_dict(), indent=2, sort_keys=True))

# %% Every closed 4-walk is a back-and-forth edge, a cherry, or one of 8 traversals of a 4-cycle.
rest = report.closed_4_walks - 2 * g.m - 2 * sum(d * (d - 1) for d in map(len, g.adj))
assert rest == 8 * report.t

# %% tr(A^4) is at least the fourth power of the average degree.
print(report.closed_4_walks, ">=", float(report.avg_degree) ** 4)

# %% A seeded search for the regular view of the high vertices.
p = degree_partition(g)
part = find_regular_partition(g, p, retries=32, rng_seed=1)
print(f"P={part.P}  |A|={len(part.a_side)}  |B|={len(part.b_side)}  bucket={part.bucket}")
print(f"d_L={part.d_l}  d_B={part.d_b}  achieved={part.achieved_paths}  target={part.target:.1f}")
assert not part.structural_violations(g, p)
