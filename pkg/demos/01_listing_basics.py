# %% [markdown]
# # Listing 4-cycles
#
# Build a graph from an edge list, list its 4-cycles with both listers and
# check the counting backends agree.

# %%
from fourcycles import build_graph, count, gen_grid, list_m43, list_n2

square_with_chord = build_graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print(square_with_chord)

# %% Each cycle comes out once, as (a, b, c, d) with a the smallest vertex and b < d.
cycles = []
list_m43(square_with_chord, cycles.append)
print(cycles)

# %% The dense-table lister finds the same set.
other = []
list_n2(square_with_chord, other.append)
assert set(other) == set(cycles)

# %% A 4x5 grid has exactly one 4-cycle per unit square.
grid = gen_grid(4, 5)
for algo in ("n2", "m43", "codegree", "trace", "brute"):
    print(f"{algo:>9}: {count(grid, algo)}")
