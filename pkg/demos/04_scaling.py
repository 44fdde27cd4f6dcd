# %% [markdown]
# # Scaling on sparse random graphs
#
# With n = m the graphs have almost no 4-cycles, so running time is pure
# overhead: near-linear for the m^(4/3) lister, quadratic for the dense table.

# %%
from fourcycles.bench import run_bench, slopes

fast = run_bench("erdos_renyi", [2**k for k in range(12, 17)], ["m43"], repeats=2)
dense = run_bench("erdos_renyi", [2**k for k in range(10, 14)], ["n2"], repeats=2)

for r in fast + dense:
    if r.repeat == 0:
        print(f"{r.algo:>4} n={r.n:>6} m={r.m:>6} t={r.t}  {r.wall_time * 1e3:8.1f} ms")

print("m43 slope vs m:", round(slopes(fast, "m")["m43"], 2))
print("n2 slope vs n: ", round(slopes(dense, "n")["n2"], 2))
