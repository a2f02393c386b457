# %% [markdown]
# # Reachability with classical gates
#
# R_L[i][j] counts the depth-L programs that send basis state i to basis
# state j. With only X and CCX every program is a permutation of basis
# states, so the counts are exact integers, and depth L is just the L-th
# power of the one-step matrix.

# %%
import numpy as np

from circscape.gatespace import Topology, builtin_gate_set
from circscape.reach import matrix_power_reach, reachability_bruteforce, transition_matrix

gs, topo = builtin_gate_set("xccx"), Topology.full(4)
r1 = transition_matrix(gs, topo)
print(r1.entries[:4, :8])

# %%
for depth in (2, 3):
    enumerated = reachability_bruteforce(gs, topo, depth).entries
    powered = matrix_power_reach(r1, depth).entries
    print(depth, "equal:", np.array_equal(enumerated, powered), "origin:", enumerated[0, 0])

# %% [markdown]
# Powers past int64 range switch to Python integers automatically.

# %%
big = matrix_power_reach(r1, 20)
print(big.entries.dtype, big.entries[0, 0])
print("row sum is 28**20:", sum(big.entries[0]) == 28**20)
