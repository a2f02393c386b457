# %% [markdown]
# # Interference breaks the matrix power
#
# For {H, T, CX} an entry of R_L is the summed probability, over all
# programs, of measuring j after starting from i. Because amplitudes add
# before they are squared, R_2 is not R_1 squared.

# %%
from circscape.gatespace import Topology, builtin_gate_set
from circscape.metrics import row_entropy
from circscape.reach import matrix_power_reach, reachability_dp, transition_matrix

gs, topo = builtin_gate_set("htcx"), Topology.full(4)
r2 = reachability_dp(gs, topo, 2)
sq = matrix_power_reach(transition_matrix(gs, topo), 2)
print("enumerated R_2[0][0] =", round(r2.entries[0, 0], 9))
print("R_1 squared [0][0]   =", round(sq.entries[0, 0], 9))

# %% [markdown]
# Two H on the same qubit cancel and return |0000> with certainty. The
# squared matrix treats the two steps as independent coin flips and credits
# that pair with only 1/2. Four qubits, 1/2 each, account for the gap of 2.
#
# The DP groups identical statevectors, so its work grows with the number
# of distinct states rather than with B**L.

# %%
print("distinct states from |0000> at depth 2:", r2.stats["distinct_states"][0])
print("entropy of row 0 (bits):", round(row_entropy(r2, 0), 4))
