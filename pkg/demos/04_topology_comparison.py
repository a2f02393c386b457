# %% [markdown]
# # Does the coupling map matter?
#
# Circuit probability M sums, over depths 1..L, 2**-i times the fraction of
# depth-i programs mapping i to j. Its complexity is K = -log2 M. Here we
# compare a T-shaped and a line-shaped 5-qubit device using phase,
# RX(pi/2) and CX.

# %%
import numpy as np

from circscape.gatespace import builtin_gate_set, builtin_topology
from circscape.metrics import compare_topologies, k_circ, m_circ
from circscape.reach import reachability_dp_series

gs = builtin_gate_set("ibm-native")
ms = {}
for name in ("ibm-l", "ibm-t"):
    series = reachability_dp_series(gs, builtin_topology(name, 5), 3)
    ms[name] = m_circ(series[1:])
cmp = compare_topologies(ms["ibm-l"], ms["ibm-t"])
print(cmp.summary())

# %% [markdown]
# Neither map dominates: some transformations are more likely on the line,
# others on the T.

# %%
i, j = np.unravel_index(np.argmax(cmp.diff), cmp.diff.shape)
print(f"line favours {i:05b} -> {j:05b} by {cmp.diff[i, j]:.3e}")
i, j = np.unravel_index(np.argmin(cmp.diff), cmp.diff.shape)
print(f"T favours    {i:05b} -> {j:05b} by {-cmp.diff[i, j]:.3e}")
print("K(0 -> 0) on the line:", round(k_circ(ms["ibm-l"]).entries[0, 0], 4), "bits")
