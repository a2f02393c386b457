# %% [markdown]
# # How many programs are there?
#
# A program of depth L is a sequence of L placements, where a placement is
# one gate on an ordered tuple of distinct qubits. The number of programs is
# B**L, with B the number of placements. B depends only on the arities of
# the gates and on the qubit count.

# %%
from circscape.gatespace import (
    Topology,
    builtin_gate_set,
    builtin_topology,
    count_programs,
    enumerate_placements,
    growth_table,
)

xccx = builtin_gate_set("xccx")
placements = enumerate_placements(xccx, Topology.full(4))
print(len(placements), "placements, first few:", placements[:6])
print("depth-3 programs:", count_programs(xccx, Topology.full(4), 3))

# %% [markdown]
# The growth is exponential in depth and polynomial in width. Counts are
# Python integers, so they never overflow.

# %%
for row in growth_table([1, 3], 8, 6, min_qubits=2):
    if row.depth in (1, 6):
        print(f"n={row.num_qubits} L={row.depth}: {row.count}")

# %% [markdown]
# A coupling map removes placements: a two-qubit gate needs an edge, a
# three-qubit gate needs a connected triple.

# %%
ibm = builtin_gate_set("ibm-native")
for name in ("full", "ibm-t", "ibm-l"):
    topo = builtin_topology(name, 5)
    print(f"{name:6s} {len(enumerate_placements(ibm, topo))} placements")
