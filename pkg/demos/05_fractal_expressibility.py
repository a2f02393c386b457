# %% [markdown]
# # Self-similar expressibility
#
# E[i][j] is 1 when some program of depth at most L sends i to j. Split the
# rows and columns on the highest qubit. For {X, CCX}, the diagonal blocks
# repeat the (n-1)-qubit table at the same depth. The off-diagonal blocks
# repeat it one step shallower, since flipping the top qubit costs one X.

# %%
from circscape.gatespace import builtin_gate_set
from circscape.reach import expressibility_table, fractal_check

table = expressibility_table(builtin_gate_set("xccx"), [2, 3, 4], 3)
report = fractal_check(table, [(n, i) for n in (3, 4) for i in (1, 2, 3)])
print(report.summary())

# %%
for row in table[(3, 2)].entries:
    print("".join("#" if v else "." for v in row))
