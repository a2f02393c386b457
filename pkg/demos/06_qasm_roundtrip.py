# %% [markdown]
# # Programs as OpenQASM
#
# Every program has a description number: its placement indices read as a
# big-endian number in base B. The number, the placement list and the
# QASM text all describe the same program.

# %%
from circscape.gatespace import Topology, builtin_gate_set, enumerate_placements, program_from_id
from circscape.qasm import QasmSyntaxError, emit_qasm, parse_qasm

gs = builtin_gate_set("xccx")
placements = enumerate_placements(gs, Topology.full(4))
prog = program_from_id(12345, 3, placements)
doc = emit_qasm(prog, gs, 4)
print(doc.text)
print("parsed back to id", parse_qasm(doc, gs).id)

# %% [markdown]
# The parser accepts only the gates of the chosen set and reports the line
# and column of anything it cannot decode.

# %%
try:
    parse_qasm(doc.text + "h q[0];\n", gs)
except QasmSyntaxError as err:
    print(err)
