"""
Decoding by Gaussian elimination
================================

We look for N(x) and D(x) with N(alpha_j) = D(alpha_j) y_j for every j.
Any nonzero kernel vector of that linear system gives N / D = f when the
number of errors is within the radius.
"""

from pathlib import Path

from tgrs import TGRSCode, build_system, decode, params_for
from tgrs.linalg import null_space

specs = Path(__file__).resolve().parent.parent / "specs"
code = TGRSCode.load(specs / "f9_n5_k2.json")

sent = code.encode([1, 4])
print("sent     ", [c.value for c in sent])
received = [1, 3, 7, 7, 8]
print("received ", received)

params = params_for(code)
print(params)
system = build_system(code, received, params)
print(system.data)
print("kernel:", [[v.value for v in vec] for vec in null_space(system)])

out = decode(code, received)
print("codeword ", [c.value for c in out.codeword])
print("message  ", [c.value for c in out.message])
print("errors at", out.error_positions)
