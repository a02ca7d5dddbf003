"""
MDS or NMDS?
============

A one-twist code has minimum distance n-k+1 (MDS) or n-k (NMDS).  The
classifier finds a k-subset of evaluation points on which some codeword
vanishes, if one exists, and we confirm it by encoding that codeword.
"""

from pathlib import Path

import numpy as np

from tgrs import GF, TGRSCode, classify
from tgrs.code import witness_message

specs = Path(__file__).resolve().parent.parent / "specs"

for name in ("f9_n5_k2", "f16_n8_k2", "f7_n7_k2"):
    code = TGRSCode.load(specs / f"{name}.json")
    cls = classify(code)
    print(name, cls.kind.value, cls.witness)
    word = code.encode(witness_message(code, cls.witness))
    print("  low-weight codeword:", [c.value for c in word])

# points in the subfield GF(16) of GF(256) with eta outside it always give MDS
F256 = GF(2, 8)
xs = np.arange(256)
sub = xs[F256.power(xs, 16) == xs]
code = TGRSCode(F256, 12, 4, 3, 2, sub[:12])
print("subfield code:", classify(code).kind.value)
