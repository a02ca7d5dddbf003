"""
Arithmetic in GF(9)
===================

Elements are canonical integers: the base-3 digits of v are the
coefficients of 1, z, z^2, ... of a polynomial reduced modulo
z^2 + z + 2.
"""

import numpy as np

from tgrs import GF

F9 = GF(3, 2, [2, 1, 1])
print(F9)

# z is the integer 3 (digits 0, 1); z^2 reduces to 2z + 1
z = F9(3)
print("z^2 =", (z * z).pretty(), "=", (z * z).value)

# every nonzero element has an inverse
for v in range(1, 9):
    a = F9(v)
    print(f"{a.pretty():>7}  inverse {a.inverse().pretty():>7}")

# the same operations on whole arrays
xs = np.arange(9)
print(F9.mul(xs[:, None], xs[None, :]))
