# The two real branches of the Lambert W function.
#
# W solves w e^w = x. For -1/e <= x < 0 there are two real solutions: the
# principal branch W_0 (w >= -1) and the lower branch W_{-1} (w <= -1).
import math

import numpy as np

from rawmoments import WBranch, lambert_w

for x in [-1 / math.e, -0.3, -0.1, -1e-6]:
    w0 = lambert_w(x)
    wm1 = lambert_w(x, WBranch.MINUS_ONE)
    print(f"x={x: .6f}  W0={w0: .12f}  W-1={wm1: .12f}")

for x in [0.0, 1 / math.e, 1.0, math.e, 1e6, 1e300]:
    print(f"W0({x:g}) = {lambert_w(x):.15g}")

# -x e^-x is hit twice; one branch returns -x and the other the partner root.
x = 2.5
y = -x * math.exp(-x)
print("W_-1(-x e^-x) =", lambert_w(y, -1), "  W_0(-x e^-x) =", lambert_w(y, 0))

# Arrays are handled in one call.
grid = np.linspace(-0.36, 5.0, 7)
print(lambert_w(grid))
