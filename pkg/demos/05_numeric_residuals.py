r"""
Numeric residuals
-----------------
Evaluating the truncated pencils at a small parameter value gives a line
whose distance from X_t shrinks like |t|^(N+1).
"""
import numpy as np

from fermat27.formula import all_labels, line_pencil
from fermat27.numeric import evaluate_pencil, scaling_check, surface_residual

k = all_labels()[13]
for N in (0, 2, 4, 6):
    nl = evaluate_pencil(line_pencil(k, N, frozenset([5])), {5: 0.02})
    print(f"N={N}: max |F_t| on the line = {surface_residual(nl):.3e}")

#%%
for N in (0, 2, 4):
    r = scaling_check(k, 10, 0.02, N)
    print(f"N={N}: residual ratio {r.ratio:.5f}, expected {2.0 ** -(N + 1):.5f}")

#%%
nl = evaluate_pencil(line_pencil(k, 4, frozenset([10])), {10: 0.01})
print(np.round(nl.L1, 6))
print(np.round(nl.L2, 6))
