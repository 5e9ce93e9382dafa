r"""
Period series and line pencils
------------------------------
For each of the 27 labels the 4x4 matrix of period series has rank two; two
of its 2x2 minors give the linear forms cutting out the deformed line.
"""
from fermat27.formula import all_labels, line_pencil, period_matrix

k = all_labels()[0]
print("label:", k)

#%%
# At t = 0 the matrix has the 2x2 block pattern of the Fermat lines
P = period_matrix(k, 0)
for row in P.constant_terms():
    print(["%s" % c for c in row])

#%%
# First-order pencil with only x0*x1*x2 deformed (parameter 5)
pencil = line_pencil(k, 1, frozenset([5]))
for name, form in (("L1", pencil.L1), ("L2", pencil.L2)):
    for q, s in enumerate(form):
        print(f"{name}[x{q}] = {s}")

#%%
# Normalizing by the unit minor c_0202
normalized = line_pencil(k, 2, frozenset([5]), normalize=True)
print("L2[x3] after normalization:", normalized.L2[3])
