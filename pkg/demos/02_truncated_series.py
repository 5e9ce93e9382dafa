r"""
Truncated power series in the twenty parameters
-----------------------------------------------
The parameters t_alpha are the coefficients of the cubic monomials x^alpha,
numbered 0..19 in descending lexicographic order of alpha.
"""
from fermat27.series import DEFORMATION_INDEX, Series

for p, alpha in enumerate(DEFORMATION_INDEX):
    print(p, alpha)

#%%
# Everything above the truncation order is dropped eagerly
N = 3
t1 = Series.variable(1, N)
s = Series.one(N) - t1
print("1 / (1 - t1) =", s.inverse_unit())
print("(1 + t1)^5  =", (Series.one(N) + t1) ** 5)

#%%
# JSON form used by the command-line tool
print(((Series.one(N) + t1) ** 2).to_json())
