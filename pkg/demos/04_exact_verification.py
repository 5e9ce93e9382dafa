r"""
Exact verification
------------------
Eliminating two coordinates with the pencil and substituting into F_t must
give the zero series, for every label and truncation order.
"""
import time

from fermat27.formula import ALL_PARAMETERS, all_labels, line_pencil
from fermat27.verify import check_fermat_limit, check_on_surface, check_pencil_on_surface, check_rank_two

print("Fermat limit:", check_fermat_limit().passed)

#%%
start = time.perf_counter()
ok = all(check_on_surface(k, 2, ALL_PARAMETERS).passed for k in all_labels())
print(f"27 lines on X_t to order 2 in all 20 parameters: {ok} ({time.perf_counter() - start:.1f} s)")
print("rank two for label 0:", check_rank_two(all_labels()[0], 2).passed)

#%%
# A corrupted coefficient is caught, with the offending terms reported
k = all_labels()[0]
pencil = line_pencil(k, 1, frozenset([5]))
bad = pencil.replace(L1=(-pencil.L1[0],) + pencil.L1[1:])
report = check_pencil_on_surface(bad)
print("corrupted pencil passes:", report.passed)
for term in report.offending[:4]:
    print("  ", term)
