"""Shared test utilities: seeded pencil mutations."""

from fermat27.ring import Eisenstein
from fermat27.series import Series, multi_indices


def mutate(pencil, rng):
    """Add 1 to one randomly chosen series coefficient of one linear form."""
    which = rng.randrange(2)
    q = rng.randrange(4)
    a = rng.choice(list(multi_indices(sorted(pencil.active), pencil.order)))
    forms = [list(pencil.L1), list(pencil.L2)]
    forms[which][q] = forms[which][q] + Series(pencil.order, {a: Eisenstein(1)})
    return pencil.replace(L1=forms[0], L2=forms[1]), (which, q, a)

