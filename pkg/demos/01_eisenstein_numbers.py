r"""
Arithmetic in Q(w)
------------------
Every coefficient in this package lives in Q(w), w = exp(i*pi/3), stored as
a + b*w with exact rationals and the rule w**2 = w - 1.
"""
from fractions import Fraction

from fermat27.ring import OMEGA, Eisenstein, RootOfMinusOne, embed_complex, omega_power

#%%
# The six powers of w in the (a, b) basis
for e in range(6):
    print(f"w^{e} =", omega_power(e))

#%%
# Cube roots of -1 are w, w^3 = -1 and w^5
for e in (1, 3, 5):
    z = RootOfMinusOne(e)
    print(z, "cubed:", z.value ** 3)

#%%
# Division is exact; the norm a^2 + ab + b^2 is multiplicative
x = Eisenstein(Fraction(-2, 3), Fraction(1, 3))
y = Eisenstein(5, -7)
print("x / y =", x / y)
print("N(xy) =", (x * y).norm(), " N(x)N(y) =", x.norm() * y.norm())

#%%
# Complex values use the fixed embedding w -> exp(i*pi/3)
print(embed_complex(OMEGA), embed_complex(x * y))
