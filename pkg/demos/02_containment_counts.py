#!/usr/bin/env python3
"""Counting the SYT with n cells that contain a fixed subtableau.

Fix an SYT T of shape alpha with k cells.  N(n; alpha) counts the SYT with
n cells whose first k entries form exactly T; the count depends only on the
shape alpha.  Three routes compute it here:

  * direct     -- sum the skew counts f(lam/alpha) over all lam with n cells,
  * expansion  -- a finite linear combination sum_j e_j(alpha) t_{n-j} of
                  shifted involution numbers t_m (t_m = total SYT with m
                  cells), with character coefficients e_j,
  * binomial   -- a binomial convolution against the skew counts inside alpha.

For every shape with at most 5 cells the expansion collapses to a closed
form; those are frozen in CLOSED_FORMS and reproduced below.
"""

from fractions import Fraction

from skewtab import (
    CLOSED_FORMS,
    N_binomial,
    N_closed_form,
    N_direct,
    N_expansion,
    containment_probability,
    involutions,
    t_shift_coeff,
)

print(__doc__)

alpha = (2, 1)
print(f"alpha = {alpha}")
print("n      direct  expansion  binomial")
for n in range(3, 13):
    values = (N_direct(n, alpha), N_expansion(n, alpha), N_binomial(n, alpha))
    assert len(set(values)) == 1
    print(f"{n:<5d}{values[0]:9d}{values[1]:11d}{values[2]:10d}")
print()

# The expansion coefficients: e_0 = f^alpha / k!, e_1 = e_2 = 0 always, and
# the first interesting coefficient sits at the t_{n-3} shift.
for shape in [(1,), (2,), (2, 1), (3,), (2, 2)]:
    coeffs = [t_shift_coeff(j, shape) for j in range(sum(shape) + 1)]
    print(f"e_j{shape}: {coeffs}")
print()

# Closed forms for all shapes with up to 5 cells, evaluated at n = 12 and
# checked against the expansion.
print("closed forms at n = 12:")
for shape, (den, numerators) in sorted(CLOSED_FORMS.items()):
    terms = " + ".join(f"{num}*t[n-{j}]" if j else f"{num}*t[n]"
                       for j, num in sorted(numerators.items()))
    value = N_closed_form(12, shape)
    assert value == N_expansion(12, shape)
    print(f"  N(n; {str(shape):15s}) = ({terms}) / {den:<4d} -> {value}")
print()

# Containment probabilities: the chance that a uniform n-cell SYT contains
# the fixed subtableau.  For a single cell this is 1; for a domino it is
# exactly 1/2 at every n >= 2.
for shape in [(1,), (2,), (2, 1)]:
    probs = [containment_probability(n, shape) for n in (4, 8, 16, 32)]
    print(f"P(n; {shape}) at n = 4, 8, 16, 32: {[str(Fraction(p)) for p in probs]}")

print()
print(f"sanity: N(n; (1,)) recovers the involution numbers, e.g. t_16 = "
      f"{involutions(16)} = {N_expansion(16, (1,))}")
