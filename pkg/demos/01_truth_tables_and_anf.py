"""Truth tables, algebraic normal forms and the basic metrics.

Walks through the two representations of a Boolean function and the
distance-based measures built on them.
"""

import numpy as np

import rm2cover as rm

# Build a function from its polynomial form.  Variable x1 is the least
# significant coordinate of the table index.
p = rm.AnfPolynomial.from_string("x1x2x3+x1x4x5+x2x4x6+x3x5x6+x4x5x6")
f = rm.truth_table_from_anf(p)
print("ANF:         ", p.to_string())
print("degree:      ", p.degree)
print("hex table:   ", f.to_hex())
print("weight:      ", rm.weight(f))

# The transform between representations is an involution.
assert rm.anf_from_truth_table(f) == p

# The same function ships in the catalog as fun_1.
assert f == rm.catalog_function("fun_1")

# Nonlinearity: distance to the nearest affine function, read off the
# Walsh spectrum.
spectrum = rm.walsh_spectrum(f)
print("max |W|:     ", spectrum.max_abs())
print("nl:          ", rm.nonlinearity(f))

# Parseval ties the spectrum to the table size.
assert int((spectrum.values.astype(np.int64) ** 2).sum()) == 2 ** (2 * f.n)

# A bent function meets the nl upper bound 2^(n-1) - 2^(n/2-1) = 28 and
# has a perfectly flat spectrum.
bent = rm.catalog_function("bent_example")
print("bent |W| set:", sorted(set(np.abs(rm.walsh_spectrum(bent).values).tolist())))
print("bent nl:     ", rm.nonlinearity(bent))

# Concatenation stacks two n-variable halves into an (n+1)-variable
# function; split undoes it.
top = rm.concatenate(rm.TruthTable.zeros(1), rm.TruthTable.ones(1))
print("0 || 1 ==", rm.anf_from_truth_table(top).to_string(), "(the new top variable)")
g = rm.concatenate(f, f)
assert rm.split(g) == (f, f)
print("fun_1 || fun_1 has degree", rm.degree(g), "and ignores x7")
