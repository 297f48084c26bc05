"""Bracket algebras against Nichols algebras.

The Nichols algebra of the Yetter-Drinfeld module spanned by the roots is
computed two ways: from the braided symmetrizer and from the joint kernel of
the braided derivations.  For B2 both give 64; for B3 the bracket algebra is
larger from degree 6 on.

Run with ``python3 demos/nichols_comparison.py`` (about a minute).
"""

import time

from bracketalg.checks import bracket_algebra, nichols_algebra
from bracketalg.nichols import YDModule, braiding_checks, symmetrizer_dims
from bracketalg.roots import RootSystem

b2 = RootSystem("B", 2)
print("B2 braiding checks (failures):", braiding_checks(YDModule(b2)))

start = time.perf_counter()
naive = symmetrizer_dims(b2, 5, "naive")
print(f"naive symmetrizer ranks through degree 5: {naive} ({time.perf_counter() - start:.1f}s)")
start = time.perf_counter()
fast = symmetrizer_dims(b2, 9, "factorized")
print(f"factorized symmetrizer ranks: {fast} total {sum(fast)} ({time.perf_counter() - start:.1f}s)")

n_b2 = nichols_algebra("B", 2, 40)
print("Nichols B2 via derivations:", n_b2.dims(), "complete:", n_b2.complete)
print("bracket algebra BE(B2):    ", bracket_algebra("B", 2, 40).dims())

be_b3 = bracket_algebra("B", 3, 6)
n_b3 = nichols_algebra("B", 3, 6)
print("BE(B3) through degree 6:", be_b3.dims())
print("B(B3)  through degree 6:", n_b3.dims())
print("difference:", [a - b for a, b in zip(be_b3.dims(), n_b3.dims())])
