"""Type A tour: the bracket algebra on 3 and 4 indices, its multiplicative
Dunkl elements, and Grothendieck polynomials recovered from the Bruhat action.

Run with ``python3 demos/type_a_tour.py``.
"""

from bracketalg.checks import bracket_algebra
from bracketalg.elements import elementary_symmetric, rsm_A
from bracketalg.grothendieck import GrothendieckSolver, perm_name, structure_constants, simple
from bracketalg.laurent import Laurent

# The algebra on three indices is finite: 12 dimensional, top degree 4.
a3 = bracket_algebra("A", 3, 40)
print("BE(A2) Hilbert series:", a3.dims(), "total", sum(a3.dims()))

# Normal forms follow the three-term relation.
print("x12.x23 =", a3.parse("x12.x23").to_text())

# Multiplicative Dunkl elements: products of h_ij = 1 + x_ij.
fam = rsm_A(a3, 3)
for j, theta in enumerate(fam.elements, 1):
    print(f"Theta_{j} =", theta.to_text())

# They commute, and their elementary symmetric functions are binomial numbers.
print("commutators vanish:", all(c.is_zero() for _, _, c in fam.commutators()))
for k in (1, 2, 3):
    print(f"e_{k}(Theta) =", elementary_symmetric(k, fam.elements).to_text())

# Four indices: 576 dimensional, the same relations hold.
a4 = bracket_algebra("A", 4, 40)
print("BE(A3) Hilbert series:", a4.dims(), "total", sum(a4.dims()))
fam4 = rsm_A(a4, 4)
power_sum = fam4.evaluate(Laurent.parse("X1^2 + X2^2 + X3^2 + X4^2", 4))
print("sum Theta_j^2 =", power_sum.to_text())

# The Bruhat action of the Dunkl elements on the group ring of S3 gives
# Grothendieck polynomials.
solver = GrothendieckSolver(3, ctx=a3)
for w, poly in solver.table().items():
    print(f"G_{perm_name(w):<7}", poly.to_text())

c = structure_constants(simple(3, 1), simple(3, 2), solver)
print("G_s1 G_s2 expands with coefficients", {perm_name(w): v for w, v in c["group_ring"].items()})
