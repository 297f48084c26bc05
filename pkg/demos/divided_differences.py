"""Braided derivations acting on multiplicative Dunkl elements behave like
isobaric divided differences acting on Laurent polynomials.

Run with ``python3 demos/divided_differences.py``.
"""

from bracketalg.checks import bracket_algebra
from bracketalg.elements import rsm_B
from bracketalg.laurent import Laurent, tau
from bracketalg.operators import intertwining_check, q_operators, sample_monomials, tau_relations_check
from bracketalg.roots import RootSystem

system = RootSystem("B", 2)
ctx = bracket_algebra("B", 2, 40)
fam = rsm_B(ctx, 2)
ops = q_operators(ctx, system)

# Q_i(Theta_j) is tau_i(X_j) evaluated at Theta.
for op in ops:
    for j in (1, 2):
        image = tau(system, op.i, Laurent.var(2, j))
        same = op(fam[j - 1]) == fam.evaluate(image)
        print(f"Q_{op.i}(Theta_{j}) = ({image.to_text()})(Theta): {same}")

# The same holds for arbitrary Laurent monomials.
sample = sample_monomials(2, 20, seed=0, max_degree=3)
rows = intertwining_check(system, fam, ops, sample)
print(f"intertwining on {len(sample)} monomials: {sum(r['ok'] for r in rows)}/{len(rows)} agree")

# The tau operators square to minus themselves and satisfy the braid relations.
for row in tau_relations_check(system, max_degree=3, square_sign=-1):
    print(row["relation"], "holds" if row["ok"] else "fails")
