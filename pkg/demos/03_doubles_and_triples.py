"""The double of an algebra and its dual, three ways.

One structure, three independent characterizations: the cobracket
compatibility conditions, the matched-pair conditions, and the Manin-triple
clauses for the assembled double with the canonical pairing.  The toolkit
computes all three and insists they agree.
"""

from itertools import product

from omegalie import check_omega_lie, omega_lie
from omegalie.algebras import abelian
from omegalie.bialgebra import (
    check_manin_triple,
    check_matched_pair,
    check_mult_bialgebra,
    crosscheck_equivalence,
    double_bracket,
    dual_pair,
    embedded_halves,
    standard_form,
)

b2 = omega_lie(2, {(0, 1): [1, 0]}, r=[0, 0], label="b2")
dp = dual_pair(b2, abelian(2, label="ab*"))

double = double_bracket(dp)
print("double:", double.label, "dim", double.dim, "->", check_omega_lie(double).verdict)
print("matched pair:", check_matched_pair(dp).verdict)
print("bialgebra conditions:", check_mult_bialgebra(dp).verdict)
first, second = embedded_halves(2)
print("manin triple:", check_manin_triple(double, first, second, standard_form(2)).verdict)
print("three-way agreement:", crosscheck_equivalence(dp).verdict)

# Sweep a small family of dual brackets; the three verdicts agree on every
# instance, passing or failing.
agree = passing = total = 0
for a, b in product((-1, 0, 1), repeat=2):
    dual = omega_lie(2, {(0, 1): [a, b]}, r=[0, 1], label="L*")
    pair = dual_pair(b2, dual)
    outcome = crosscheck_equivalence(pair)
    total += 1
    agree += outcome.passed
    passing += outcome.meta["matched_pair_verdict"] == "PASS"
print(f"swept {total} duals: {agree} unanimous verdicts, {passing} matched pairs")
