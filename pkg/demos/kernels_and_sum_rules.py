"""Exact su(2) and su_q(2) recoupling: values, a sum-rule check and an oracle comparison.

Run with:  python demos/kernels_and_sum_rules.py
"""

from fractions import Fraction

from supersum.exact import Spin
from supersum.oracles import sixj_by_contraction
from supersum.su2 import check_sum_rule_su2, nabla, sixj
from supersum.suq2 import QContext, check_q_sum_rule


def spins(*text):
    return [Spin.parse(t).twice for t in text]


print("Triangle coefficient for (1, 1, 1):", nabla(*spins("1", "1", "1")).render())

args = spins("3/2", "1", "3/2", "2", "3/2", "1")
print("{3/2 1 3/2; 2 3/2 1} =", sixj(*args).render(),
      "| contraction oracle:", sixj_by_contraction(*args).render())

# The sum rule holds exactly; the residual is a Fraction, not a float.
print("su(2) sum-rule residual at (3/2, 1, 3/2, 2, 3/2):", check_sum_rule_su2(*spins("3/2", "1", "3/2", "2", "3/2")))

for q in (Fraction(2), Fraction(3, 2)):
    ctx = QContext(q)
    print(f"q = {q}: [3] = {ctx.qnum(3)}, Phi(2) = {ctx.series_Phi(2)},",
          "q-6-j {1/2 1/2 0; 1/2 1/2 1} =", ctx.q_sixj(*spins("1/2", "1/2", "0", "1/2", "1/2", "1")).render(),
          "| sum-rule residual:", check_q_sum_rule(*spins("1", "1", "1", "1", "1"), ctx))

# omega coefficients: the recursive and the nested-sum forms agree for every q
ctx = QContext(Fraction(5, 4))
print("omega_2 at (lambda, kappa) = (3/2, 5/2):", ctx.omega_rec(2, 3, 5), "==", ctx.omega_closed(2, 3, 5))
