"""osp(1|2) closure coefficients, the P/Q engine and the zero-operator families.

Polynomials are written in u = c0 + d0^2 and v = d0^2, with an explicit d0
prefactor when the pseudo-degree is half-integral.

Run with:  python demos/osp_closure_polynomials.py
"""

from supersum.exact import Spin
from supersum.osp import closure_unified, conjecture1_scan, poly_P, poly_P_extended, poly_Q, x_coeff
from supersum.reference_forms import closed_form_P


def s(text):
    return Spin.parse(text).twice


print("P^1(1/2, 1/2)         =", poly_P_extended(s("1"), s("1/2"), s("1/2")).render())
print("P^1/2(1, 3/2)         =", poly_P(s("1/2"), s("1"), s("3/2")).render())
print("P^3/2(2, 3)           =", poly_P(s("3/2"), s("2"), s("3")).render())
print("Q^1/2(1; 5/2)         =", poly_Q(s("1/2"), s("1"), s("5/2")).render())
print("[S^1 x S^1]^1         =", closure_unified(2, 2, 2).render())
print("[S^1 x S^3/2]^1       =", closure_unified(2, 3, 2).render(), "(a zero operator)")
print("[S^1 x S^1/2]^1       =", closure_unified(2, 1, 2).render(), "(integral spin above: not zero)")

# The omega = 3 closed form needs a doubled middle coefficient when both spins are half-integral.
engine = poly_P(6, 7, 7)
print("P^3(7/2, 7/2) engine  =", engine.render())
print("  corrected form match:", engine == closed_form_P(6, 7, 7))
print("  printed form match:  ", engine == closed_form_P(6, 7, 7, printed=True))

print("x_0^2(3, 4) =", x_coeff(0, 4, 6, 8))
report = conjecture1_scan(10, 7)
print(f"integrality scan up to twice-value 10: {report.status}, {report.passed} polynomials")
