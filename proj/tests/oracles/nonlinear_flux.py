"""Independent oracle for the nonlinear heat-flux prefactors.

Builds q = q_tr + q_in and Q = q_tr - (5 theta + 3 vartheta)/(delta theta - 3 vartheta) q_in
from the per-mode constitutive laws, checks the closed forms symbolically, and prints the
prefactors at the frozen test point with 30 significant digits.
"""
import sympy as sp

th, vt, d, z11, z12, z22 = sp.symbols("theta vartheta delta z11 z12 z22", positive=True)
g_th, g_vt = sp.symbols("g_theta g_vartheta")

t_tr = th + vt
t_in = th - 3 * vt / d
g_tr = g_th + g_vt
g_in = g_th - 3 * g_vt / d

q_tr = -(z11 * g_tr / t_tr**2 + z12 * g_in / t_in**2)
q_in = -(z12 * g_tr / t_tr**2 + z22 * g_in / t_in**2)
q = q_tr + q_in
Q = q_tr - (5 * th + 3 * vt) / (d * th - 3 * vt) * q_in

def prefactors(expr):
    e = sp.expand(expr)
    return -e.coeff(g_th), -e.coeff(g_vt)

A_qt, A_qv = prefactors(q)
A_Qt, A_Qv = prefactors(Q)

din = d * th - 3 * vt
w = 5 * th + 3 * vt
closed = {
    "A_q_theta": (z11 + z12) / t_tr**2 + (z12 + z22) * d**2 / din**2,
    "A_q_vartheta": (z11 + z12) / t_tr**2 - 3 * (z12 + z22) * d / din**2,
    "A_Q_theta": z11 / t_tr**2 - z22 * w * d**2 / din**3
    - z12 * (-d**2 * t_tr**2 + d * th * w - 3 * vt * w) / (t_tr**2 * din**2),
    "A_Q_vartheta": z11 / t_tr**2 + 3 * z22 * w * d / din**3
    - z12 * (8 * d * th**2 + 3 * (3 * d - 5) * th * vt + 3 * (d - 3) * vt**2) / (t_tr**2 * din**2),
}
derived = {"A_q_theta": A_qt, "A_q_vartheta": A_qv, "A_Q_theta": A_Qt, "A_Q_vartheta": A_Qv}

point = {th: 1, vt: sp.Rational(1, 10), d: 2, z11: 1, z12: sp.Rational(3, 10), z22: sp.Rational(1, 5)}
for name, expr in derived.items():
    diff = sp.simplify(expr - closed[name])
    value = sp.nsimplify(expr.subs(point))
    print(f"{name}: closed-form difference = {diff}, value = {sp.N(value, 30)} ({value})")
