"""Local recurrence of Z(A) at the origin, its invariant and a gauge factor.

Run with ``python3 demos/recurrences.py``.
"""

from fuchsia import catalog as cat
from fuchsia.difference import essentially_same, gauge_factor, invariant, displayed_recurrences
from fuchsia.exact_algebra import rat
from fuchsia.families import hat_list, solution_family
from fuchsia.frobenius import recurrence_at, series_ok
from fuchsia.hypergeometric import rc0_hat
from fuchsia.params import Params

p = Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))

rec = recurrence_at(cat.z_x(p), 0, 0)
print("steps of the recurrence at x = 0:", rec.order)

rc0 = displayed_recurrences("Rc0", p)
print("H(A0) =", invariant(rc0)(p.A0))

hat = rc0_hat(hat_list("sol1_rc0", p))
print("Rc0 matches the 4F3 equation:", essentially_same(rc0, hat))
g = gauge_factor(rc0, hat)
print("gauge factor: w =", g.w, " ups =", [str(u) for u in g.ups], " downs =", [str(v) for v in g.downs])

s = solution_family("Z:f(0,0)", p, 40)
print("f(0,0) solves Z(A) through order 40:", series_ok(cat.z_x(p), s))
print("first coefficients:", [str(c) for c in s.coeffs[:4]])
