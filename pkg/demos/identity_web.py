"""Walk the chain K -> L -> Ztilde -> Q -> R at one rational parameter point.

Run with ``python3 demos/identity_web.py``.
"""

from fuchsia import catalog as cat
from fuchsia.exact_algebra import rat
from fuchsia.local_analysis import compare_scheme, expected_scheme
from fuchsia.middle_convolution import mc
from fuchsia.ore import equals_up_to_left_factor
from fuchsia.params import Params

p = Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))
values = dict(zip(("A0", "A1", "A2", "A3"), p.A))
half = rat(1, 2)

steps = [
    ("Ad(x^-A0) K = L", cat.ad1(cat.k_op(p), p), cat.l_op(p)),
    ("mc_{1/2} L = Ztilde", mc(cat.l_op(p), half), cat.ztilde(p)),
    ("mc_{-1/2-A2} Ztilde = Q", mc(cat.ztilde(p), -half - p.A2), cat.q_op(p)),
    ("Ad3 Q = R", cat.ad3(cat.q_op(p), p), cat.r_op(p)),
    ("R = S(a,b,c,g)", cat.r_op(p), cat.df_op(p.to_df())),
]
for label, got, want in steps:
    print(f"{label:28s} {equals_up_to_left_factor(got, want) is not None}")

print("\nQ(A) =", cat.make("Q", values).to_str())
for point, row in compare_scheme(cat.q_op(p), expected_scheme("Q"), values).items():
    print(f"  exponents at {point}: {row['computed']}  match={row['match']}")
