"""Integrability of the 8x8 and 6x6 Pfaffian forms, corrected and as tabulated.

Run with ``python3 demos/pfaffian.py``.
"""

from fuchsia import pfaffian as pf
from fuchsia.exact_algebra import rat

a = (rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))
for name, build in (("omega8", pf.build_omega8), ("omega6", pf.build_omega6)):
    w = build(a)
    printed = build(a, printed=True)
    print(
        f"{name}: integrable={pf.check_integrability(w)}"
        f" d(omega)!=0={pf.d_omega_nonzero(w)}"
        f" tabulated-integrable={pf.check_integrability(printed)}"
        f" defects-in-tabulated={len(pf.integrability_defects(printed))}"
    )
