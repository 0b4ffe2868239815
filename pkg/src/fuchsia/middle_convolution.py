"""Middle convolution of differential operators with polynomial coefficients.

Symbolically ``mc_mu(P) = D^{-mu} o P o D^{mu}``.  The working recipe:
left-multiply by ``D^r`` so that every monomial ``x^i D^j`` has ``i <= j``,
rewrite in ``theta = x D``, substitute ``theta -> theta - mu``, return to
``x, D`` and strip left factors of ``D``.
"""

from __future__ import annotations

from .exact_algebra import rat
from .ore import (
    D,
    DiffOp,
    equals_up_to_left_factor,
    from_theta,
    op_mul,
    to_theta,
    weyl_left_divide_by_d,
)

__all__ = ["mc", "mc_compose_check", "strip_left_d", "theta_shift"]


def strip_left_d(p: DiffOp) -> tuple[DiffOp, int]:
    """Remove every left factor ``D``; returns the quotient and the count."""
    count = 0
    while True:
        q, ok = weyl_left_divide_by_d(p)
        if not ok:
            return p, count
        p = q
        count += 1


def _max_shift(p: DiffOp) -> int:
    r = None
    for j, c in enumerate(p.poly_coeffs()):
        if c.is_zero():
            continue
        top = c.degree - j
        r = top if r is None else max(r, top)
    return r or 0


def theta_shift(p: DiffOp, mu) -> DiffOp:
    """``D^r o p`` with ``theta -> theta - mu`` applied; no division."""
    r = _max_shift(p)
    t = op_mul(D**r, p) if r > 0 else p
    return from_theta(to_theta(t).shift(-rat(mu)))


def mc(p: DiffOp, mu) -> DiffOp:
    """Middle convolution with parameter ``mu``; result is normalised.

    Left factors of ``D`` already present in ``p`` are kept as they are,
    matching ``mc_mu(D o P) = D o mc_mu(P)``; only the factors created by
    the theta substitution are divided out.
    """
    mu = rat(mu)
    base = p.normalize()
    base, outer = strip_left_d(base)
    if mu == 0:
        out = base
    else:
        shifted = theta_shift(base, mu)
        out, _ = strip_left_d(shifted.normalize())
    if outer:
        out = op_mul(D**outer, out)
    return out.normalize()


def mc_compose_check(p: DiffOp, mu, nu) -> bool:
    """``mc_nu(mc_mu(p)) == mc_{mu+nu}(p)`` up to a left factor."""
    lhs = mc(mc(p, mu), nu)
    rhs = mc(p, rat(mu) + rat(nu))
    return equals_up_to_left_factor(lhs, rhs) is not None
