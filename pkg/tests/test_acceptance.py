"""The eleven acceptance criteria, each run at its stated tolerance and budget."""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from fuchsia.verify import CRITERIA, Context, check_ids, get_check, run_checks

# criterion -> (runtime budget in seconds, minimum draws, checks that must be present)
CRITERION_SPECS = {
    1: (10, 5, ["ad1-K-L", "mc-L-ztilde", "mc-ztilde-L", "mc-ztilde-Q", "ad3-Q-R", "R-DF", "mc-L-Q", "composite-R-K"]),
    2: (5, 5, ["scheme-Z", "scheme-Zt", "scheme-Ztilde", "scheme-L", "scheme-Q", "scheme-R", "scheme-DF"]),
    3: (2, 5, ["self-adjoint-ztilde"]),
    4: (5, 5, ["recurrence-Rc0", "recurrence-Rc1", "recurrence-RcInf", "recurrence-RcQ00", "recurrence-RcQ0plus", "invariant-H0"]),
    5: (
        10,
        5,
        [
            "match-Rc0-sol1_rc0",
            "match-Rc0-sol2_rc0",
            "match-RcInf-sol1_rcinf",
            "match-RcInf-sol2_rcinf",
            "match-RcInf-sol3_rcinf",
            "match-Rc1-sol1_rc1",
            "match-Rc1-sol2_rc1",
            "match-Rc1-sol3_rc1",
            "match-Rc1-sol4_rc1",
            "match-RcQ00-sol1_rcq",
            "match-RcQ00-sol2_rcq",
            "match-RcQ00-sol3_rcq",
            "match-control-Rc0",
            "match-control-RcInf",
            "match-control-Rc1",
            "match-control-RcQ00",
        ],
    ),
    6: (60, 3, ["family-Z:f(0,0)", "family-Z:f(inf,+A2)", "family-Q:f(0,0)", "family-Q:f(0,+)", "family-DF:f(0,0)"]),
    7: (10, 10, ["4f3-contiguous", "4f3-three-term", "4f3-transformation", "4f3-convolution"]),
    8: (120, 3, ["y-relations", "rc1-annihilates-differences", "w-solves-Rc1"]),
    9: (30, 3, ["tensor-gauss-K", "tensor-product-series", "tensor-M6-Y-M5", "tensor-M5-split", "tensor-K13", "polynomial-solutions-L"]),
    10: (120, 5, ["pfaffian-z3", "pfaffian-z2"]),
    11: (5, 3, ["rl-origin", "rl-infinity"]),
}

# truncation orders and tolerances stated with the criteria
STATED_N = {"family-Z:f(0,0)": 40, "4f3-contiguous": 20, "w-solves-Rc1": 15, "rc1-annihilates-differences": 15, "tensor-product-series": 30, "rl-origin": 40}
STATED_TOL = {"y-relations": 1e-8, "rc1-annihilates-differences": 1e-8, "w-solves-Rc1": 1e-8}


@pytest.mark.parametrize("criterion", sorted(CRITERION_SPECS))
def test_criterion(criterion):
    budget, draws, required = CRITERION_SPECS[criterion]
    ids = check_ids(criterion)
    assert set(required) <= set(ids)
    for cid in required:
        c = get_check(cid)
        assert c.draws >= draws, cid
        if cid in STATED_N:
            assert c.n >= STATED_N[cid], cid
        if cid in STATED_TOL:
            assert c.tol == STATED_TOL[cid], cid
        elif criterion != 8:
            assert c.tol == 0.0, cid
    start = time.perf_counter()
    results = run_checks(ids, Context(seed=7))
    elapsed = time.perf_counter() - start
    failed = [r["id"] for r in results if r["status"] != "pass"]
    ok = not failed and elapsed < budget
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(
        f"{status} criterion {criterion}: {CRITERIA[criterion]} "
        f"({len(results)} checks, {elapsed:.1f}s of {budget}s budget)" + (f" failed: {', '.join(failed)}" if failed else "")
    )
    print(ACCEPTANCE_LINES[-1])
    assert not failed, failed
    assert elapsed < budget, f"{elapsed:.1f}s exceeds the {budget}s budget"
