"""Shared pytest plumbing.

The acceptance gate in test_acceptance.py names its tests
test_criterion_NN_*; the hooks below collect their outcomes and print one
PASS/FAIL line per criterion at the end of the run, so the gate status is
readable without scrolling through the full log.
"""

CRITERIA = {
    1: "round-sphere multiplicities match the binomial oracle (exact; p<=6, k<=12; p=3 gives (k+1)^2)",
    2: "tanno_lambda1 equals the engine's first distinct value (exact coefficients, 100 samples; branch point x=6)",
    3: "eleven-curve table: ten exact breakpoints, containment on 20 region samples each, position checks (exact)",
    4: "epsilon-form lambda_1 is 8 below 1/sqrt(6), 2+1/eps^2 above (rel 1e-12, 50 samples, via the scaling pipeline)",
    5: "cp2: index (1,0) on the 1e4 log grid; shifted lambda_1 >= 4+2sqrt(3)-3/2-1e-9; exact rationals at r=1, sqrt(5)",
    6: "page roots within 1e-3 of 0.7032761573791504 and 2.4383171081542976; exactly two on (0, pi)",
    7: "page profile on the 512 grid: index 1/5/1, grid nullity 0, nullity 4 at certified roots, second mode positive",
    8: "Einstein anchors: 12(1+a^2) in [12.95, 12.96]; sqrt(C/V) = D/U within 1e-12 at 50 samples",
    9: "instability: s > 0 ambients unstable with certificate -s/n and index >= 1 (100 synthetic + both families)",
    10: "scaling law: values divide by mu exactly; index/nullity invariant under simultaneous (spectrum, shift) scaling",
    11: "complex curves: adjunction genus matches (d-1)(d-2)/2 for d=1,2,3; index/nullity (0,1), (0,4), (0,1)",
}

_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    try:
        num = int(name[len("test_criterion_"):].split("_", 1)[0])
    except ValueError:
        return
    _outcomes[num] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        status = "PASS" if _outcomes[num] == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num:2d} {status} - {CRITERIA.get(num, '?')}")
