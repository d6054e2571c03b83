"""End-to-end acceptance checks, one test per headline guarantee.

Each test prints a single ``ACCEPTANCE n (...): PASS`` line (visible under
``pytest -s``/``-v``) after its assertions; a failing guarantee fails the test
the normal way.
"""

import math

import numpy as np

from polyspace import (
    DEFAULT_MAX_LEVEL,
    DEFAULT_REL_TOL,
    Domain,
    ExpAbs,
    ExpAbsPow,
    ExpRePow,
    QuadSettings,
    SpaceKind,
    SpaceSpec,
    Uniform,
    check_condition,
    d_z,
    d_zbar,
    default_radius,
    dilate,
    dilatation_convergence,
    disk_grid,
    from_monomials,
    grid_family,
    halfplane_grid,
    integrate,
    limsup_check,
    monomial,
    poly_approx,
    refine_until,
    run_theorem_suite,
    standard_functions,
)

DISK, HALF = Domain.DISK, Domain.HALFPLANE
FIXED = QuadSettings(refine=False)


def _disk(kind, p, weight=Uniform()):
    return SpaceSpec(domain=DISK, kind=kind, p=p, weight=weight)


def _hp(kind, p, weight=Uniform(), alpha=0.0, beta=1.0):
    return SpaceSpec(domain=HALF, kind=kind, p=p, weight=weight,
                     alpha=alpha, beta=beta)


def test_acceptance_1_quadrature_fixtures():
    area = integrate(lambda z: np.ones_like(z, dtype=float), disk_grid())
    assert abs(area - math.pi) / math.pi <= 1e-10

    moment = integrate(lambda z: np.abs(z) ** 2, disk_grid())
    assert abs(moment - math.pi / 2) / (math.pi / 2) <= 1e-10

    sqrt_val = refine_until(
        lambda z: np.sqrt(1 - np.abs(z) ** 2),
        grid_family(DISK), DEFAULT_REL_TOL, DEFAULT_MAX_LEVEL,
    ).value
    assert abs(sqrt_val - 2 * math.pi / 3) / (2 * math.pi / 3) <= 1e-10

    gauss = integrate(lambda z: np.exp(-np.abs(z) ** 2),
                      halfplane_grid(default_radius(1.0)))
    assert abs(gauss - math.pi / 2) / (math.pi / 2) <= 1e-10
    print("ACCEPTANCE 1 (quadrature fixtures): PASS")


def test_acceptance_2_dilatation_error_closed_form():
    report = dilatation_convergence(
        monomial(1, 1), _disk(SpaceKind.BESOV, 2), r_grid=(0.5, 0.9, 0.99))
    for row in report.rows:
        expected = (1 - row.r**2) * math.sqrt(math.pi)
        assert abs(row.err_fullnorm - expected) / expected <= 1e-8
    print("ACCEPTANCE 2 (dilatation error closed form): PASS")


def test_acceptance_3_besov_p2_is_dirichlet(corpus_functions):
    from polyspace import besov_norm, dirichlet_norm

    for label, f in corpus_functions:
        for mk in (_disk, _hp):
            nb = besov_norm(f, mk(SpaceKind.BESOV, 2)).full_norm
            nd = dirichlet_norm(f, mk(SpaceKind.DIRICHLET, 2)).full_norm
            denom = max(nd, 1.0)
            assert abs(nb - nd) / denom <= 1e-12, label
    print("ACCEPTANCE 3 (p=2 Besov collapses to Dirichlet): PASS")


def test_acceptance_4_weight_certificates():
    w1 = check_condition(ExpAbsPow(beta=1.0, n=2), k=0, r0=0.5)
    assert w1 is not None and w1.C <= 1.0 + 1e-9

    w2 = check_condition(ExpRePow(beta=1.0, n=2), k=0, r0=0.5)
    assert w2 is not None and w2.C <= 1.0 + 1e-9

    w3 = check_condition(ExpAbs(), k=1, r0=0.5)
    assert w3 is not None and w3.C <= 1.0 + 1e-6
    print("ACCEPTANCE 4 (weight compatibility certificates): PASS")


def test_acceptance_5_dilatation_theorem_matrix():
    suite = run_theorem_suite()
    assert suite.all_converged, [c.cell_id for c in suite.failures]
    for cell in suite.cells:
        errs = [row.err_fullnorm for row in cell.report.rows]
        for lo, hi in zip(errs[1:], errs[:-1]):
            assert lo <= hi + 1e-12, cell.cell_id
        assert errs[-1] <= 0.02 * cell.report.ref_norm, cell.cell_id
    print(f"ACCEPTANCE 5 (theorem matrix, {len(suite.cells)} cells): PASS")


def test_acceptance_6_limsup_certificates():
    fns = dict(standard_functions())
    cases = [
        (monomial(0, 1), _disk(SpaceKind.DIRICHLET, 2)),
        (monomial(1, 2), _disk(SpaceKind.BESOV, 4)),
        (fns["mixed"], _disk(SpaceKind.BESOV, 3, ExpAbsPow(beta=1.0, n=2))),
        (fns["analytic"], _disk(SpaceKind.DIRICHLET, 3)),
        (fns["pure-zbar"], _hp(SpaceKind.DIRICHLET, 2)),
        (fns["mixed"], _hp(SpaceKind.BESOV, 2, ExpRePow(beta=1.0, n=2))),
    ]
    for f, spec in cases:
        report = limsup_check(f, spec, tol=1e-3, settings=FIXED)
        assert report.certified, spec.describe()

    # the f = z rows are exact: dilating scales the derivative integral by r^2
    zrep = limsup_check(monomial(0, 1), _disk(SpaceKind.DIRICHLET, 2),
                        settings=FIXED)
    for row in zrep.rows:
        expected = row.r**2 * math.pi
        assert abs(row.lhs_dz - expected) / expected <= 1e-8
    print("ACCEPTANCE 6 (limsup certificates): PASS")


def test_acceptance_7_calculus_exactness(corpus_functions):
    rng = np.random.default_rng(99)
    z = 0.95 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
    for label, f in corpus_functions:
        g = f
        for _ in range(f.q):
            g = d_zbar(g)
        assert all(np.all(h.coeffs == 0) for h in g.components), label

        for r in (0.5, 0.9, 0.999):
            for op in (d_z, d_zbar):
                a = op(dilate(f, r))(z)
                # chain rule: either derivative of f(rz) picks up one factor r
                b = r * dilate(op(f), r)(z)
                ref = max(float(np.max(np.abs(a))), 1e-30)
                assert float(np.max(np.abs(a - b))) / ref <= 1e-12, label
    print("ACCEPTANCE 7 (exact Wirtinger calculus): PASS")


def test_acceptance_8_polynomial_density():
    f = from_monomials({(1, j): 1.0 / math.factorial(j) for j in range(31)}, q=2)
    report = poly_approx(f, _disk(SpaceKind.BESOV, 2), r=0.99,
                         m_grid=(2, 5, 10, 20), slack=0.1)
    errs = [row.error for row in report.rows]
    for lo, hi in zip(errs[1:], errs[:-1]):
        assert lo <= hi + 1e-12
    assert errs[-1] <= 1.1 * report.dilation_error
    assert report.verdict == "converged"
    print("ACCEPTANCE 8 (polynomial density via truncated dilations): PASS")
