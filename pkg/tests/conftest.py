from fractions import Fraction as F

import pytest


@pytest.fixture(scope="session")
def bound_reports_full_range():
    """Bound reports for every n in 2..200 at the 1e-12 tolerance, shared
    across the acceptance criteria that sweep the full range."""
    from invineq.spectra import bound_report

    tol = F(1, 10**12)
    return {n: bound_report(n, tol) for n in range(2, 201)}
