from suzuki_cd.verification import (
    verify_class_counts,
    verify_degree_count_bounds,
    verify_degree_sets,
    verify_gcd_closed_forms,
    verify_quad_identity,
    verify_stabilizer_witnesses,
)


def test_gcd_sweep():
    report = verify_gcd_closed_forms(24)
    assert report.passed, report.failures[:3]
    assert report.checks > 500


def test_class_count_sweep():
    report = verify_class_counts(24)
    assert report.passed, report.failures[:3]


def test_quad_identity_sweep():
    report = verify_quad_identity(n_max=80, samples=40)
    assert report.passed, report.failures[:3]
    assert report.checks > 1000


def test_quad_identity_deterministic():
    a = verify_quad_identity(n_max=30, samples=20, seed=7)
    b = verify_quad_identity(n_max=30, samples=20, seed=7)
    assert (a.checks, a.failures) == (b.checks, b.failures)


def test_stabilizer_sweep():
    report = verify_stabilizer_witnesses(6)
    assert report.passed, report.failures[:3]


def test_degree_set_sweep():
    report = verify_degree_sets(6)
    assert report.passed, report.failures[:3]


def test_degree_count_bound_sweep():
    report = verify_degree_count_bounds(12)
    assert report.passed, report.failures[:3]


def test_parallel_jobs_agree_with_serial():
    serial = verify_degree_sets(4, jobs=1)
    parallel = verify_degree_sets(4, jobs=2)
    assert (serial.checks, serial.failures) == (parallel.checks, parallel.failures)


def test_summary_wording():
    report = verify_class_counts(4)
    assert report.summary().startswith("class-counts: ")
    assert report.summary().endswith("ok")
