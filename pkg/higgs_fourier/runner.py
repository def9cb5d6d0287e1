"""
Verification suites run by the command-line interface.

Each check is a callable returning a CheckResult; SuiteCollection runs them by
name and turns exceptions into failed results so one broken check does not
hide the others.
"""

import logging
import os
import random
from datetime import datetime
from typing import Any, Callable, Optional

from .algebra import Differential, HyperellipticCurve, Polynomial, identity, rational_points
from .chow import ch_TFT, cohomology_table, euler_from_table, hrr_euler_characteristic, todd
from .errors import CheckResult, HiggsFourierError, failed
from .higgs import (
    HiggsBundle,
    certify_stable,
    gauge_transform,
    random_gauge,
    stability_scan,
)
from .reconstruct import (
    affine_chart,
    chart_at_infinity,
    cokernel_presentation,
    conjugacy_test,
    glue_check,
    round_trip,
)
from .transform import BaseSpacePoint, expected_dims, fiber, fingerprint, pg_fiber_table, verify_IT1

logger = logging.getLogger(__name__)

LOG_FILE: Optional[str] = None


def configure_logging(level: str = "INFO", log_dir: Optional[str] = None) -> Optional[str]:
    """Stream handler on stderr, plus a dated log file when log_dir is given."""
    global LOG_FILE
    LOG_FILE = None
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_dir:
        date_dir = os.path.join(log_dir, datetime.now().strftime("%Y%m%d"))
        os.makedirs(date_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        LOG_FILE = os.path.join(date_dir, f"higgs_fourier_{timestamp}.log")
        handlers.append(logging.FileHandler(LOG_FILE))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
    logger.info(f"Logging level set to: {level.upper()}")
    if LOG_FILE:
        logger.info(f"Log file created at: {LOG_FILE}")
    return LOG_FILE


Check = Callable[[], CheckResult]


class SuiteCollection:
    """Named checks, run in registration order."""

    def __init__(self):
        self.checks: dict[str, Check] = {}

    def add(self, name: str, check: Check) -> None:
        self.checks[name] = check

    def run(self, name: str) -> CheckResult:
        if name not in self.checks:
            return failed(name, f"Unknown check: {name}")
        try:
            result = self.checks[name]()
        except HiggsFourierError as e:
            result = failed(name, f"{type(e).__name__}: {e.message}")
        except Exception as e:
            logger.exception(f"Check {name} crashed")
            result = failed(name, f"Error running check {name}: {str(e)}")
        result = result.replace(name=name)
        logger.info(f"{name}: {'PASS' if result.passed else 'FAIL'}")
        return result

    def run_all(self) -> list[CheckResult]:
        return [self.run(name) for name in self.checks]


def _probe_points(c: HyperellipticCurve, n: int):
    return rational_points(c)[:n]


def stability_check(H: HiggsBundle, degree_bound: int, probe_points: int) -> CheckResult:
    if H.rank == 1:
        return CheckResult(passed=True, output={"certified": True, "reason": "line bundles are stable"})
    if H.rank != 2:
        ok = certify_stable(H)
        return CheckResult(passed=ok, output={"certified": ok}, error=None if ok else "no stability certificate")
    report = stability_scan(H, degree_bound, _probe_points(H.curve, probe_points))
    witness = [s.as_dict() for s in report.destabilizers]
    return CheckResult(
        passed=report.stable_up_to_bound,
        output=report.as_dict(),
        error=None if report.stable_up_to_bound else "destabilizing subbundle found",
        witness=witness or None,
    )


def it1_check(c: HyperellipticCurve, H: HiggsBundle, samples: int, seed: int) -> CheckResult:
    report = verify_IT1(c, H, samples, seed)
    violations = report.violations
    return CheckResult(
        passed=report.passed,
        output=report.as_dict(),
        error=f"{len(violations)} fibers outside {expected_dims(c, H.rank)}" if violations else None,
        witness=violations[0].as_dict() if violations else None,
    )


def rank_formula_check(c: HyperellipticCurve, H: HiggsBundle) -> CheckResult:
    """Generic fiber rank equals the degree-0 part of ch(TFT)."""
    origin = BaseSpacePoint(identity(c), Differential(Polynomial.zero(c.p)))
    h1 = fiber(c, H, origin).dims[1]
    ch0 = ch_TFT(c.genus, H.rank).coefficient(0, 0)
    expected = (2 * c.genus - 2) * H.rank
    ok = h1 == expected == ch0
    return CheckResult(
        passed=ok,
        output={"h1_at_origin": h1, "ch0": str(ch0), "expected": expected},
        error=None if ok else "fiber rank disagrees with (2g-2)r",
    )


def pg_fiber_check(c: HyperellipticCurve, H: HiggsBundle) -> CheckResult:
    table = pg_fiber_table(c, H)
    matches = table.table == cohomology_table(c.genus, H.rank)
    ok = table.passed and matches
    return CheckResult(
        passed=ok,
        output=table.as_dict(),
        error=None if ok else "P^g fiber evaluation is not injective or table mismatch",
    )


def hrr_check(g: int, r: int) -> CheckResult:
    chi = hrr_euler_characteristic(g, r)
    alternating = euler_from_table(g, r)
    ok = chi == alternating
    return CheckResult(
        passed=ok,
        output={"genus": g, "rank": r, "hrr": str(chi), "table_alternating_sum": alternating},
        error=None if ok else "HRR integral differs from the table",
    )


def gauge_invariance_check(c: HyperellipticCurve, H: HiggsBundle, samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    G = gauge_transform(H, random_gauge(H, rng))
    fp, fq = fingerprint(c, H, samples, seed), fingerprint(c, G, samples, seed)
    ok = fp == fq
    return CheckResult(
        passed=ok,
        output={"samples": samples, "spectral": [list(v) for v in fp.spectral]},
        error=None if ok else "fingerprint changed under a gauge transformation",
        witness=None if ok else {"original": fp.as_dict(), "gauged": fq.as_dict()},
    )


def verify_suite(c: HyperellipticCurve, H: HiggsBundle, samples: int, seed: int,
                 degree_bound: int, probe_points: int) -> SuiteCollection:
    suite = SuiteCollection()
    suite.add("stability", lambda: stability_check(H, degree_bound, probe_points))
    suite.add("it1", lambda: it1_check(c, H, samples, seed))
    suite.add("rank_formula", lambda: rank_formula_check(c, H))
    suite.add("pg_fiber", lambda: pg_fiber_check(c, H))
    suite.add("hrr", lambda: hrr_check(c.genus, H.rank))
    suite.add("gauge_invariance", lambda: gauge_invariance_check(c, H, min(samples, 5), seed))
    return suite


def default_charts(c: HyperellipticCurve):
    """dx/y on the affine curve and x^(g-1) dx/y on a chart through infinity."""
    chart_a = affine_chart(c, Differential(Polynomial.constant(1, c.p)))
    chart_b = chart_at_infinity(c, Differential(Polynomial.monomial(c.genus - 1, c.p)))
    return chart_a, chart_b


def round_trip_check(c, H, chart, convention: str, perturbation: int) -> CheckResult:
    trip = round_trip(c, H, chart, convention, perturbation)
    return CheckResult(
        passed=trip.passed,
        output=trip.as_dict(),
        error=None if trip.passed else "recovered endomorphism differs from u",
        witness=None if trip.passed else {
            "expected": [[e.as_dict() for e in row] for row in trip.presentation.u],
            "recovered": [[e.as_dict() for e in row] for row in trip.recovered],
        },
    )


def rank_recovery_check(c, H, chart, convention: str) -> CheckResult:
    trip = round_trip(c, H, chart, convention)
    ok = trip.rank == H.rank
    return CheckResult(passed=ok, output={"recovered_rank": trip.rank, "rank": H.rank},
                       error=None if ok else "recovered rank differs")


def glue_suite_check(c, H, chart_a, chart_b, seed: int, convention: str) -> CheckResult:
    report = glue_check(c, H, chart_a, chart_b, 10, seed, convention)
    bad = [repr(pl) for pl, ok in report.samples if not ok]
    return CheckResult(
        passed=report.passed,
        output=report.as_dict(),
        error=None if report.passed else "charts disagree on the overlap",
        witness=bad or None,
    )


def conjugacy_check(c, H, chart, seed: int) -> CheckResult:
    rng = random.Random(seed)
    G = gauge_transform(H, random_gauge(H, rng))
    u = cokernel_presentation(c, H, chart).u
    v = cokernel_presentation(c, G, chart).u
    ok, witness = conjugacy_test(u, v, chart, 20, seed)
    return CheckResult(passed=ok, output={"points": 20},
                       error=None if ok else "characteristic polynomials differ",
                       witness=repr(witness) if witness else None)


def roundtrip_suite(c: HyperellipticCurve, H: HiggsBundle, seed: int,
                    convention: str, perturbation: int) -> SuiteCollection:
    chart_a, chart_b = default_charts(c)
    suite = SuiteCollection()
    suite.add("roundtrip_affine", lambda: round_trip_check(c, H, chart_a, convention, perturbation))
    suite.add("roundtrip_infinity", lambda: round_trip_check(c, H, chart_b, convention, perturbation))
    suite.add("bundle_rank", lambda: rank_recovery_check(c, H, chart_a, convention))
    suite.add("glue", lambda: glue_suite_check(c, H, chart_a, chart_b, seed, convention))
    suite.add("conjugacy", lambda: conjugacy_check(c, H, chart_a, seed))
    return suite


def table_report(g: int, r: int) -> dict[str, Any]:
    return {
        "genus": g,
        "rank": r,
        "cohomology_table": [{"p": p, "dim": d} for p, d in cohomology_table(g, r)],
        "ch_TFT": ch_TFT(g, r).as_dict(),
        "todd": todd(g).as_dict(),
        "hrr_integral": str(hrr_euler_characteristic(g, r)),
        "table_alternating_sum": euler_from_table(g, r),
    }


def table_suite(g: int, r: int) -> SuiteCollection:
    suite = SuiteCollection()
    suite.add("table", lambda: CheckResult(passed=True, output=table_report(g, r)))
    suite.add("hrr", lambda: hrr_check(g, r))
    return suite
