"""Acceptance suites.  Each test prints one PASS/FAIL line straight to the
terminal (bypassing capture) and then asserts.  Runnable directly as well:
``python3 tests/test_acceptance.py``."""

import os
import sys
import time

import pytest

from permcat import documents as docs
from permcat.category import PERMCAT_LAWS, DiscreteCat, terminal, validate
from permcat.gabriel import gabriel_factorize, verify_factorization
from permcat.generator import GeneratorConfig, InstanceGenerator, lifting_square
from permcat.modelcat import (
    RETRACT_CHECKS, build_retract, check_square, properness_check, pushout_free,
    recognize_cofibration, universal_lift, verify_lift, verify_retract,
)
from permcat.monoid import (
    FiniteMonoid, FreeMonoid, MonoidHom, YES as MONOID_YES, constant_unit_hom, cyclic_group,
    free_monoid, identity_hom, is_surjective, solve_lifting, trivial_monoid,
)
from permcat.smfunctor import (
    SmFunctor, coherence_uniqueness, is_strict, validate_functor, validate_nat_trans,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
SEEDS = {1: 101, 2: 202, 3: 303, 4: 404, 6: 606}


def report_line(number, title, ok, detail, seconds, limit=None):
    timing = f"{seconds:.1f}s" + (f" (limit {limit}s)" if limit else "")
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}: {detail}; {timing}"


def emit(capsys, line):
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        print("\n" + line)


# ------------------------------------------------------------ 1


def llp_suite():
    gen = InstanceGenerator(GeneratorConfig(seed=SEEDS[1]))
    ok = 0
    for _ in range(200):
        top, left, right, bottom = lifting_square(gen)
        M, N, Q = bottom.domain, top.codomain, bottom.codomain
        bounded = (isinstance(M, FreeMonoid) and len(M.generators) <= 3
                   and isinstance(N, FiniteMonoid) and N.order <= 4
                   and isinstance(Q, FiniteMonoid) and Q.order <= 4
                   and is_surjective(right, 0) == MONOID_YES)
        L = solve_lifting(top, left, right, bottom, 4)
        good = (bounded and L is not None
                and all(right(L(m)) == bottom(m) for m in M.enumerate(3))
                and all(L(left(a)) == top(a) for a in left.domain.enumerate(3)))
        ok += good
    one, z2, X = trivial_monoid(), cyclic_group(2), free_monoid(["x"])
    z2_none = solve_lifting(constant_unit_hom(one, X), constant_unit_hom(one, z2),
                            MonoidHom(X, z2, {"x": "a"}), identity_hom(z2), 6) is None
    return ok == 200 and z2_none, f"{ok}/200 lifts, Z2 counterexample None at depth 6: {z2_none}"


# ------------------------------------------------------------ 2


def gabriel_suite():
    gen = InstanceGenerator(GeneratorConfig(seed=SEEDS[2]))
    ok = 0
    for _ in range(50):
        F = gen.unital_functor()
        C = F.domain
        obs = C.objects.enumerate(3)
        bounded = len(obs) <= 4 and all(len(C.hom(x, y)) <= 9 for x in obs for y in obs)
        fac = gabriel_factorize(F, 3)
        r = verify_factorization(F, fac, 3)
        induced = [e for e in r.entries if e.law.startswith("induced.")]
        ok += bounded and r.ok and len(induced) == len(PERMCAT_LAWS)
    return ok == 50, f"{ok}/50 factorizations verified"


# ------------------------------------------------------------ 3


def _point_into_z2():
    one, z2 = terminal(), cyclic_group(2)
    D = DiscreteCat(z2)
    return SmFunctor(one, D, MonoidHom(one.objects, z2, {"e": "e"}), lambda f: D.identity("e"))


def retract_suite():
    gen = InstanceGenerator(GeneratorConfig(seed=SEEDS[3]))
    ok = 0
    for _ in range(30):
        F = gen.certified_cofibration()
        L = recognize_cofibration(F, 3)
        if L is None:
            continue
        r = verify_retract(build_retract(F, L), 3)
        ok += r.ok and [e.law for e in r.entries] == list(RETRACT_CHECKS)
    rejected = recognize_cofibration(_point_into_z2(), 6) is None
    return ok == 30 and rejected, f"{ok}/30 witnesses verified, 𝟙 → Discrete(Z2) rejected: {rejected}"


# ------------------------------------------------------------ 4 and 5


def pushout_runs():
    gen = InstanceGenerator(GeneratorConfig(seed=SEEDS[4]))
    lift_ok = proper_ok = 0
    for _ in range(50):
        G, cof = gen.pushout_square()
        res = pushout_free(G, cof, 3)
        square = check_square(res, 3).counterexample is None and validate(res.category, 3).ok
        R, T, _ = gen.cocone(G, cof, res)
        try:
            L = universal_lift(res, R, T, 3)
        except Exception:  # noqa: BLE001 - any failure means no lift
            L = None
        if L is not None:
            lr = verify_lift(res, L, R, T, 3)
            lift_ok += square and lr.ok and is_strict(L, 3) and lr["uniqueness"].checked > 0
        pr = properness_check(G, cof, 3, res)
        proper_ok += pr["P_fully_faithful"].passed and pr["P_essentially_surjective"].passed \
            and pr.ok
    return lift_ok, proper_ok


# ------------------------------------------------------------ 6


def transport_suite():
    gen = InstanceGenerator(GeneratorConfig(seed=SEEDS[6]))
    ok = 0
    for _ in range(30):
        F = gen.deloop_functor()
        G, alpha = gen.transported(F)
        gr = validate_functor(G, 3)
        coherence = all(gr[law].passed for law in ("coherence_symmetry",
                                                   "coherence_associativity"))
        unique = coherence_uniqueness(alpha, 3)
        ok += (gr.ok and coherence and validate_nat_trans(alpha, 3).ok
               and unique.counterexample is None and unique.checked > 0)
    return ok == 30, f"{ok}/30 transported coherences coherent, monoidal and unique"


# ------------------------------------------------------------ 7


def soundness_suite():
    folder = os.path.join(FIXTURES, "negative")
    exact = []
    for law in PERMCAT_LAWS:
        C = docs.load(os.path.join(folder, f"{law}.json"))["value"]
        exact.append(validate(C, 3).failed() == [law])
    return all(exact), f"{sum(exact)}/{len(PERMCAT_LAWS)} controls fail exactly their law"


# ------------------------------------------------------------ pytest entry points


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


@pytest.fixture(scope="module")
def pushout_results():
    return _timed(pushout_runs)


def test_criterion_1_free_monoid_llp(capsys):
    (ok, detail), dt = _timed(llp_suite)
    ok = ok and dt < 30
    emit(capsys, report_line(1, "free-monoid lifting", ok, detail, dt, 30))
    assert ok


def test_criterion_2_gabriel(capsys):
    (ok, detail), dt = _timed(gabriel_suite)
    ok = ok and dt < 60
    emit(capsys, report_line(2, "Gabriel factorization", ok, detail, dt, 60))
    assert ok


def test_criterion_3_retract(capsys):
    (ok, detail), dt = _timed(retract_suite)
    ok = ok and dt < 60
    emit(capsys, report_line(3, "retract of a free cofibration", ok, detail, dt, 60))
    assert ok


def test_criterion_4_pushout_and_lift(capsys, pushout_results):
    (lift_ok, _), dt = pushout_results
    ok = lift_ok == 50 and dt < 120
    emit(capsys, report_line(4, "pushout square and universal lift", ok,
                             f"{lift_ok}/50 squares commute with a unique strict lift", dt, 120))
    assert ok


def test_criterion_5_left_properness(capsys, pushout_results):
    (_, proper_ok), dt = pushout_results
    ok = proper_ok == 50 and dt < 120
    emit(capsys, report_line(5, "cobase change is an equivalence", ok,
                             f"{proper_ok}/50 legs fully faithful and essentially surjective",
                             dt, 120))
    assert ok


def test_criterion_6_transport(capsys):
    (ok, detail), dt = _timed(transport_suite)
    ok = ok and dt < 30
    emit(capsys, report_line(6, "transported coherence", ok, detail, dt, 30))
    assert ok


def test_criterion_7_validator_soundness(capsys):
    (ok, detail), dt = _timed(soundness_suite)
    emit(capsys, report_line(7, "negative controls", ok, detail, dt))
    assert ok


if __name__ == "__main__":
    failures = 0
    for number, title, fn, limit in [
        (1, "free-monoid lifting", llp_suite, 30), (2, "Gabriel factorization", gabriel_suite, 60),
        (3, "retract of a free cofibration", retract_suite, 60),
        (6, "transported coherence", transport_suite, 30),
        (7, "negative controls", soundness_suite, None),
    ]:
        (ok, detail), dt = _timed(fn)
        ok = ok and (limit is None or dt < limit)
        failures += not ok
        emit(None, report_line(number, title, ok, detail, dt, limit))
    (lift_ok, proper_ok), dt = _timed(pushout_runs)
    for number, title, n in [(4, "pushout square and universal lift", lift_ok),
                             (5, "cobase change is an equivalence", proper_ok)]:
        ok = n == 50 and dt < 120
        failures += not ok
        emit(None, report_line(number, title, ok, f"{n}/50", dt, 120))
    sys.exit(1 if failures else 0)
