"""Range sweeps cross-checking the engine against oracles and its own invariants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagnostics import blowup_correction, union_euler_check
from .engine import Engine, SplitPlan
from .errors import HodgeError
from .hodge import BigradedDims, graded_F_dims, tate_twist
from .oracles import chi_y_ci, genus_adjunction, griffiths_prim_dims, reconstruct_middle, self_check
from .variety import CISpec, ProjectiveSpace

CI_MAX_DEGREE = 4
CI_MAX_COUNT = 3


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def as_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "passed": self.passed, "failures": self.failures[:20]}


def hypersurface_specs(max_ambient_dim: int, max_degree: int):
    for N in range(2, max_ambient_dim + 1):
        for d in range(2, max_degree + 1):
            yield CISpec(ProjectiveSpace(N), (d,))


def ci_specs(max_ambient_dim: int, max_degree: int):
    top = min(CI_MAX_DEGREE, max_degree)
    for m in range(1, max_ambient_dim + 1):
        for r in range(1, min(CI_MAX_COUNT, m) + 1):
            for degrees in itertools.combinations_with_replacement(range(1, top + 1), r):
                yield CISpec(ProjectiveSpace(m), degrees)


def all_splits(d: int):
    return [(d1, d - d1) for d1 in range(1, d // 2 + 1)]


def lefschetz_middle_term(n: int) -> BigradedDims:
    return BigradedDims({(n // 2, n // 2): 1}) if n % 2 == 0 else BigradedDims()


def _by_p(middle: BigradedDims, n: int) -> dict[int, int]:
    return {p: middle[(p, n - p)] for p in range(n, -1, -1) if middle[(p, n - p)]}


def _guard(check: CheckResult, subject, fn) -> None:
    check.cases += 1
    try:
        fn()
    except HodgeError as exc:
        check.fail(f"{subject}: {type(exc).__name__}: {exc}")


def check_oracle_self() -> CheckResult:
    check = CheckResult("chi_y-self-check", cases=1)
    for failure in self_check():
        check.fail(failure)
    return check


def check_hypersurface_oracle(engine: Engine, specs) -> CheckResult:
    check = CheckResult("hypersurface-griffiths")
    for spec in specs:
        def run(spec=spec):
            n, (d,) = spec.dim, spec.degrees
            got = engine.diamond(spec).degree(n)
            want = griffiths_prim_dims(d, n) + lefschetz_middle_term(n)
            if got != want:
                check.fail(f"{spec}: engine {dict(got)} vs griffiths {dict(want)}")
        _guard(check, spec, run)
    return check


def check_ci_oracle(engine: Engine, specs) -> CheckResult:
    check = CheckResult("ci-chi_y")
    for spec in specs:
        def run(spec=spec):
            N, n = spec.ambient.dim, spec.dim
            chi = chi_y_ci(spec.degrees, N)
            diamond = engine.diamond(spec)
            want = reconstruct_middle(chi, n)
            if diamond.degree(n) != want:
                check.fail(f"{spec}: engine {dict(diamond.degree(n))} vs chi_y {dict(want)}")
            top = sum((-1) ** p * c for p, c in enumerate(chi))
            if diamond.euler_characteristic() != top:
                check.fail(f"{spec}: euler {diamond.euler_characteristic()} vs chi_y(-1) {top}")
            if n == 1 and diamond.h(1, 0) != genus_adjunction(spec.degrees, N):
                check.fail(f"{spec}: genus {diamond.h(1, 0)} vs adjunction")
        _guard(check, spec, run)
    return check


def check_split_independence(engine: Engine, specs) -> CheckResult:
    check = CheckResult("split-independence")
    for spec in specs:
        def run(spec=spec):
            d = spec.degrees[-1]
            reference = engine.diamond(spec).degree(spec.dim)
            for split in all_splits(d):
                plan = SplitPlan.build(spec, split)
                middle = engine.middle_hodge(plan)
                graded = graded_F_dims(engine.assemble_amhs(plan))
                if middle != reference or graded != _by_p(reference, spec.dim):
                    check.fail(f"{spec} split {split}: {dict(middle)} / Gr_F {graded} vs {dict(reference)}")
        _guard(check, spec, run)
    return check


def plans_for(specs, every_split: bool):
    for spec in specs:
        norm = spec.normalized()
        if norm.dim < 1 or not norm.degrees:
            continue
        splits = all_splits(norm.degrees[-1]) if every_split else [None]
        for split in splits:
            yield SplitPlan.build(norm, split)


def check_amhs(engine: Engine, plans) -> CheckResult:
    check = CheckResult("amhs-invariants")
    for plan in plans:
        def run(plan=plan):
            n = plan.n
            mhs = engine.assemble_amhs(plan)
            where = f"{plan.spec} split {(plan.d1, plan.d2)}"
            if mhs.piece(n + 1) != tate_twist(mhs.piece(n - 1), 1):
                check.fail(f"{where}: weight n+1 piece is not the twist of weight n-1")
            betti = engine.diamond(plan.spec).betti(n)
            if mhs.total != betti:
                check.fail(f"{where}: total {mhs.total} vs b_{n} = {betti}")
            if any(not dims.is_symmetric() for _, dims in mhs.pieces):
                check.fail(f"{where}: asymmetric piece")
            if graded_F_dims(mhs) != _by_p(engine.diamond(plan.spec).degree(n), n):
                check.fail(f"{where}: Gr_F dims differ from smooth fiber")
        _guard(check, plan.spec, run)
    return check


def check_high_degree(engine: Engine, plans) -> CheckResult:
    check = CheckResult("high-degree")
    for plan in plans:
        def run(plan=plan):
            report = engine.high_degree_check(plan)
            check.failures.extend(f"{report.subject}: {m}" for m in report.mismatches)
        _guard(check, plan.spec, run)
    return check


def check_union_euler(engine: Engine, plans) -> CheckResult:
    check = CheckResult("union-euler")
    for plan in plans:
        def run(plan=plan):
            v2_tilde = blowup_correction(engine.diamond(plan.v2), engine.sub_diamond(plan.i3))
            report = union_euler_check(
                engine.diamond(plan.v1), v2_tilde, engine.diamond(plan.i2), engine.diamond(plan.spec)
            )
            check.failures.extend(f"{plan.spec}: {m}" for m in report.mismatches)
        _guard(check, plan.spec, run)
    return check


def check_plane_curve_genus(engine: Engine, max_degree: int) -> CheckResult:
    """g(d) = (d-1)(d-2)/2 and g(d1 + d2) = g(d1) + g(d2) + d1 d2 - 1."""
    check = CheckResult("plane-curve-genus")
    plane = ProjectiveSpace(2)

    def genus(d: int) -> int:
        return engine.diamond(CISpec(plane, (d,))).h(1, 0)

    for d in range(1, max_degree + 1):
        def run(d=d):
            g = genus(d)
            if g != (d - 1) * (d - 2) // 2:
                check.fail(f"degree {d}: genus {g} != (d-1)(d-2)/2 = {(d - 1) * (d - 2) // 2}")
            for d1, d2 in all_splits(d) if d >= 2 else ():
                if g != genus(d1) + genus(d2) + d1 * d2 - 1:
                    check.fail(f"degree {d} = {d1}+{d2}: g(d) != g(d1)+g(d2)+d1*d2-1")
        _guard(check, f"plane curve of degree {d}", run)
    return check


def run_verification(
    max_ambient_dim: int = 6,
    max_degree: int = 10,
    engine: Engine | None = None,
) -> list[CheckResult]:
    if max_ambient_dim < 1 or max_degree < 1:
        raise ValueError("ranges must be positive")
    engine = engine or Engine()
    hypers = list(hypersurface_specs(max_ambient_dim, max_degree))
    cis = list(ci_specs(max_ambient_dim, max_degree))
    plans = list(plans_for(hypers, every_split=True)) + list(plans_for(cis, every_split=False))
    return [
        check_oracle_self(),
        check_plane_curve_genus(engine, max_degree),
        check_hypersurface_oracle(engine, hypers),
        check_ci_oracle(engine, cis),
        check_split_independence(engine, hypers),
        check_amhs(engine, plans),
        check_high_degree(engine, plans),
        check_union_euler(engine, plans),
    ]
