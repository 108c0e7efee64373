"""Flat-limit verification for one-parameter families of subscheme ideals.

A family scenario is an ideal over Q[x, y, z, t] (t the deformation
parameter), an optional ambient restriction, and the expected flat limit at
t = 0.  The limit is computed as ((I + (t^2)) : t) + (t), intersected with
the t-free subring — first-order data in t is what survives, which is the
right notion for families given over k[t]/(t^2).

The built-in suite runs eight scenarios: six families loaded from the
packaged manifest (S1-S6, each with scenario-specific construction checks:
intersection displays, restriction displays, decompositions of the limit and
plane sections, plus reruns of S1/S2 with a second curve choice), a pencil
membership check (S7), and the embedded-point constructions (S8).  Custom
manifests run the generic family pipeline only.

Every check is an exact ideal computation; a report never raises on a
mismatch — it records the failed step.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .polyring import (
    Ideal,
    Polynomial,
    PolynomialRing,
    eliminate,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    member,
)

__all__ = [
    "COORD_RING",
    "FamilyScenario",
    "SPACE_RING",
    "VerificationReport",
    "VerificationStep",
    "embedded_point_ideal",
    "limit_ideal",
    "load_paper_scenarios",
    "parse_manifest",
    "restrict_to_plane",
    "run_family_scenario",
    "run_paper_suite",
]

COORD_RING = PolynomialRing(("x", "y", "z", "t"))
SPACE_RING = PolynomialRing(("x", "y", "z"))

_RESERVED_TAG = "w"


# ---------------------------------------------------------------------------
# scenario and report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyScenario:
    """One flat family: ideal, optional ambient restriction, expected limit."""

    name: str
    ring: PolynomialRing
    family: Ideal
    restriction: tuple[Polynomial, ...]
    expected_limit: Ideal
    anchor: str = ""


@dataclass(frozen=True)
class VerificationStep:
    description: str
    computed: tuple[str, ...]
    expected: tuple[str, ...]
    passed: bool

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "computed": list(self.computed),
            "expected": list(self.expected),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    scenario: str
    anchor: str
    steps: tuple[VerificationStep, ...]

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "anchor": self.anchor,
            "pass": self.passed,
            "steps": [step.to_json() for step in self.steps],
        }


def _basis_strings(I: Ideal) -> tuple[str, ...]:
    return tuple(str(g) for g in I.groebner_basis())

def _ideal_step(description: str, computed: Ideal, expected: Ideal) -> VerificationStep:
    return VerificationStep(
        description=description,
        computed=_basis_strings(computed),
        expected=_basis_strings(expected),
        passed=ideal_equal(computed, expected),
    )

def _member_step(description: str, p: Polynomial, I: Ideal,
                 expect_member: bool) -> VerificationStep:
    verdict = member(p, I)
    word = lambda m: "member" if m else "not member"
    return VerificationStep(
        description=description,
        computed=(word(verdict),),
        expected=(word(expect_member),),
        passed=verdict == expect_member,
    )


# ---------------------------------------------------------------------------
# core operations
# ---------------------------------------------------------------------------

def limit_ideal(family: Ideal, parameter: str = "t") -> Ideal:
    """Flat limit at parameter = 0, first order: ((I + (p^2)) : p) + (p),
    then eliminate the parameter.  Returns an ideal of the smaller ring."""
    ring = family.ring
    if parameter not in ring.index:
        raise ValueError(f"family ring {ring!r} has no variable {parameter!r}")
    p = ring.variable(parameter)
    saturated = ideal_colon(ideal_sum(family, Ideal(ring, (p * p,))), p)
    return eliminate(ideal_sum(saturated, Ideal(ring, (p,))), {parameter})


def restrict_to_plane(I: Ideal, plane: Polynomial) -> Ideal:
    """The scheme intersection with a hyperplane: I + (plane)."""
    return ideal_sum(I, Ideal(I.ring, (plane,)))


def embedded_point_ideal(q: Polynomial, a: int | Fraction, b: int | Fraction) -> Ideal:
    """Ideal of a plane curve {q = 0, z = 0} with an embedded point at the
    origin in the normal direction (a : b): m*(q, z) + (b*q - a*z).

    The curve must pass through the origin and (a, b) must not both vanish.
    """
    ring = q.ring
    for name in ("x", "y", "z"):
        if name not in ring.index:
            raise ValueError(f"embedded point construction needs {name!r} in {ring!r}")
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise ValueError("the normal direction (a : b) must be a point of P^1")
    origin = {v: Fraction(0) for v in ring.variables}
    if q.evaluate(origin) != 0:
        raise ValueError(f"the curve {q} does not pass through the origin")
    x, y, z = ring.variable("x"), ring.variable("y"), ring.variable("z")
    max_ideal = Ideal(ring, (x, y, z))
    support = Ideal(ring, (q, z))
    return ideal_sum(ideal_product(max_ideal, support),
                     Ideal(ring, (b * q - a * z,)))


# ---------------------------------------------------------------------------
# manifest parsing
# ---------------------------------------------------------------------------

_REQUIRED_FIELDS = ("name", "vars", "family", "expect")
_ALL_FIELDS = ("name", "vars", "family", "restrict", "expect", "anchor")


def parse_manifest(text: str) -> tuple[FamilyScenario, ...]:
    """Parse the plain-text scenario manifest (see the packaged data file for
    the format).  Raises ValueError on any malformed record."""
    scenarios: list[FamilyScenario] = []
    record: dict[str, str] = {}

    def flush() -> None:
        if not record:
            return
        missing = [f for f in _REQUIRED_FIELDS if f not in record]
        if missing:
            raise ValueError(
                f"manifest record is missing fields {missing}: {record.get('name', '?')}"
            )
        variables = tuple(v.strip() for v in record["vars"].split(","))
        if _RESERVED_TAG in variables:
            raise ValueError(f"variable {_RESERVED_TAG!r} is reserved")
        if "t" not in variables:
            raise ValueError(
                f"scenario {record['name']!r} needs the parameter t among its variables"
            )
        ring = PolynomialRing(variables)
        fiber_ring = PolynomialRing(tuple(v for v in variables if v != "t"))
        family = Ideal(ring, ring.parse_list(record["family"]))
        restriction = (
            ring.parse_list(record["restrict"]) if record.get("restrict") else ()
        )
        expected = Ideal(fiber_ring, fiber_ring.parse_list(record["expect"]))
        scenarios.append(FamilyScenario(
            name=record["name"],
            ring=ring,
            family=family,
            restriction=restriction,
            expected_limit=expected,
            anchor=record.get("anchor", ""),
        ))
        record.clear()

    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush()
            continue
        if "=" not in line:
            raise ValueError(f"malformed manifest line: {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _ALL_FIELDS:
            raise ValueError(f"unknown manifest field {key!r}")
        if key in record:
            raise ValueError(f"duplicate manifest field {key!r}")
        record[key] = value.strip()
    flush()
    names = [sc.name for sc in scenarios]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate scenario names in manifest: {names}")
    return tuple(scenarios)


def load_paper_scenarios() -> tuple[FamilyScenario, ...]:
    """The six packaged family scenarios."""
    text = (
        resources.files("wallcross").joinpath("data/paper_scenarios.txt").read_text()
    )
    return parse_manifest(text)


# ---------------------------------------------------------------------------
# generic pipeline and the built-in suite
# ---------------------------------------------------------------------------

def _restricted(sc: FamilyScenario) -> Ideal:
    out = sc.family
    if sc.restriction:
        out = ideal_sum(out, Ideal(sc.ring, sc.restriction))
    return out


def run_family_scenario(sc: FamilyScenario) -> VerificationReport:
    """The generic pipeline: restrict the family, take the flat limit at
    t = 0, compare with the expected ideal."""
    step = _ideal_step(
        "flat limit of the restricted family at t = 0 equals the expected ideal",
        limit_ideal(_restricted(sc)),
        sc.expected_limit,
    )
    return VerificationReport(scenario=sc.name, anchor=sc.anchor, steps=(step,))


def _limit_step(sc: FamilyScenario) -> VerificationStep:
    return _ideal_step(
        "flat limit of the restricted family at t = 0 equals the expected ideal",
        limit_ideal(_restricted(sc)),
        sc.expected_limit,
    )


def _variant_rerun_step(
    sc: FamilyScenario, components: tuple[Ideal, Ideal], q_text: str
) -> VerificationStep:
    """Re-run the pipeline with the family rebuilt structurally (intersection
    of the two component ideals) for a different curve q."""
    family = ideal_intersect(*components)
    rebuilt = FamilyScenario(
        name=sc.name, ring=sc.ring, family=family,
        restriction=sc.restriction, expected_limit=sc.expected_limit,
        anchor=sc.anchor,
    )
    fiber = sc.expected_limit.ring
    expected = Ideal(fiber, fiber.parse_list(f"{q_text}, z"))
    return _ideal_step(
        f"rerun with the curve q = {q_text}: flat limit is still the curve",
        limit_ideal(_restricted(rebuilt)),
        expected,
    )


def _report_s1(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    q = "(x^2 + y^2 - 1)"
    conic = Ideal(R, R.parse_list(f"{q}, z"))
    point = Ideal(R, R.parse_list("x, y, z - t"))
    steps = [
        _ideal_step(
            "the displayed generators equal the intersection of the conic "
            "with the moving point",
            ideal_intersect(conic, point),
            sc.family,
        ),
        _ideal_step(
            "restriction to the plane z = 0 matches the displayed form",
            _restricted(sc),
            Ideal(R, R.parse_list(f"x*{q}, y*{q}, t*{q}, z")),
        ),
        _limit_step(sc),
    ]
    q2 = "x + y + x^2"
    steps.append(_variant_rerun_step(
        sc,
        (Ideal(R, R.parse_list(f"{q2}, z")), point),
        q2,
    ))
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s2(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    q = "(y - x^2)"
    curve = Ideal(R, R.parse_list(f"{q}, z"))
    fat_point = Ideal(R, R.parse_list("x, y^2, z - t*y"))
    steps = [
        _ideal_step(
            "the displayed generators equal the intersection of the curve "
            "with the moving doubled point",
            ideal_intersect(curve, fat_point),
            sc.family,
        ),
        _ideal_step(
            "restriction to the plane z = 0 matches the displayed form",
            _restricted(sc),
            Ideal(R, R.parse_list(f"x*{q}, y*{q}, t*{q}, z")),
        ),
        _limit_step(sc),
    ]
    q2 = "y + x*y"
    steps.append(_variant_rerun_step(
        sc,
        (Ideal(R, R.parse_list(f"{q2}, z")), fat_point),
        q2,
    ))
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s3(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    support = Ideal(R, R.parse_list("x*y, z"))
    max_ideal = Ideal(R, R.parse_list("x, y, z"))
    built = ideal_sum(
        ideal_product(support, max_ideal),
        Ideal(R, R.parse_list("z - t*x*y")),
    )
    steps = [
        _ideal_step(
            "support times the maximal ideal plus the deformed relation "
            "equals the displayed family",
            built,
            sc.family,
        ),
        _ideal_step(
            "restriction to the plane z = 0 matches the displayed form",
            _restricted(sc),
            Ideal(R, R.parse_list("x*y^2, x^2*y, z, t*x*y")),
        ),
        _limit_step(sc),
    ]
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s4(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    support = Ideal(R, R.parse_list("z, y^2"))
    max_ideal = Ideal(R, R.parse_list("x, y, z"))
    built = ideal_sum(
        ideal_product(support, max_ideal),
        Ideal(R, R.parse_list("z - t*y^2")),
    )
    steps = [
        _ideal_step(
            "support times the maximal ideal plus the deformed relation "
            "equals the displayed family",
            built,
            sc.family,
        ),
        _ideal_step(
            "restriction to the plane z = 0 matches the displayed form",
            _restricted(sc),
            Ideal(R, R.parse_list("y^3, x*y^2, z, t*y^2")),
        ),
        _limit_step(sc),
    ]
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s5(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    line = Ideal(R, R.parse_list("y, z"))
    moving_point = Ideal(R, R.parse_list("x, z - t*(y - 1)"))
    steps = [
        _ideal_step(
            "the displayed generators equal the intersection of the line "
            "with the moving point",
            ideal_intersect(line, moving_point),
            sc.family,
        ),
        _ideal_step(
            "restriction to the doubled plane matches the displayed form",
            _restricted(sc),
            Ideal(R, R.parse_list(
                "x*z, y*z, z^2, x*y, t*y*(y - 1), t*z")),
        ),
        _limit_step(sc),
    ]
    fiber = sc.expected_limit.ring
    limit = limit_ideal(_restricted(sc))
    steps.append(_ideal_step(
        "plane section of the limit is the line plus the collision point",
        restrict_to_plane(limit, fiber.variable("z")),
        ideal_intersect(
            Ideal(fiber, fiber.parse_list("y, z")),
            Ideal(fiber, fiber.parse_list("x, y - 1, z")),
        ),
    ))
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s6(sc: FamilyScenario) -> VerificationReport:
    R = sc.ring
    fiber = sc.expected_limit.ring
    line = Ideal(R, R.parse_list("y, z"))
    moving_line = Ideal(R, R.parse_list("t*x - y, t*y + z - t^2"))
    double_structure = Ideal(R, R.parse_list("x*z, y*z, z^2, y^2"))
    t_poly = R.variable("t")
    t_squared = Ideal(R, (t_poly * t_poly,))
    steps = [
        _ideal_step(
            "the double structure at t = 0 is the plane double line cut by "
            "the squared maximal ideal",
            ideal_intersect(
                Ideal(R, R.parse_list("z, y^2")),
                ideal_product(
                    Ideal(R, R.parse_list("x, y, z")),
                    Ideal(R, R.parse_list("x, y, z")),
                ),
            ),
            double_structure,
        ),
        _ideal_step(
            "the displayed generators equal the intersection of the fixed "
            "line with the moving line",
            ideal_intersect(line, moving_line),
            sc.family,
        ),
        _ideal_step(
            "setting t = 0 in the family generators recovers the double "
            "structure",
            Ideal(R, tuple(g.substitute({"t": 0}) for g in sc.family.generators)),
            double_structure,
        ),
        _ideal_step(
            "restriction to the doubled plane matches the displayed "
            "generators modulo t^2",
            ideal_sum(_restricted(sc), t_squared),
            ideal_sum(
                Ideal(R, R.parse_list(
                    "x*z, y*z, z^2, (t*x - y)*y, t*y*(x - 1)")),
                t_squared,
            ),
        ),
        _limit_step(sc),
    ]
    limit = limit_ideal(_restricted(sc))
    decomposition = ideal_intersect(
        ideal_intersect(
            Ideal(fiber, fiber.parse_list("y, z")),
            Ideal(fiber, fiber.parse_list("x - 1, y^2, z")),
        ),
        Ideal(fiber, fiber.parse_list("x, y, z^2")),
    )
    steps.append(_ideal_step(
        "the limit decomposes as the line, a planar double point, and a "
        "spatial double point",
        decomposition,
        limit,
    ))
    steps.append(_ideal_step(
        "plane section of the limit drops the spatial double point",
        restrict_to_plane(limit, fiber.variable("z")),
        ideal_intersect(
            Ideal(fiber, fiber.parse_list("y, z")),
            Ideal(fiber, fiber.parse_list("x - 1, y^2, z")),
        ),
    ))
    return VerificationReport(sc.name, sc.anchor, tuple(steps))


def _report_s7() -> VerificationReport:
    R = SPACE_RING
    base = ideal_product(
        Ideal(R, R.parse_list("x*y, z")),
        Ideal(R, R.parse_list("x, y, z")),
    )
    xy = R.parse("x*y")
    z = R.variable("z")
    steps = []
    for (cs, ct), expected in (((1, 0), True), ((0, 1), False), ((1, 1), False)):
        pencil = ideal_sum(base, Ideal(R, (cs * xy + ct * z,)))
        steps.append(_member_step(
            f"x*y lies in the pencil member with (s, t) = ({cs}, {ct})",
            xy, pencil, expected,
        ))
    return VerificationReport(
        "S7",
        "which pencil members over the node keep the curve equation",
        tuple(steps),
    )


def _report_s8() -> VerificationReport:
    R = SPACE_RING
    m = Ideal(R, R.parse_list("x, y, z"))
    m_squared = ideal_product(m, m)
    node = R.parse("x*y")
    double = R.parse("y^2")
    cases = [
        (
            node, 1, 0,
            "embedded point over the node, direction tangent to the plane",
            Ideal(R, R.parse_list("x^2*y, x*y^2, z")),
            ideal_intersect(Ideal(R, R.parse_list("x*y, z")),
                            Ideal(R, R.parse_list("z, x^2, y^2"))),
        ),
        (
            node, 0, 1,
            "embedded point over the node, direction normal to the plane",
            Ideal(R, R.parse_list("x*y, x*z, y*z, z^2")),
            ideal_intersect(Ideal(R, R.parse_list("x*y, z")), m_squared),
        ),
        (
            double, 0, 1,
            "embedded point on the double line, direction normal to the plane",
            Ideal(R, R.parse_list("y^2, x*z, y*z, z^2")),
            ideal_intersect(Ideal(R, R.parse_list("y^2, z")), m_squared),
        ),
    ]
    steps = []
    for q, a, b, label, displayed, decomposition in cases:
        constructed = embedded_point_ideal(q, a, b)
        steps.append(_ideal_step(
            f"{label}: construction matches the displayed ideal",
            constructed, displayed,
        ))
        steps.append(_ideal_step(
            f"{label}: displayed ideal matches the scheme intersection",
            displayed, decomposition,
        ))
    return VerificationReport(
        "S8",
        "embedded point ideals over a node and over a double line",
        tuple(steps),
    )


_FAMILY_REPORTS = {
    "S1": _report_s1,
    "S2": _report_s2,
    "S3": _report_s3,
    "S4": _report_s4,
    "S5": _report_s5,
    "S6": _report_s6,
}


def run_paper_suite() -> tuple[VerificationReport, ...]:
    """Run the eight built-in scenarios, in order S1..S8."""
    by_name = {sc.name: sc for sc in load_paper_scenarios()}
    missing = [name for name in _FAMILY_REPORTS if name not in by_name]
    if missing:
        raise ValueError(f"packaged manifest is missing scenarios: {missing}")
    reports = [
        _FAMILY_REPORTS[name](by_name[name]) for name in sorted(_FAMILY_REPORTS)
    ]
    reports.append(_report_s7())
    reports.append(_report_s8())
    return tuple(reports)
