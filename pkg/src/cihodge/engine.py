"""Hodge diamonds of complete intersections by degeneration to a normal crossing.

A hypersurface ``V_d`` of dimension ``n`` in an ambient ``Y`` degenerates to
``V_{d1} + V_{d2}`` with ``d = d1 + d2``. With ``I2 = V_{d1} . V_{d2}`` and
``I3 = V_d . V_{d1} . V_{d2}``, the limit mixed Hodge structure on
``H^n(V_d)`` has graded pieces

    weight n-1:  H^{n-1}_prim(I2)
    weight n:    H^n_prim(V_{d1}) + H^n_prim(V_{d2}) + H^{n-2}(I3)(-1)
    weight n+1:  H^{n-1}_prim(I2)(-1)

and its Hodge-filtration graded dimensions are the Hodge numbers of ``V_d``.
All other degrees of ``V_d`` follow from the Lefschetz hyperplane theorem and
Poincare duality. Every subproblem is strictly smaller in
``(dimension, total degree)``, so the recursion bottoms out at linear sections
of the ambient tower and at finite point sets.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .errors import ConsistencyError, DimensionError, SpecError, SymmetryError
from .hodge import (
    EMPTY,
    EMPTY_DIMS,
    BigradedDims,
    EmptyVariety,
    HodgeDiamond,
    WeightGradedMHS,
    tate_twist,
)
from .variety import (
    AmbientSpec,
    CISpec,
    CustomAmbient,
    MemoKey,
    MemoStore,
    ProjectiveSpace,
    point_count,
    restriction_table,
    tower_section,
    validate_custom_spec,
)

__all__ = [
    "CheckReport",
    "Engine",
    "MiddleTerms",
    "SplitPlan",
    "TraceNode",
    "assemble_amhs",
    "choose_split",
    "compute_diamond",
    "high_degree_check",
    "lefschetz_fill",
    "middle_hodge",
    "prim_above",
    "prim_middle",
    "tower_from_complete_intersection",
]


def choose_split(d: int) -> tuple[int, int]:
    """Canonical split ``d = 1 + (d - 1)``."""
    d = operator.index(d)
    if d < 2:
        raise ValueError(f"cannot split degree {d}")
    return 1, d - 1


def _order(spec: CISpec) -> tuple[int, int]:
    return spec.dim, sum(spec.degrees)


@dataclass(frozen=True)
class SplitPlan:
    """The degeneration ``V_d => V_{d1} + V_{d2}`` of the largest-degree factor of ``spec``."""

    spec: CISpec
    d: int
    d1: int
    d2: int
    v1: CISpec
    v2: CISpec
    i2: CISpec
    i3: CISpec | None  # None when the triple intersection is empty (curve case)

    @classmethod
    def build(cls, spec: CISpec, split: tuple[int, int] | None = None) -> SplitPlan:
        spec = spec.normalized()
        if not spec.degrees:
            raise SpecError(f"{spec} is a linear section; nothing to split")
        if spec.dim < 1:
            raise DimensionError(f"{spec} has dimension {spec.dim}; the middle formula needs n >= 1")
        *rest, d = spec.degrees
        rest = tuple(rest)
        d1, d2 = choose_split(d) if split is None else sorted(split)
        if d1 < 1 or d1 + d2 != d:
            raise SpecError(f"split {split} does not decompose degree {d}")
        a = spec.ambient
        i3 = CISpec(a, rest + (d, d1, d2)) if spec.dim >= 2 else None
        plan = cls(
            spec, d, d1, d2,
            v1=CISpec(a, rest + (d1,)),
            v2=CISpec(a, rest + (d2,)),
            i2=CISpec(a, rest + (d1, d2)),
            i3=i3,
        )
        top = _order(spec)
        for sub in plan.subproblems():
            if not _order(sub) < top:
                raise ConsistencyError(f"subproblem {sub} does not precede {spec}")
        return plan

    @property
    def n(self) -> int:
        return self.spec.dim

    def subproblems(self) -> list[CISpec]:
        subs = [self.v1, self.v2, self.i2]
        if self.i3 is not None:
            subs.append(self.i3)
        return subs


@dataclass(frozen=True)
class MiddleTerms:
    """The five contributions to ``h^{p, n-p}(V_d)``, each placed at ``(p, n-p)``."""

    n: int
    i2_low: BigradedDims  # H^{n-1}_prim(I2), weight n-1
    v1: BigradedDims  # H^n_prim(V_{d1})
    v2: BigradedDims  # H^n_prim(V_{d2})
    i3: BigradedDims  # H^{n-2}(I3)(-1)
    i2_high: BigradedDims  # H^{n-1}_prim(I2)(-1), weight n+1

    def as_tuple(self) -> tuple[BigradedDims, ...]:
        return self.i2_low, self.v1, self.v2, self.i3, self.i2_high

    def at(self, p: int, q: int) -> tuple[int, int, int, int, int]:
        return tuple(t[(p, q)] for t in self.as_tuple())

    def total(self) -> BigradedDims:
        out = EMPTY_DIMS
        for t in self.as_tuple():
            out = out + t
        return out


@dataclass(frozen=True)
class TraceNode:
    key: MemoKey
    label: str
    dim: int
    rule: str  # linear | points | middle
    split: tuple[int, int] | None = None
    children: tuple[MemoKey, ...] = ()


@dataclass
class CheckReport:
    name: str
    subject: str
    mismatches: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def prim_above(diamond: HodgeDiamond, k: int) -> BigradedDims:
    """Kernel of the Lefschetz operator on ``H^k`` for ``k >= dim``.

    Above the middle the operator ``H^k -> H^{k+2}`` is onto, so the kernel
    has dimension ``h^{p,q}(k) - h^{p+1,q+1}(k+2)``.
    """
    if k < diamond.dim:
        raise DimensionError(f"prim_above needs k >= {diamond.dim}, got {k}")
    return diamond.degree(k) - tate_twist(diamond.degree(k + 2), -1)


def prim_below(diamond: HodgeDiamond, k: int) -> BigradedDims:
    """Cokernel of the Lefschetz operator ``H^{k-2} -> H^k`` for ``k <= dim``."""
    if k > diamond.dim:
        raise DimensionError(f"prim_below needs k <= {diamond.dim}, got {k}")
    return diamond.degree(k) - tate_twist(diamond.degree(k - 2), 1)


def _ambient_table(ambient: AmbientSpec, k: int) -> BigradedDims:
    """``H^k`` of the ambient, valid for ``k < ambient.dim`` (Lefschetz range of any section)."""
    return tower_section(ambient, 0).degree(k)


def lefschetz_fill(ambient: AmbientSpec, n: int, middle: BigradedDims) -> HodgeDiamond:
    """Diamond of an ``n``-dimensional complete intersection in ``ambient`` from its middle table."""
    if not middle.is_symmetric():
        raise SymmetryError(f"middle table is not conjugation symmetric: {middle!r}")
    if middle.weights() - {n}:
        raise DimensionError(f"middle table has entries off p+q={n}")
    if n >= ambient.dim:
        raise DimensionError(f"a proper section of {ambient.id} has dimension < {ambient.dim}")
    tables = {n: middle}
    for k in range(n):
        low = _ambient_table(ambient, k)
        tables[k] = low
        tables[2 * n - k] = BigradedDims({(n - p, n - q): v for (p, q), v in low.items()})
    return HodgeDiamond.from_degrees(n, tables)


class Engine:
    """Memoized recursion over complete intersections.

    ``reduced_points=False`` switches zero-dimensional primitive cohomology to
    the unreduced convention; it exists only to demonstrate that the checks
    catch the wrong convention.
    """

    def __init__(self, memo: MemoStore | None = None, *, reduced_points: bool = True):
        self.memo = memo if memo is not None else MemoStore()
        self.reduced_points = reduced_points
        self.nodes: dict[MemoKey, TraceNode] = {}
        self._validated: set[int] = set()

    def _check_ambient(self, ambient: AmbientSpec) -> None:
        if isinstance(ambient, CustomAmbient) and id(ambient) not in self._validated:
            problems = validate_custom_spec(ambient)
            if problems:
                raise SpecError(f"invalid ambient {ambient.id}: " + "; ".join(map(str, problems)))
            self._validated.add(id(ambient))

    def diamond(self, spec: CISpec, split: tuple[int, int] | None = None) -> HodgeDiamond:
        """Full Hodge diamond of ``spec``; ``split`` overrides the root degeneration only."""
        self._check_ambient(spec.ambient)
        spec = spec.normalized()
        key = spec.key()
        if split is None:
            hit = self.memo.get(key)
            if hit is not None:
                return hit

        a = spec.ambient
        if not spec.degrees:
            result = tower_section(a, 0)
            node = TraceNode(key, spec.label(), spec.dim, "linear")
        elif spec.dim == 0:
            result = HodgeDiamond(0, {(0, 0): point_count(spec)})
            node = TraceNode(key, spec.label(), 0, "points")
        else:
            plan = SplitPlan.build(spec, split)
            middle = self.middle_hodge(plan)
            result = lefschetz_fill(a, spec.dim, middle)
            node = TraceNode(
                key, spec.label(), spec.dim, "middle", (plan.d1, plan.d2),
                tuple(s.key() for s in plan.subproblems()),
            )
        problems = result.violations()
        if problems:
            raise ConsistencyError(f"{spec}: " + "; ".join(problems))
        if split is None:
            result = self.memo.put(key, result)
            self.nodes.setdefault(key, node)
        return result

    def sub_diamond(self, spec: CISpec | None) -> HodgeDiamond | EmptyVariety:
        return EMPTY if spec is None else self.diamond(spec)

    def prim_middle(self, spec: CISpec) -> BigradedDims:
        """Middle cohomology modulo the image of the ambient (cokernel of restriction)."""
        spec = spec.normalized()
        m = spec.dim
        table = self.diamond(spec).degree(m)
        if not spec.degrees and spec.ambient.offset == 0:
            return EMPTY_DIMS  # the root ambient itself
        if m == 0 and not self.reduced_points:
            return table
        try:
            return table - restriction_table(spec.ambient, m)
        except ConsistencyError as exc:
            raise ConsistencyError(f"primitive part of {spec} is negative: {exc}") from None

    def middle_terms(self, plan: SplitPlan) -> MiddleTerms:
        n = plan.n
        p_i2 = self.prim_middle(plan.i2)
        p_v1 = self.prim_middle(plan.v1)
        p_v2 = self.prim_middle(plan.v2)
        h_i3 = self.sub_diamond(plan.i3).degree(n - 2)

        def place(dims: BigradedDims) -> BigradedDims:
            # a class of Hodge type (p, *) feeds Gr_F^p, i.e. h^{p, n-p}
            out: dict[tuple[int, int], int] = {}
            for (p, _q), v in dims.items():
                if 0 <= p <= n:
                    out[(p, n - p)] = out.get((p, n - p), 0) + v
                else:
                    raise ConsistencyError(f"Hodge type {(p, _q)} outside [0, {n}]")
            return BigradedDims(out)

        return MiddleTerms(
            n,
            i2_low=place(p_i2),
            v1=place(p_v1),
            v2=place(p_v2),
            i3=place(tate_twist(h_i3, 1)),
            i2_high=place(tate_twist(p_i2, 1)),
        )

    def middle_hodge(self, plan: SplitPlan) -> BigradedDims:
        middle = self.middle_terms(plan).total()
        if not middle.is_symmetric():
            raise SymmetryError(f"{plan.spec} split {(plan.d1, plan.d2)}: asymmetric middle {middle!r}")
        return middle

    def assemble_amhs(self, plan: SplitPlan) -> WeightGradedMHS:
        n = plan.n
        p_i2 = self.prim_middle(plan.i2)
        centre = (
            self.prim_middle(plan.v1)
            + self.prim_middle(plan.v2)
            + tate_twist(self.sub_diamond(plan.i3).degree(n - 2), 1)
        )
        return WeightGradedMHS(n, ((n - 1, p_i2), (n, centre), (n + 1, tate_twist(p_i2, 1))))

    def high_degree_check(self, plan: SplitPlan) -> CheckReport:
        """Compare ``H^k(V_d)`` for ``k >= n+2`` with the short exact sequence
        ``0 -> ker L on H^{k-2}(I2) (-1) -> H^k(V_d) -> H^{k-2}(I3)(-1) -> 0``."""
        n = plan.n
        vd = self.diamond(plan.spec)
        i2 = self.diamond(plan.i2)
        i3 = self.sub_diamond(plan.i3)
        report = CheckReport("high-degree", f"{plan.spec} split {(plan.d1, plan.d2)}")
        for k in range(n + 2, 2 * n + 1):
            expected = tate_twist(prim_above(i2, k - 2), 1) + tate_twist(i3.degree(k - 2), 1)
            actual = vd.degree(k)
            report.details[k] = (actual.total, expected.total)
            if expected != actual:
                report.mismatches.append(f"H^{k}: computed {dict(actual)} vs sequence {dict(expected)}")
        return report

    def trace(self, spec: CISpec, split: tuple[int, int] | None = None) -> list[TraceNode]:
        """Nodes of the subproblem DAG reachable from ``spec``, root first."""
        self.diamond(spec)
        spec = spec.normalized()
        root = spec.key()
        if split is not None and spec.degrees and spec.dim >= 1:
            plan = SplitPlan.build(spec, split)
            self.diamond(spec, split)
            root_node = TraceNode(
                root, spec.label(), spec.dim, "middle", (plan.d1, plan.d2),
                tuple(s.key() for s in plan.subproblems()),
            )
        else:
            root_node = self.nodes[root]
        order = [root_node]
        seen = {root}
        stack = list(reversed(root_node.children))
        while stack:
            key = stack.pop()
            if key in seen:
                continue
            seen.add(key)
            node = self.nodes[key]
            order.append(node)
            stack.extend(reversed(node.children))
        return order


_default = Engine()


def _engine(memo: MemoStore | None) -> Engine:
    return _default if memo is None or memo is _default.memo else Engine(memo)


def compute_diamond(spec: CISpec, memo: MemoStore | None = None) -> HodgeDiamond:
    return _engine(memo).diamond(spec)


def prim_middle(spec: CISpec, memo: MemoStore | None = None) -> BigradedDims:
    return _engine(memo).prim_middle(spec)


def middle_hodge(spec: CISpec, split: tuple[int, int] | None = None, memo: MemoStore | None = None) -> BigradedDims:
    return _engine(memo).middle_hodge(SplitPlan.build(spec, split))


def assemble_amhs(spec: CISpec, split: tuple[int, int] | None = None, memo: MemoStore | None = None) -> WeightGradedMHS:
    return _engine(memo).assemble_amhs(SplitPlan.build(spec, split))


def high_degree_check(spec: CISpec, split: tuple[int, int] | None = None, memo: MemoStore | None = None) -> CheckReport:
    return _engine(memo).high_degree_check(SplitPlan.build(spec, split))


def trace_depth(nodes: list[TraceNode]) -> int:
    """Longest root-to-leaf path, counted in edges."""
    by_key = {node.key: node for node in nodes}
    depth: dict[MemoKey, int] = {}

    def visit(key: MemoKey) -> int:
        if key not in depth:
            kids = by_key[key].children if key in by_key else ()
            depth[key] = 1 + max(map(visit, kids)) if kids else 0
        return depth[key]

    root = nodes[0]
    return 1 + max(map(visit, root.children)) if root.children else 0


def genus_of_plane_curve(d: int, engine: Engine | None = None) -> int:
    eng = engine or _default
    return eng.diamond(CISpec(ProjectiveSpace(2), (d,))).h(1, 0)


def tower_from_complete_intersection(root: str, spec: CISpec, engine: Engine | None = None) -> CustomAmbient:
    """Custom ambient whose tower is ``spec`` cut by 0, 1, ..., dim hyperplanes."""
    eng = engine or _default
    sections = tuple(eng.diamond(CISpec(spec.ambient, spec.degrees + (1,) * r)) for r in range(spec.dim + 1))
    return CustomAmbient(root, spec.dim, sections, declared_degree=sections[-1].h(0, 0))
