"""Ambient varieties, complete-intersection specs, memo keys and point counts.

An ambient is either projective space ``P^N`` or a user-supplied polarized
variety described by its tower of generic linear sections
``sections[r] = V_1^r`` for ``r = 0 .. dim`` (``sections[0]`` is the ambient
itself, ``sections[dim]`` is a finite set of ``degree`` points).

Degree-1 hypersurfaces are never recursed on: they shift the tower.
"""

from __future__ import annotations

import math
import operator
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .errors import ConsistencyError, DimensionError, SpecError
from .hodge import BigradedDims, HodgeDiamond


@lru_cache(maxsize=None)
def projective_space_diamond(N: int) -> HodgeDiamond:
    """h^{p,p} = 1 for 0 <= p <= N."""
    N = operator.index(N)
    if N < 0:
        raise DimensionError(f"projective space of dimension {N}")
    return HodgeDiamond(N, {(p, p): 1 for p in range(N + 1)})


@dataclass(frozen=True)
class ProjectiveSpace:
    N: int

    def __post_init__(self):
        if operator.index(self.N) < 0:
            raise SpecError(f"P^{self.N} is not a projective space")

    @property
    def dim(self) -> int:
        return self.N

    @property
    def id(self) -> str:
        return f"P{self.N}"

    @property
    def root(self) -> str:
        return self.id

    @property
    def offset(self) -> int:
        return 0

    def section(self, r: int) -> HodgeDiamond:
        if not 0 <= r <= self.N:
            raise DimensionError(f"linear section V_1^{r} of P^{self.N}")
        return projective_space_diamond(self.N - r)

    def shifted(self, s: int) -> ProjectiveSpace:
        if not 0 <= s <= self.N:
            raise DimensionError(f"cannot cut P^{self.N} by {s} hyperplanes")
        return self if s == 0 else ProjectiveSpace(self.N - s)

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class CustomAmbient:
    """A polarized ambient given by its linear-section tower.

    ``offset`` counts how many hyperplane sections have already been folded in;
    ``root`` names the original ambient so that memo keys stay canonical.
    """

    root: str
    dim: int
    sections: tuple[HodgeDiamond, ...]
    declared_degree: int | None = None
    offset: int = 0
    root_top: HodgeDiamond | None = None  # sections[0] of the root, kept after shifting

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(self.sections))
        if operator.index(self.dim) < (1 if self.offset == 0 else 0):
            raise SpecError(f"custom ambient dimension must be >= 1, got {self.dim}")

    @property
    def id(self) -> str:
        return self.root if self.offset == 0 else f"{self.root}+{self.offset}"

    def section(self, r: int) -> HodgeDiamond:
        if not 0 <= r <= self.dim or r >= len(self.sections):
            raise DimensionError(f"linear section V_1^{r} of {self.id} (dim {self.dim})")
        return self.sections[r]

    def shifted(self, s: int) -> CustomAmbient | ProjectiveSpace:
        if not 0 <= s <= self.dim:
            raise DimensionError(f"cannot cut {self.id} by {s} hyperplanes")
        if s == 0:
            return self
        return CustomAmbient(
            self.root, self.dim - s, self.sections[s:], self.declared_degree, self.offset + s,
            self.root_top if self.root_top is not None else self.sections[0],
        )

    @property
    def degree(self) -> int:
        return self.sections[-1].h(0, 0)


AmbientSpec = Union[ProjectiveSpace, CustomAmbient]


def tower_section(ambient: AmbientSpec, r: int) -> HodgeDiamond:
    """Hodge diamond of ``V_1^r``, the intersection of ``r`` generic hyperplanes."""
    return ambient.section(r)


def ambient_degree(ambient: AmbientSpec) -> int:
    return ambient.degree


def restriction_table(ambient: AmbientSpec, m: int) -> BigradedDims:
    """Image of ``H^m`` of the root ambient in an ``m``-dimensional complete intersection.

    Restriction is injective below the root's dimension (Lefschetz), so this is
    the root's own degree-``m`` table; for projective space, one class when ``m``
    is even.
    """
    if isinstance(ambient, ProjectiveSpace):
        return BigradedDims({(m // 2, m // 2): 1}) if m % 2 == 0 else BigradedDims()
    top = ambient.root_top if ambient.root_top is not None else ambient.sections[0]
    return top.degree(m)


@dataclass(frozen=True)
class CISpec:
    """Complete intersection of hypersurfaces of the given degrees in ``ambient``."""

    ambient: AmbientSpec
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        degrees = tuple(operator.index(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if any(d < 1 for d in degrees):
            raise SpecError(f"degrees must be positive, got {degrees}")
        if len(degrees) > self.ambient.dim:
            raise SpecError(
                f"{len(degrees)} hypersurfaces in {self.ambient.id} (dim {self.ambient.dim}): "
                "intersection would be empty"
            )

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.degrees)

    def normalized(self) -> CISpec:
        """Fold degree-1 factors into the tower and sort the rest."""
        ones = sum(1 for d in self.degrees if d == 1)
        rest = tuple(sorted(d for d in self.degrees if d > 1))
        return CISpec(self.ambient.shifted(ones), rest)

    def key(self) -> MemoKey:
        norm = self.normalized()
        return MemoKey(norm.ambient.root, norm.ambient.offset, norm.degrees)

    def label(self) -> str:
        return f"{self.ambient.id}{list(self.degrees)}"

    def __str__(self) -> str:
        return f"CI({self.ambient.id}, {list(self.degrees)})"


@dataclass(frozen=True, order=True)
class MemoKey:
    ambient_id: str
    shift: int
    degrees: tuple[int, ...]

    def __str__(self) -> str:
        where = self.ambient_id if self.shift == 0 else f"{self.ambient_id}+{self.shift}"
        return f"{where}{list(self.degrees)}"


@dataclass
class MemoStore:
    """Key -> diamond cache; writes are atomic per key and must be idempotent."""

    _entries: dict[MemoKey, HodgeDiamond] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def get(self, key: MemoKey) -> HodgeDiamond | None:
        return self._entries.get(key)

    def put(self, key: MemoKey, diamond: HodgeDiamond) -> HodgeDiamond:
        with self._lock:
            old = self._entries.setdefault(key, diamond)
        if old != diamond:
            raise ConsistencyError(f"memo entry {key} recomputed with a different value")
        return old

    def __contains__(self, key: MemoKey) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def point_count(spec: CISpec) -> int:
    """Number of points of a zero-dimensional complete intersection (Bezout)."""
    if spec.dim != 0:
        raise DimensionError(f"{spec} has dimension {spec.dim}, not 0")
    return spec.ambient.degree * math.prod(spec.degrees)


@dataclass(frozen=True)
class Violation:
    kind: str  # symmetry | duality | chain | lefschetz | degree | connected | support
    section: int | None
    message: str

    def __str__(self) -> str:
        where = "" if self.section is None else f"sections[{self.section}]: "
        return f"[{self.kind}] {where}{self.message}"


def validate_custom_spec(ambient: CustomAmbient) -> list[Violation]:
    """Check every tower invariant; the result is empty iff the ambient is usable."""
    out: list[Violation] = []
    m = ambient.dim
    secs = ambient.sections
    if len(secs) != m + 1:
        out.append(Violation("chain", None, f"expected {m + 1} sections, got {len(secs)}"))
    for r, sec in enumerate(secs):
        if sec.dim != m - r:
            out.append(Violation("chain", r, f"dimension {sec.dim}, expected {m - r}"))
        n = sec.dim
        asym = sorted({min((p, q), (q, p)) for (p, q) in sec.numbers if sec.h(p, q) != sec.h(q, p)})
        if asym:
            out.append(Violation("symmetry", r, f"h^{{p,q}} != h^{{q,p}} at {asym}"))
        nondual = sorted(
            {min((p, q), (n - p, n - q)) for (p, q) in sec.numbers if sec.h(p, q) != sec.h(n - p, n - q)}
        )
        if nondual:
            out.append(Violation("duality", r, f"h^{{p,q}} != h^{{n-p,n-q}} at {nondual}"))
        if n > 0 and sec.h(0, 0) != 1:
            out.append(Violation("connected", r, f"h^{{0,0}} = {sec.h(0, 0)}, expected 1"))
    for r in range(len(secs) - 1):
        lower = secs[r + 1]
        for k in range(max(lower.dim, 0)):
            if secs[r].degree(k) != lower.degree(k):
                out.append(Violation("lefschetz", r + 1, f"degree {k} differs from sections[{r}]"))
    if secs:
        last = secs[-1]
        if last.dim == 0:
            if last.h(0, 0) < 1:
                out.append(Violation("degree", len(secs) - 1, "zero-dimensional section is empty"))
            if ambient.declared_degree is not None and ambient.declared_degree != last.h(0, 0):
                out.append(
                    Violation(
                        "degree",
                        len(secs) - 1,
                        f"declared degree {ambient.declared_degree} != h^{{0,0}} = {last.h(0, 0)}",
                    )
                )
    return out
