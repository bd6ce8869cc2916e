"""Bennett flips and assembly of the scissor linkage.

The flip turns one factorization (t-h1)(t-h2) of a quadratic motion into
the other one, (t-k1)(t-k2).  Chaining flips along the factor list of CH
with a seed joint m0 produces a ladder of four-bar cells whose moving link
performs the motion CH; each cell is certified mobile (and classified)
before the linkage is accepted.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .algebra import (
    DualQuaternion,
    PlueckerLine,
    Quaternion,
    RotationQuaternion,
    Vec3,
    axis,
    conjugate_by,
    frac,
    is_rotation_quaternion,
    minpol,
    vcross,
    vdot,
    vec3,
    vscale,
    vsub,
    vzero,
)
from .errors import (
    FlipUndefined,
    InvalidDegreeParity,
    NotRotation,
    SearchExhausted,
    UserM0Invalid,
)
from .motion import Factorization, FrameTransform
from .quatpoly import QPoly

Pair = Tuple[RotationQuaternion, RotationQuaternion]


def bflip(h1, h2) -> Pair:
    """Bennett flip: the unique other factorization of (t-h1)(t-h2).

    k2 = -(conj(h1)-h2)^-1 (h1 h2 - h1 conj(h1)), k1 = h1 + h2 - k2, so
    that (t-h1)(t-h2) = (t-k1)(t-k2) exactly.
    """
    h1 = h1.value if isinstance(h1, RotationQuaternion) else h1
    h2 = h2.value if isinstance(h2, RotationQuaternion) else h2
    diff = h1.conjugate() - h2
    if diff.is_zero():
        raise FlipUndefined("conj(h1) = h2")
    if diff.primal.is_zero():
        raise FlipUndefined("conj(h1) - h2 is not invertible")
    k2 = -(diff.inverse() * (h1 * h2 - h1 * h1.conjugate()))
    k1 = h1 + h2 - k2
    try:
        return RotationQuaternion.wrap(k1), RotationQuaternion.wrap(k2)
    except NotRotation as exc:
        raise FlipUndefined(f"flip result is not a rotation pair: {exc}") from exc


class CellKind(str, Enum):
    BENNETT = "Bennett"
    PLANAR_ANTIPARALLELOGRAM = "PlanarAntiparallelogram"
    SPHERICAL = "Spherical"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class FourBarReport:
    """Mobility verdict and type of the four-bar produced by one flip."""

    kind: CellKind
    one_dof: bool
    vectors_dependent: bool
    equal_minpols: bool
    axes_parallel: bool
    axes_intersecting: bool


def _sixvec(h: DualQuaternion) -> Tuple[Fraction, ...]:
    d = h - h.conjugate()
    return d.primal.vector() + d.dual.vector()


def _dependent(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return all(a[i] * b[j] == a[j] * b[i]
               for i, j in itertools.combinations(range(len(a)), 2))


def fourbar_check(h1, h2) -> FourBarReport:
    """Classify the four-bar with axes of h1, h2 and their flip.

    One degree of freedom needs independent vector parts h - conj(h) and
    distinct minimal polynomials; a mobile cell is then planar (parallel
    axes), spherical (intersecting axes) or a Bennett four-bar.
    """
    v1 = h1.value if isinstance(h1, RotationQuaternion) else h1
    v2 = h2.value if isinstance(h2, RotationQuaternion) else h2
    dependent = _dependent(_sixvec(v1), _sixvec(v2))
    equal_min = minpol(v1) == minpol(v2)
    if dependent or equal_min:
        return FourBarReport(CellKind.DEGENERATE, False, dependent, equal_min,
                             False, False)
    a1, a2 = axis(v1), axis(v2)
    parallel = a1.is_parallel_to(a2)
    intersecting = a1.intersects(a2)
    if parallel:
        kind = CellKind.PLANAR_ANTIPARALLELOGRAM
    elif intersecting:
        kind = CellKind.SPHERICAL
    else:
        kind = CellKind.BENNETT
    return FourBarReport(kind, True, False, False, parallel, intersecting)


# --- m0 selection -----------------------------------------------------------

@dataclass(frozen=True)
class Generic:
    """Every cell must be a Bennett four-bar (no spurious components)."""


@dataclass(frozen=True)
class Spherical:
    """All joint axes pass through the origin; m0 has zero dual part."""


@dataclass(frozen=True)
class Planar:
    """All axes parallel to the common direction of the h-axes."""


@dataclass(frozen=True)
class UserSupplied:
    m0: DualQuaternion


Mode = "Generic | Spherical | Planar | UserSupplied"


def run_recursion(hs: Sequence[RotationQuaternion],
                  m0: RotationQuaternion) -> Tuple[List[RotationQuaternion],
                                                   List[RotationQuaternion]]:
    """(m_l, k_l) = bflip(h_l, m_(l-1)) for l = 1..n."""
    ms = [m0]
    ks: List[RotationQuaternion] = []
    for h in hs:
        m_next, k_next = bflip(h, ms[-1])
        ms.append(m_next)
        ks.append(k_next)
    return ms, ks


def _cell_kind_required(mode) -> Optional[CellKind]:
    if isinstance(mode, Generic):
        return CellKind.BENNETT
    if isinstance(mode, Spherical):
        return CellKind.SPHERICAL
    if isinstance(mode, Planar):
        return CellKind.PLANAR_ANTIPARALLELOGRAM
    return None


def _validate_m0(hs: Sequence[RotationQuaternion], m0: RotationQuaternion,
                 required: Optional[CellKind]) -> None:
    """Run the recursion and check every cell; raises UserM0Invalid with the
    1-based index of the first failing cell."""
    m_prev = m0
    for i, h in enumerate(hs, start=1):
        report = fourbar_check(h, m_prev)
        if not report.one_dof:
            reason = ("dependent vector parts" if report.vectors_dependent
                      else "minpol clash")
            raise UserM0Invalid(f"cell {i}: {reason}", cell=i)
        if required is not None and report.kind is not required:
            raise UserM0Invalid(
                f"cell {i}: kind {report.kind.value}, need {required.value}",
                cell=i)
        try:
            m_prev, _ = bflip(h, m_prev)
        except FlipUndefined as exc:
            raise UserM0Invalid(f"cell {i}: {exc}", cell=i) from exc


def common_axis_point(hs: Sequence[RotationQuaternion]) -> Optional[Vec3]:
    """A point on every axis, if one exists."""
    axes = [h.axis() for h in hs]
    if len(axes) == 1:
        return axes[0].point_on_line()
    for a, b in itertools.combinations(axes, 2):
        if not a.is_parallel_to(b):
            p = a.intersection_point(b)
            if p is None:
                return None
            if all(ax.contains_point(p) for ax in axes):
                return p
            return None
    return None


def common_axis_direction(hs: Sequence[RotationQuaternion]) -> Optional[Vec3]:
    """The shared axis direction, if all axes are parallel."""
    axes = [h.axis() for h in hs]
    first = axes[0]
    if all(first.is_parallel_to(a) for a in axes[1:]):
        return first.direction
    return None


_BASE_VECTORS: Tuple[Vec3, ...] = (
    vec3(1, 1, 1), vec3(1, 2, 0), vec3(0, 1, 2), vec3(2, 0, 1),
    vec3(1, 1, 0), vec3(0, 1, 1), vec3(1, 0, 1),
    vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1), vec3(1, 2, 3),
)
_SCALES = (Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3),
           Fraction(1), Fraction(4), Fraction(1, 4), Fraction(5), Fraction(2, 3))
_MOMENT_SEEDS: Tuple[Vec3, ...] = (
    vec3(0, 0, 0), vec3(0, 1, -1), vec3(1, 0, -1), vec3(1, -1, 0),
    vec3(2, 1, 0), vec3(0, 2, 1),
)


def _perp_part(w: Vec3, v: Vec3) -> Vec3:
    s = vdot(w, v) / vdot(v, v)
    return vsub(w, vscale(s, v))


def _rotation_candidate(v: Vec3, w: Vec3) -> Optional[RotationQuaternion]:
    if vzero(v):
        return None
    h = DualQuaternion(Quaternion.from_vector(v), Quaternion.from_vector(w))
    if not is_rotation_quaternion(h):
        return None
    return RotationQuaternion(h)


def _candidate_m0s(mode, seed: int, budget: int) -> Iterator[RotationQuaternion]:
    """Deterministic low-height enumeration, then a seeded random tail."""
    spherical = isinstance(mode, Spherical)
    count = 0
    for scale in _SCALES:
        for base in _BASE_VECTORS:
            v = vscale(scale, base)
            moments: Sequence[Vec3] = ((vec3(0, 0, 0),) if spherical
                                       else _MOMENT_SEEDS)
            for w0 in moments:
                cand = _rotation_candidate(v, _perp_part(w0, v))
                if cand is not None:
                    yield cand
                    count += 1
                    if count >= budget:
                        return
    rng = random.Random(seed)
    for _ in range(budget):
        v = vec3(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
        if vzero(v):
            continue
        w0 = (vec3(0, 0, 0) if spherical
              else vec3(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)))
        cand = _rotation_candidate(v, _perp_part(w0, v))
        if cand is not None:
            yield cand


def _planar_candidates(direction: Vec3, seed: int,
                       budget: int) -> Iterator[RotationQuaternion]:
    count = 0
    for scale in _SCALES:
        v = vscale(scale, direction)
        for w0 in _MOMENT_SEEDS:
            cand = _rotation_candidate(v, _perp_part(w0, v))
            if cand is not None:
                yield cand
                count += 1
                if count >= budget:
                    return
    rng = random.Random(seed)
    for _ in range(budget):
        num, den = rng.randint(1, 9), rng.randint(1, 9)
        v = vscale(Fraction(num, den), direction)
        w0 = vec3(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
        cand = _rotation_candidate(v, _perp_part(w0, v))
        if cand is not None:
            yield cand


def choose_m0(hs: Sequence[RotationQuaternion], mode, seed: int = 0,
              budget: int = 400) -> RotationQuaternion:
    """Pick (or validate) the seed joint of the scissor linkage.

    A good m0 exists outside finitely many proper subvarieties; candidates
    are validated by running the full recursion and checking every cell.
    """
    if not hs:
        raise ValueError("need at least one rotation quaternion")
    required = _cell_kind_required(mode)
    if isinstance(mode, UserSupplied):
        m0 = RotationQuaternion.wrap(mode.m0)
        _validate_m0(hs, m0, required=None)
        return m0
    if isinstance(mode, Planar):
        direction = common_axis_direction(hs)
        if direction is None:
            raise SearchExhausted("h-axes share no common direction")
        candidates = _planar_candidates(direction, seed, budget)
    else:
        if isinstance(mode, Spherical) and any(
                not h.value.dual.is_zero() for h in hs):
            raise SearchExhausted(
                "spherical mode needs h-axes through the origin; "
                "recentre the factorization first")
        candidates = _candidate_m0s(mode, seed, budget)
    for cand in candidates:
        try:
            _validate_m0(hs, cand, required)
        except UserM0Invalid:
            continue
        return cand
    raise SearchExhausted(f"no valid m0 within budget {budget}")


def recentre_factorization(fz: Factorization, u: Vec3) -> Factorization:
    """Conjugate every factor and the cofactor by the translation u.

    Moves the whole construction into coordinates shifted by u; with u
    chosen as minus a common point of the axes, all h-axes pass through
    the origin.
    """
    tau = DualQuaternion.translator(u)
    factors = tuple(RotationQuaternion(conjugate_by(tau, h.value))
                    for h in fz.factors)
    cof = QPoly([conjugate_by(tau, c) for c in fz.cofactor.coeffs])
    return Factorization(factors, cof)


# --- linkage ----------------------------------------------------------------

@dataclass(frozen=True)
class Joint:
    label: str
    rotation: RotationQuaternion
    axis_ref: PlueckerLine
    links: Tuple[str, str]


@dataclass(frozen=True)
class Link:
    label: str
    joints: Tuple[str, ...]


@dataclass(frozen=True)
class Linkage:
    """Scissor linkage: bottom links b0..bn joined by h-joints, top links
    t0..tn joined by k-joints, verticals m0..mn; b0 fixed, bn moving.

    Coordinates of axes are the chain frame: the normalized curve frame,
    possibly recentred by the vector `recenter` (spherical mode).  The
    tracer point recenter (chain frame) draws the curve; drawn_point is its
    position in original coordinates at the reference configuration.
    """

    n: int
    h: Tuple[RotationQuaternion, ...]
    k: Tuple[RotationQuaternion, ...]
    m: Tuple[RotationQuaternion, ...]
    links: Tuple[Link, ...]
    joints: Tuple[Joint, ...]
    frame: FrameTransform
    recenter: Vec3
    drawn_point: Vec3

    def chain_product(self) -> QPoly:
        acc = QPoly.one()
        for h in self.h:
            acc = acc * QPoly.linear(h.value)
        return acc

    def tracer(self) -> Vec3:
        """Point of the moving link, in chain coordinates, drawing the curve."""
        return self.recenter

    def to_original(self, p_chain: Vec3) -> Vec3:
        return self.frame.unapply_point(vsub(p_chain, self.recenter))

    def joint_by_label(self, label: str) -> Joint:
        for j in self.joints:
            if j.label == label:
                return j
        raise KeyError(label)

    def cell_identity(self, i: int) -> Tuple[QPoly, QPoly]:
        """Both sides of (t-h_i)(t-m_(i-1)) = (t-m_i)(t-k_i), i 1-based."""
        lhs = QPoly.linear(self.h[i - 1].value) * QPoly.linear(self.m[i - 1].value)
        rhs = QPoly.linear(self.m[i].value) * QPoly.linear(self.k[i - 1].value)
        return lhs, rhs

    def cell_reports(self) -> List[FourBarReport]:
        return [fourbar_check(self.h[i], self.m[i]) for i in range(self.n)]

    def link_count(self) -> int:
        return len(self.links)

    def joint_count(self) -> int:
        return len(self.joints)


def synthesize(factors: Factorization, m0: RotationQuaternion,
               frame: FrameTransform,
               recenter: Vec3 = (Fraction(0), Fraction(0), Fraction(0))) -> Linkage:
    """Assemble the scissor linkage for the factor list, verifying every
    cell's loop-closure identity exactly.

    A single linear factor degenerates to one revolute joint (2 links,
    1 joint); no flips are needed.
    """
    hs = factors.factors
    n = len(hs)
    drawn = frame.unapply_point(vec3(0, 0, 0))
    if n == 1:
        joints = (Joint("h1", hs[0], hs[0].axis(), ("b0", "b1")),)
        links = (Link("b0", ("h1",)), Link("b1", ("h1",)))
        return Linkage(1, tuple(hs), (), (), links, joints, frame,
                       recenter, drawn)
    ms, ks = run_recursion(hs, m0)
    joints: List[Joint] = []
    for i, h in enumerate(hs, start=1):
        joints.append(Joint(f"h{i}", h, h.axis(), (f"b{i-1}", f"b{i}")))
    for i, kq in enumerate(ks, start=1):
        joints.append(Joint(f"k{i}", kq, kq.axis(), (f"t{i-1}", f"t{i}")))
    for i, mq in enumerate(ms):
        joints.append(Joint(f"m{i}", mq, mq.axis(), (f"b{i}", f"t{i}")))
    links: List[Link] = []
    for i in range(n + 1):
        incident = [f"m{i}"]
        if i > 0:
            incident.insert(0, f"h{i}")
        if i < n:
            incident.append(f"h{i+1}")
        links.append(Link(f"b{i}", tuple(incident)))
    for i in range(n + 1):
        incident = [f"m{i}"]
        if i > 0:
            incident.insert(0, f"k{i}")
        if i < n:
            incident.append(f"k{i+1}")
        links.append(Link(f"t{i}", tuple(incident)))
    linkage = Linkage(n, tuple(hs), tuple(ks), tuple(ms), tuple(links),
                      tuple(joints), frame, recenter, drawn)
    for i in range(1, n + 1):
        lhs, rhs = linkage.cell_identity(i)
        assert lhs == rhs, f"loop closure fails at cell {i}"
    assert linkage.link_count() == 2 * (n + 1)
    assert linkage.joint_count() == 3 * n + 1
    return linkage


def count_bounds(d: int, c: int) -> Tuple[int, int]:
    """Worst-case link and joint counts for degree d, circularity c:
    (3d - 4c + 2, (9/2)d - 6c + 1)."""
    if d % 2 != 0 or not 0 <= 2 * c <= d:
        raise InvalidDegreeParity(f"need even d and 0 <= 2c <= d, got ({d}, {c})")
    return 3 * d - 4 * c + 2, 9 * d // 2 - 6 * c + 1
