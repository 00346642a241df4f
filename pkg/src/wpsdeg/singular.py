"""Singular strata of weighted projective spaces and quotient-germ analysis.

A point of P(a_0, ..., a_n) with support S (the coordinates that are nonzero
there) is stabilized by mu_m for m = gcd(a_j : j in S), so the singular locus
is stratified by coordinate subspaces with m > 1.  Transverse to a stratum
the germ is the cyclic quotient 1/m(a_k mod m : k outside), which the
Reid-Tai criterion classifies as terminal, canonical or klt by the minimal
age of a group element.  Isolated singular points in ambient dimension >= 3
rigidify the whole space (no nontrivial deformations, hence no smoothing),
which is the one purely combinatorial smoothability obstruction computed
here.

Everything is exact integer arithmetic; ages are compared as integer sums
against the group order, never as floats, because the canonical/klt boundary
sits exactly at age 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from math import gcd

from .mutation import Classification, classify_solution
from .weights import WeightTuple, is_well_formed, satisfies_degeneration_equation


class Verdict(str, Enum):
    TERMINAL = "Terminal"
    STRICTLY_CANONICAL = "StrictlyCanonical"
    STRICTLY_KLT = "StrictlyKlt"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CyclicQuotient:
    """Germ 1/r(w_1, ..., w_k): mu_r acting with the given weight residues.

    Residues are stored reduced mod r, sorted, and must all be nonzero (a
    zero residue is a fixed coordinate direction, not transverse data).
    """

    order: int
    weights: tuple[int, ...]

    def __init__(self, order: int, weights):
        if order < 2:
            raise ValueError("group order must be at least 2")
        residues = tuple(sorted(w % order for w in weights))
        if not residues:
            raise ValueError("need at least one weight")
        if residues[0] == 0:
            raise ValueError(f"zero residue mod {order} in {tuple(weights)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "weights", residues)

    def notation(self) -> str:
        return f"1/{self.order}({','.join(str(w) for w in self.weights)})"

    def __str__(self):
        return self.notation()

    @cached_property
    def verdict(self) -> Verdict:
        return reid_tai_classify(self)


def reid_tai_classify(germ: CyclicQuotient) -> Verdict:
    """Classify a cyclic quotient germ by the minimal age of a group element.

    age(k) = sum_i ((k * w_i) mod r) / r for k = 1..r-1.  Comparisons are done
    on the integer numerator sum against r, so age exactly 1 (the canonical /
    klt boundary) is decided exactly.  Terminal: every age > 1.
    StrictlyCanonical: minimal age = 1.  StrictlyKlt: some age < 1.

    Elements acting as the identity (all residues 0) or as a quasi-reflection
    (all residues 0 except one) are rejected: such data does not describe an
    honest quotient singularity germ and cannot come from singular_strata on
    well-formed input.
    """
    r = germ.order
    min_numerator = None
    for k in range(1, r):
        residues = [(k * w) % r for w in germ.weights]
        nonzero = sum(1 for x in residues if x)
        if nonzero == 0:
            raise ValueError(f"{germ.notation()}: element {k} acts as the identity")
        if nonzero == 1:
            raise ValueError(f"{germ.notation()}: element {k} is a quasi-reflection")
        numerator = sum(residues)
        if min_numerator is None or numerator < min_numerator:
            min_numerator = numerator
    if min_numerator > r:
        return Verdict.TERMINAL
    if min_numerator == r:
        return Verdict.STRICTLY_CANONICAL
    return Verdict.STRICTLY_KLT


@dataclass(frozen=True)
class SingularStratum:
    """Closed singular stratum: the coordinate subspace spanned by `indices`.

    order is the stabilizer order m of a generic point; transverse is the
    quotient germ in the normal directions; maximal means the stratum is not
    contained in the closure of a larger singular stratum.
    """

    indices: tuple[int, ...]
    order: int
    transverse: CyclicQuotient
    maximal: bool

    @property
    def dimension(self) -> int:
        return len(self.indices) - 1

    @property
    def is_isolated_point(self) -> bool:
        return self.dimension == 0 and self.maximal


def singular_strata(weights) -> list[SingularStratum]:
    """All singular strata of a well-formed weighted projective space.

    Every nonempty proper index subset S with m = gcd(a_j : j in S) > 1
    determines a singular subspace; distinct subsets can determine the same
    closed stratum, namely when they share the saturation
    J = {j : m divides a_j}.  One stratum is emitted per saturation, with
    stabilizer order m = gcd over J and transverse germ
    1/m(a_k mod m : k not in J).  Saturating is also what guarantees every
    transverse residue is nonzero, which is asserted.

    Sorted by ascending stabilizer order, then indices.
    """
    w = WeightTuple(weights)
    if not is_well_formed(w):
        raise ValueError(f"{tuple(w)} is not well-formed; normalize first")
    count = len(w)
    saturations: dict[tuple[int, ...], int] = {}
    for size in range(1, count):
        for subset in combinations(range(count), size):
            m = gcd(*(w[j] for j in subset)) if len(subset) > 1 else w[subset[0]]
            if m <= 1:
                continue
            saturated = tuple(j for j in range(count) if w[j] % m == 0)
            # gcd over the saturation equals m again: it divides gcd(subset) = m
            # and m divides every member.
            saturations[saturated] = m

    strata = []
    for indices, m in saturations.items():
        residues = tuple(w[k] % m for k in range(count) if k not in indices)
        assert all(res != 0 for res in residues), (
            f"zero transverse residue on {tuple(w)} at {indices}: "
            "saturation or well-formedness is broken"
        )
        maximal = not any(
            set(indices) < set(other) for other in saturations if other != indices
        )
        strata.append(SingularStratum(indices, m, CyclicQuotient(m, residues), maximal))
    strata.sort(key=lambda s: (s.order, s.indices))
    return strata


def isolated_rigid_points(weights) -> list[SingularStratum]:
    """Isolated cyclic quotient points: rigidity obstructions in dim >= 3.

    A dimension-0 stratum is isolated when no larger singular stratum passes
    through it, equivalently when its weight is coprime to every other
    weight.  In ambient dimension >= 3 such a point makes the whole space
    rigid, hence not smoothable.  The dimension hypothesis is mandatory,
    so lower-dimensional input is an error.
    """
    w = WeightTuple(weights)
    if w.dim < 3:
        raise ValueError("rigidity of quotient points needs ambient dimension >= 3")
    points = [s for s in singular_strata(w) if s.is_isolated_point]
    for stratum in points:
        i = stratum.indices[0]
        assert all(gcd(w[i], w[j]) == 1 for j in range(len(w)) if j != i)
    return points


@dataclass(frozen=True)
class SmoothabilityReport:
    weights: WeightTuple
    strata: tuple[SingularStratum, ...]
    rigid_points: tuple[SingularStratum, ...]
    classification: Classification | None
    verdict_text: str


def smoothability_report(weights) -> SmoothabilityReport:
    """Assemble strata, rigid points and family membership into one verdict.

    Verdicts: membership in a mutation family means smoothable; a rigid
    point means not smoothable; otherwise unknown (this tool encodes no
    further obstructions).  Family membership and rigidity are mutually
    exclusive on sound inputs, and the conflict is checked rather than
    assumed.  Family classification exists only in dimension 3; other
    dimensions report it as None.
    """
    w = WeightTuple(weights)
    if not is_well_formed(w):
        raise ValueError(f"{tuple(w)} is not well-formed; normalize first")
    if not satisfies_degeneration_equation(w):
        raise ValueError(f"{tuple(w)} is not a degeneration solution")
    strata = tuple(singular_strata(w))
    rigid = tuple(isolated_rigid_points(w)) if w.dim >= 3 else ()
    classification = classify_solution(w) if w.dim == 3 else None

    if classification in (Classification.P2_TYPE, Classification.SUM_TYPE,
                          Classification.BOTH) and rigid:
        raise RuntimeError(
            f"{tuple(w)} classifies as {classification} yet has rigid points "
            f"{[s.transverse.notation() for s in rigid]}; mutation families are "
            "smoothable, so one of the two computations is wrong"
        )

    if classification is Classification.P2_TYPE:
        verdict = "smoothable (ℙ²-type family)"
    elif classification is Classification.SUM_TYPE:
        verdict = "smoothable (sum-type family)"
    elif classification is Classification.BOTH:
        verdict = "smoothable (ℙ²-type and sum-type families)"
    elif rigid:
        verdict = "not smoothable (rigid point)"
    else:
        verdict = "unknown"
    return SmoothabilityReport(w, strata, rigid, classification, verdict)
