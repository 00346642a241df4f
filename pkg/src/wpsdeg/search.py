"""Exhaustive search for solutions of (n+1)^n * prod(a_i) = (sum(a_i))^n.

Well-formed solution tuples are the weighted projective spaces that can
degenerate from P^n.  The search is exact and complete up to a max-weight
bound, and ships with an independent unpruned oracle for cross-checking.

The fast enumeration leans on the structure of the equation.  Write
s = sum(a_i).  Then (n+1)^n divides s^n, which forces (n+1) | s prime by
prime, so s = (n+1) * m for an integer m, and the equation collapses to

    prod(a_i) = m^n,    sum(a_i) = (n+1) * m.

Every a_i therefore divides m^n.  For each m up to the bound we enumerate
ascending tuples of divisors of m^n with the prescribed sum and product;
the divisibility and sum/product window constraints cut the tree down to
almost nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .mutation import Classification, classify_solution
from .singular import isolated_rigid_points
from .weights import WeightTuple, is_well_formed, satisfies_degeneration_equation

# The unpruned oracle walks every ascending tuple; refuse anything that would
# take more than about bound^(n+1) ~ 1e9 loop steps.
ORACLE_ITERATION_CUTOFF = 10 ** 9


@dataclass(frozen=True)
class DegenerationSolution:
    """One well-formed solution tuple plus its computed annotations.

    classification is None for dimensions other than 3; the two mutation
    families are three-dimensional phenomena.  rigid is True when the space
    has an isolated quotient singularity in dimension >= 3 (a smoothability
    obstruction); always False in dimension < 3 where that criterion does
    not apply.
    """

    weights: WeightTuple
    classification: Classification | None
    rigid: bool

    @property
    def dim(self) -> int:
        return self.weights.dim


def is_degeneration_candidate(weights) -> bool:
    """Exact check of the degeneration equation for the given tuple."""
    return satisfies_degeneration_equation(weights)


def _factorize(m: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def _divisors_bounded(factors: dict[int, int], bound: int) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1) if d * p ** k <= bound]
    return sorted(divs)


def _raw_solutions(n: int, bound: int) -> list[tuple[int, ...]]:
    """All ascending (n+1)-tuples with entries <= bound satisfying the equation,
    well-formed or not."""
    out: list[tuple[int, ...]] = []
    slots_total = n + 1
    for m in range(1, bound + 1):
        target_prod = m ** n
        factors = {p: e * n for p, e in _factorize(m).items()}
        divs = _divisors_bounded(factors, bound)

        def extend(start: int, slots: int, sum_left: int, prod_left: int, acc: list[int]):
            if slots == 0:
                if sum_left == 0 and prod_left == 1:
                    out.append(tuple(acc))
                return
            for idx in range(start, len(divs)):
                a = divs[idx]
                # entries are ascending, so the remaining sum is at least slots * a
                if a * slots > sum_left:
                    break
                if prod_left % a:
                    continue
                rest = prod_left // a
                if rest > bound ** (slots - 1):
                    continue
                if slots > 1 and rest < a ** (slots - 1):
                    continue
                acc.append(a)
                extend(idx, slots - 1, sum_left - a, rest, acc)
                acc.pop()

        extend(0, slots_total, slots_total * m, target_prod, [])
    return sorted(set(out))


def enumerate_solutions(n: int, bound: int) -> list[DegenerationSolution]:
    """All well-formed solutions of dimension n with max weight <= bound.

    Returns canonical tuples sorted lexicographically, each annotated with
    its family classification (dimension 3 only) and rigidity flag.
    Raw solutions that are not well-formed are discarded, not normalized:
    normalization changes sum and product, so the normalized tuple would not
    satisfy the equation.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    solutions = []
    for raw in _raw_solutions(n, bound):
        w = WeightTuple(raw)
        if not is_well_formed(w):
            continue
        classification = classify_solution(w) if n == 3 else None
        rigid = bool(isolated_rigid_points(w)) if n >= 3 else False
        solutions.append(DegenerationSolution(w, classification, rigid))
    return solutions


def brute_force_oracle(n: int, bound: int) -> list[WeightTuple]:
    """Independent check: same tuples by plain nested iteration, no pruning.

    Visits every ascending (n+1)-tuple with entries in 1..bound and tests the
    equation on each, then filters well-formedness.  Only the partial sums and
    products are kept incrementally; nothing is skipped.  Refuses inputs where
    bound^(n+1) exceeds the iteration cutoff.
    """
    if n < 1 or bound < 1:
        raise ValueError("need n >= 1 and bound >= 1")
    if bound ** (n + 1) > ORACLE_ITERATION_CUTOFF:
        raise ValueError(
            f"oracle refuses: bound^(n+1) = {bound ** (n + 1)} exceeds "
            f"{ORACLE_ITERATION_CUTOFF} iterations"
        )
    coefficient = (n + 1) ** n
    hits: list[tuple[int, ...]] = []
    prefix = [0] * (n + 1)

    def walk(level: int, lowest: int, partial_sum: int, partial_prod: int):
        if level == n:
            for x in range(lowest, bound + 1):
                if coefficient * partial_prod * x == (partial_sum + x) ** n:
                    hits.append(tuple(prefix[:n]) + (x,))
            return
        for x in range(lowest, bound + 1):
            prefix[level] = x
            walk(level + 1, x, partial_sum + x, partial_prod * x)

    walk(0, 1, 0, 1)
    return [WeightTuple(t) for t in hits if is_well_formed(WeightTuple(t))]
