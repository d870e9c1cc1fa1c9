"""Numerical semigroups and their basic invariants.

A numerical semigroup is a cofinite additive submonoid of the nonnegative
integers, given by generators with gcd 1.  Everything here is exact integer
arithmetic: membership tables, Apery sets, pseudo-Frobenius numbers, type,
reduced type, and the maximal/minimal reduced-type classification.

``NumericalSemigroup`` is immutable after construction and safe to share
across threads; all operations are pure reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

# Membership tables are rejected beyond this many entries (guards against a
# runaway Frobenius number; sweeps in this package stay far below it).
TABLE_LIMIT = 1 << 40


class SemigroupError(ValueError):
    """Base class for invalid semigroup inputs."""


class EmptyGeneratorsError(SemigroupError):
    pass


class ZeroGeneratorError(SemigroupError):
    pass


class GcdNotOneError(SemigroupError):
    pass


class NotAMemberError(SemigroupError):
    pass


class InvalidParamError(SemigroupError):
    pass


class NotMinimalSequenceError(SemigroupError):
    """A sequence that must be a minimal generating set is not one."""


class TableLimitError(SemigroupError):
    """The membership table would exceed TABLE_LIMIT entries."""


class Extremality(Enum):
    """Reduced-type classification: s = type, s = 1, both (Gorenstein), or neither."""

    BOTH = "both"
    MAXIMAL_ONLY = "maximal"
    MINIMAL_ONLY = "minimal"
    NEITHER = "neither"

    @property
    def is_maximal(self) -> bool:
        return self in (Extremality.BOTH, Extremality.MAXIMAL_ONLY)

    @property
    def is_minimal(self) -> bool:
        return self in (Extremality.BOTH, Extremality.MINIMAL_ONLY)


@dataclass(frozen=True)
class PFProfile:
    """Pseudo-Frobenius data of one semigroup.

    ``pf`` is sorted ascending, so ``pf[-1]`` is the Frobenius number;
    ``pf_prime`` is ``pf`` without its maximum.  ``cm_type = len(pf)`` and
    ``1 <= reduced_type <= cm_type`` always hold.
    """

    pf: tuple[int, ...]
    pf_prime: tuple[int, ...]
    cm_type: int
    reduced_type: int
    extremality: Extremality


class NumericalSemigroup:
    """The numerical semigroup generated by ``gens``.

    Construction validates the input (nonempty, positive, gcd 1), finds the
    Frobenius number from the Apery set of the multiplicity, fills a
    membership table up to ``frobenius + multiplicity``, and reduces the
    generators to the unique minimal generating set.
    """

    def __init__(self, gens: Iterable[int]):
        supplied = tuple(int(g) for g in gens)
        if not supplied:
            raise EmptyGeneratorsError("generator list is empty")
        if any(g < 1 for g in supplied):
            raise ZeroGeneratorError(f"generators must be >= 1, got {min(supplied)}")
        unique = sorted(set(supplied))
        g = math.gcd(*unique)
        if g != 1:
            raise GcdNotOneError(f"gcd is not 1: gcd{tuple(unique)} = {g}")

        self.generators: tuple[int, ...] = supplied
        m = unique[0]
        apery = _apery_by_relaxation(unique, m)
        frob = max(apery) - m
        if frob + m + 1 > TABLE_LIMIT:
            raise TableLimitError(f"membership table would need {frob + m + 1} entries")

        self.multiplicity: int = m
        self.frobenius: int = frob
        # DP closure: member[x] iff x is a nonnegative combination of the generators.
        table = [False] * (frob + m + 1)
        table[0] = True
        for x in range(1, frob + m + 1):
            table[x] = any(x >= n and table[x - n] for n in unique)
        self.membership: tuple[bool, ...] = tuple(table)
        self.genus: int = sum(1 for x in range(frob + 1) if not table[x])
        self.minimal_generators: tuple[int, ...] = tuple(
            n for n in unique if not self._decomposable(n)
        )

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def contains(self, x: int) -> bool:
        """True iff ``x`` is in the semigroup (O(1); any integer accepted)."""
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return self.membership[x]

    __contains__ = contains

    def _decomposable(self, n: int) -> bool:
        # n = a + b with both parts nonzero members <=> n is not a minimal generator
        return any(
            self.contains(a) and self.contains(n - a)
            for a in range(self.multiplicity, n - self.multiplicity + 1)
        )

    def elements_up_to(self, bound: int) -> Iterator[int]:
        """Members of the semigroup in [0, bound], ascending."""
        return (x for x in range(bound + 1) if self.contains(x))

    def apery_set(self, n: int) -> list[int]:
        """Least member in each residue class mod ``n``, indexed by residue.

        ``n`` must be a nonzero member.  Entry 0 is 0, and
        ``max(apery_set(n)) - n`` equals the Frobenius number.
        """
        if n <= 0 or not self.contains(n):
            raise NotAMemberError(f"{n} is not a nonzero element of {self}")
        out: list[int | None] = [None] * n
        found = 0
        x = 0
        while found < n:  # every class has a member <= frobenius + n
            if self.contains(x):
                r = x % n
                if out[r] is None:
                    out[r] = x
                    found += 1
            x += 1
        return out  # type: ignore[return-value]

    def leq(self, a: int, b: int) -> bool:
        """The semigroup partial order: a <= b iff b - a is a member."""
        return self.contains(b - a)

    @cached_property
    def _pf(self) -> tuple[int, ...]:
        if self.frobenius == -1:
            # S = N: -1 is the unique pseudo-Frobenius number by convention
            # (it is also what the definitional scan over [-1, F] yields).
            return (-1,)
        apery = self.apery_set(self.multiplicity)
        maximal = [
            w
            for w in apery
            if not any(w2 != w and self.contains(w2 - w) for w2 in apery)
        ]
        return tuple(sorted(w - self.multiplicity for w in maximal))

    def pf_set(self) -> list[int]:
        """Pseudo-Frobenius numbers, ascending: maximal Apery elements minus the multiplicity."""
        return list(self._pf)

    def pf_profile(self) -> PFProfile:
        """PF set, type, reduced type, and extremality classification.

        The reduced type is counted directly off the membership table as
        ``|[F - m + 1, F] \\ S|``; the extremality verdict is derived from the
        min-PF / max-PF' threshold inequalities and cross-checked against the
        count (the two computations are equivalent and must agree).
        """
        pf = self._pf
        cm_type = len(pf)
        frob, m = self.frobenius, self.multiplicity
        low = frob - m + 1
        reduced = sum(1 for x in range(low, frob + 1) if not self.contains(x))
        maximal = pf[0] >= low
        minimal = cm_type == 1 or pf[-2] < low
        if maximal != (reduced == cm_type) or minimal != (reduced == 1):
            raise AssertionError(
                f"extremality paths disagree for {self}: "
                f"reduced={reduced} type={cm_type} pf={pf}"
            )
        if maximal and minimal:
            label = Extremality.BOTH
        elif maximal:
            label = Extremality.MAXIMAL_ONLY
        elif minimal:
            label = Extremality.MINIMAL_ONLY
        else:
            label = Extremality.NEITHER
        return PFProfile(
            pf=pf,
            pf_prime=pf[:-1],
            cm_type=cm_type,
            reduced_type=reduced,
            extremality=label,
        )

    def is_symmetric(self) -> bool:
        """True iff F - x is a member for every gap x; equivalent to type 1."""
        frob = self.frobenius
        return all(
            self.contains(frob - x) for x in range(frob + 1) if not self.contains(x)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self) -> int:
        return hash(self.minimal_generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup<{', '.join(map(str, self.minimal_generators))}>"


def _apery_by_relaxation(gens: list[int], m: int) -> list[int]:
    """Apery set of ``m`` by iterative relaxation over residue classes mod m.

    Shortest paths on the residue graph with the generators as edge weights;
    a full pass with no improvement means every class holds its least member.
    """
    steps = [g for g in gens if g % m != 0]
    ap: list[int | None] = [None] * m
    ap[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(m):
            base = ap[r]
            if base is None:
                continue
            for g in steps:
                v = base + g
                r2 = v % m
                cur = ap[r2]
                if cur is None or v < cur:
                    ap[r2] = v
                    changed = True
    # gcd 1 guarantees every residue class is reached
    return ap  # type: ignore[return-value]


def naturals() -> NumericalSemigroup:
    """The semigroup of all nonnegative integers (Frobenius -1, PF = {-1})."""
    return NumericalSemigroup([1])
