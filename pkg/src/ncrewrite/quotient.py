"""The presented algebra on irreducible monomials.

For a confluent system the irreducible polynomials are canonical
representatives of the quotient by the two-sided ideal generated by the
rule differences, with multiplication "multiply, then fully reduce".
"""

from __future__ import annotations

from dataclasses import dataclass

from .ambiguity import ConfluenceReport, check_all, enumerate_inclusions, enumerate_overlaps
from .freealg import Polynomial, Word
from .order import OrderingSpec, check_compatibility
from .rewrite import ReductionSystem, is_irreducible, normal_form


class QuotientError(Exception):
    pass


class NotConfluentError(QuotientError):
    pass


@dataclass(frozen=True)
class QuotientRing:
    system: ReductionSystem
    spec: OrderingSpec
    report: ConfluenceReport

    @classmethod
    def build(cls, system: ReductionSystem, spec: OrderingSpec) -> "QuotientRing":
        report = check_all(system, spec)
        if not report.confluent:
            raise NotConfluentError("system is not confluent under this ordering")
        return cls(system, spec, report)

    def normal_form(self, a: Polynomial) -> Polynomial:
        return normal_form(a, self.system, self.spec).value

    def multiply(self, a: Polynomial, b: Polynomial) -> Polynomial:
        """Ring product of canonical representatives."""
        if not is_irreducible(a, self.system) or not is_irreducible(b, self.system):
            raise QuotientError("ring elements must be irreducible representatives")
        return self.normal_form(a * b)

    def ideal_member(self, a: Polynomial) -> bool:
        return self.normal_form(a).is_zero()

    def basis_words(self, max_degree: int) -> list[Word]:
        """Irreducible monomials of weighted degree <= max_degree, in
        ascending deglex order."""
        lhss = [r.lhs for r in self.system.rules]
        words = [w for w in self.system.alphabet.words_up_to_degree(max_degree)
                 if not any(w.contains(lhs) for lhs in lhss)]
        words.sort(key=self.spec.sort_key)
        return words


@dataclass(frozen=True)
class IndependenceVerdict:
    strict: bool
    witness: int | None  # index in S2 of a rule whose lhs S1 cannot reduce
    independent_rules: tuple[int, ...]  # populated when S2 has no ambiguities


def _word_irreducible(word: Word, lhss) -> bool:
    return not any(word.contains(lhs) for lhs in lhss)


def independence_check(s1: ReductionSystem, s2: ReductionSystem,
                       spec: OrderingSpec) -> IndependenceVerdict:
    """Certify strict inclusion of the ideal of s1 in that of s2.

    Requires the rules of s1 to be a subset of those of s2 and s2 to be
    compatible and confluent.  The certificate is a rule of s2 whose left
    side is irreducible with respect to s1.  When s2 has no ambiguities
    at all, every rule irreducible with respect to the remaining rules is
    additionally reported as independent of them.
    """
    for rule in s1.rules:
        if rule not in s2.rules:
            raise QuotientError("rules of the subsystem must occur in the full system")
    if not check_compatibility(s2, spec).compatible:
        raise QuotientError("full system must be compatible with the ordering")
    if not check_all(s2, spec).confluent:
        raise QuotientError("full system must be confluent")

    lhss1 = [r.lhs for r in s1.rules]
    witness = next(
        (i for i, r in enumerate(s2.rules) if _word_irreducible(r.lhs, lhss1)),
        None)

    independent: tuple[int, ...] = ()
    if not enumerate_overlaps(s2) and not enumerate_inclusions(s2):
        independent = tuple(
            i for i, r in enumerate(s2.rules)
            if _word_irreducible(r.lhs,
                                 [o.lhs for j, o in enumerate(s2.rules) if j != i]))
    return IndependenceVerdict(witness is not None, witness, independent)
