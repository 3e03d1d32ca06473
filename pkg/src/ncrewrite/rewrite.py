"""Reduction machinery: single reductions, normal forms, and an exhaustive oracle.

A single reduction at site (A, sigma, B) subtracts
lambda * A * (W_sigma - f_sigma) * B, where lambda is the coefficient of
A * W_sigma * B in the polynomial.  Under an order compatible with the
system, the deterministic strategy in normal_form always terminates.
all_normal_forms ignores the order and explores every reduction sequence,
which is the ground truth for reduction-uniqueness at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import Coefficient, FieldDescriptor
from .freealg import Alphabet, Occurrence, Polynomial, Word
from .order import OrderingSpec, check_compatibility


class RewriteError(Exception):
    pass


class InvalidSystemError(RewriteError):
    pass


class IncompatibleSystemError(RewriteError):
    """Raised when normalization is requested without a compatible order."""


class BudgetExceededError(RewriteError):
    def __init__(self, visited: int):
        super().__init__(f"state budget exhausted after {visited} polynomials")
        self.visited = visited


DEFAULT_ORACLE_BUDGET = 10_000


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Polynomial


@dataclass(frozen=True)
class ReductionSystem:
    alphabet: Alphabet
    field: FieldDescriptor
    rules: tuple[Rule, ...]

    def __post_init__(self):
        for rule in self.rules:
            if rule.lhs.alphabet != self.alphabet or rule.rhs.alphabet != self.alphabet:
                raise InvalidSystemError("rule over a different alphabet")
            if rule.rhs.field != self.field:
                raise InvalidSystemError("rule over a different field")

    def replace_rules(self, rules) -> "ReductionSystem":
        return ReductionSystem(self.alphabet, self.field, tuple(rules))


@dataclass(frozen=True)
class Diagnostic:
    fatal: bool
    rule: int
    message: str


def validate_system(system: ReductionSystem) -> list[Diagnostic]:
    """Fatal on empty left sides; warnings for inclusion-ambiguity sources."""
    out = []
    for i, rule in enumerate(system.rules):
        if rule.lhs.is_one():
            out.append(Diagnostic(True, i, "empty rule left side"))
    lhss = [r.lhs for r in system.rules]
    for i, w in enumerate(lhss):
        for j in range(i):
            if lhss[j] == w:
                out.append(Diagnostic(False, i, f"duplicate left side with rule {j}"))
        for j, v in enumerate(lhss):
            if j != i and w != v and not v.is_one() and w.contains(v):
                out.append(Diagnostic(
                    False, i, f"left side properly contains left side of rule {j}"))
    return out


def require_valid(system: ReductionSystem):
    fatal = [d for d in validate_system(system) if d.fatal]
    if fatal:
        raise InvalidSystemError("; ".join(d.message for d in fatal))


def apply_reduction(a: Polynomial, system: ReductionSystem, occ: Occurrence) -> Polynomial:
    """a - lambda * A (W_sigma - f_sigma) B; the identity when lambda = 0."""
    rule = system.rules[occ.rule]
    target = occ.prefix * rule.lhs * occ.suffix
    lam = a.coefficient(target)
    if not lam:
        return a
    replaced = rule.rhs.sandwich(occ.prefix, occ.suffix)
    return a - Polynomial.monomial(target, lam) + replaced.scale(lam)


def reducible_sites(a: Polynomial, system: ReductionSystem) -> list[Occurrence]:
    """All sites acting nontrivially on a, in a deterministic order."""
    sites = []
    for word in sorted(a.words(), key=lambda w: (len(w), w.letters)):
        for idx, rule in enumerate(system.rules):
            for prefix, suffix in word.occurrences_of(rule.lhs):
                sites.append(Occurrence(prefix, idx, suffix))
    return sites


def is_irreducible(a: Polynomial, system: ReductionSystem) -> bool:
    return not reducible_sites(a, system)


@dataclass(frozen=True)
class ReductionStep:
    occurrence: Occurrence
    coefficient: Coefficient  # the lambda removed; nonzero by construction


@dataclass(frozen=True)
class NormalFormResult:
    value: Polynomial
    trace: tuple[ReductionStep, ...]


def normal_form(a: Polynomial, system: ReductionSystem,
                spec: OrderingSpec) -> NormalFormResult:
    """Deterministic full reduction.

    Strategy: reduce the deglex-largest reducible monomial, at its leftmost
    site, with the lowest-indexed rule there.  Refuses systems the order is
    not compatible with, since termination is then unguaranteed.
    """
    require_valid(system)
    report = check_compatibility(system, spec)
    if not report.compatible:
        raise IncompatibleSystemError(
            f"system not compatible with the ordering: {report.violations}")
    trace = []
    current = a
    while True:
        best = None  # (word key desc handled by outer max, len(A), rule index)
        target_word = None
        for word in current.words():
            for idx, rule in enumerate(system.rules):
                occs = word.occurrences_of(rule.lhs)
                if not occs:
                    continue
                key = spec.sort_key(word)
                for prefix, suffix in occs:
                    cand = (key, -len(prefix), -idx)
                    if best is None or cand > best:
                        # max key; ties prefer shortest prefix then lowest rule
                        best = cand
                        target_word = Occurrence(prefix, idx, suffix)
        if target_word is None:
            return NormalFormResult(current, tuple(trace))
        occ = target_word
        lam = current.coefficient(
            occ.prefix * system.rules[occ.rule].lhs * occ.suffix)
        trace.append(ReductionStep(occ, lam))
        current = apply_reduction(current, system, occ)


def all_normal_forms(a: Polynomial, system: ReductionSystem,
                     budget: int = DEFAULT_ORACLE_BUDGET) -> set[Polynomial]:
    """Every irreducible polynomial reachable from a by any reduction sequence.

    Memoizes on visited polynomials; raises BudgetExceededError when more
    than ``budget`` distinct states would be visited.  Works on raw
    coefficient values internally: the state space of this search is the
    bottleneck of the whole package.
    """
    modulus = system.field.modulus
    rules = [(r.lhs.letters,
              tuple((w.letters, c.value) for w, c in r.rhs.items()))
             for r in system.rules]
    start = {w.letters: c.value for w, c in a.items()}
    seen = {frozenset(start.items())}
    stack = [start]
    normals = []
    while stack:
        state = stack.pop()
        successors = []
        for word, coeff in state.items():
            n = len(word)
            for lhs, rhs in rules:
                m = len(lhs)
                for i in range(n - m + 1):
                    if word[i:i + m] == lhs:
                        new = dict(state)
                        del new[word]
                        for rw, rc in rhs:
                            t = word[:i] + rw + word[i + m:]
                            v = new.get(t, 0) + coeff * rc
                            if modulus:
                                v %= modulus
                            if v:
                                new[t] = v
                            else:
                                new.pop(t, None)
                        successors.append(new)
        if not successors:
            normals.append(state)
            continue
        for q in successors:
            key = frozenset(q.items())
            if key not in seen:
                if len(seen) >= budget:
                    raise BudgetExceededError(len(seen))
                seen.add(key)
                stack.append(q)
    field, alphabet = system.field, system.alphabet
    return {Polynomial(field, alphabet,
                       {Word(alphabet, w): Coefficient(field, c)
                        for w, c in state.items()})
            for state in normals}


def format_trace(trace) -> str:
    """One line per step: ``A | rule-index | B | lambda``."""
    return "\n".join(
        f"{step.occurrence.prefix} | {step.occurrence.rule} | "
        f"{step.occurrence.suffix} | {step.coefficient}"
        for step in trace)
