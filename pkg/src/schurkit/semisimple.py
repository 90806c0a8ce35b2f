"""Semisimplicity of specialized algebras and two-sided criterion checks.

A specialization theta of the parameters makes the algebra semisimple
exactly when theta(P) != 0 for the separation polynomial P, and that in
turn happens exactly when no Schur element vanishes under theta.  Both
sides are computable here, so the equivalence itself can be stress
tested; vanishing is always detected on the cancellation-free formula,
which is a denominator-free product of linear forms.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import FactoredRational, FieldElement, Specialization, fr_eval
from .partitions import Multipartition, enumerate_multipartitions
from .schur import p_invariant, schur_element


@dataclass
class SemisimplicityReport:
    """Outcome of the criterion check for one specialization."""

    p_value: FieldElement
    semisimple: bool
    vanishing: Optional[list[Multipartition]]
    agreement: Optional[bool]
    field: str

    def to_json(self) -> dict:
        data: dict = {"p_value": str(self.p_value), "semisimple": self.semisimple}
        if self.vanishing is not None:
            data["vanishing"] = [[list(lam) for lam in mp] for mp in self.vanishing]
            data["agreement"] = self.agreement
        data["field"] = self.field
        return data


def is_semisimple(m: int, n: int, theta: Specialization) -> bool:
    """True iff theta(P) != 0; P is a polynomial, so no poles can occur."""
    return fr_eval(p_invariant(m, n), theta) != 0


def vanishing_schur_elements(
    m: int,
    n: int,
    theta: Specialization,
    elements: Optional[Sequence[tuple[Multipartition, FactoredRational]]] = None,
) -> list[Multipartition]:
    """All multipartitions whose Schur element vanishes under theta.

    Returned in enumeration order.  Precomputed (multipartition,
    element) pairs may be passed to amortize repeated scans.
    """
    if elements is None:
        elements = schur_elements_table(m, n)
    return [mp for mp, el in elements if fr_eval(el, theta) == 0]


def schur_elements_table(
    m: int, n: int
) -> list[tuple[Multipartition, FactoredRational]]:
    """Cancellation-free Schur elements for all of P_{m,n}, enumeration order."""
    return [(mp, schur_element(mp)) for mp in enumerate_multipartitions(m, n)]


def cross_check_criterion(
    m: int,
    n: int,
    theta: Specialization,
    elements: Optional[Sequence[tuple[Multipartition, FactoredRational]]] = None,
) -> SemisimplicityReport:
    """Evaluate the criterion AND scan all Schur elements, reporting agreement.

    agreement is (p_value != 0) == (no element vanishes); a False value
    signals an implementation bug, never a mathematical possibility.
    """
    p_value = fr_eval(p_invariant(m, n), theta)
    vanishing = vanishing_schur_elements(m, n, theta, elements)
    semisimple = p_value != 0
    return SemisimplicityReport(
        p_value=p_value,
        semisimple=semisimple,
        vanishing=vanishing,
        agreement=(semisimple == (not vanishing)),
        field=theta.field_tag(),
    )


def random_specialization(
    m: int, n: int, rng: random.Random, prime: Optional[int] = None
) -> Specialization:
    """Draw one random specialization for criterion sweeps.

    Over the rationals the q values are integers in [-n, n], a box small
    enough that non-semisimple collisions are common; over F_p they are
    uniform residues.  p <= n makes n! vanish identically and every
    sample non-semisimple, so that range is warned about.
    """
    if prime is not None and prime <= n:
        warnings.warn(
            f"prime {prime} <= n={n}: n! vanishes mod p and no specialization is semisimple",
            stacklevel=2,
        )
    if prime is None:
        values = {s: rng.randint(-n, n) for s in range(1, m + 1)}
    else:
        values = {s: rng.randrange(prime) for s in range(1, m + 1)}
    return Specialization(values, prime=prime)


def separation_failure_cases(
    m: int, n: int
) -> list[tuple[str, Specialization, Multipartition]]:
    """Targeted non-semisimple specializations with their witness multipartitions.

    One per way the separation polynomial can vanish: n! = 0 (prime
    characteristic <= n; witness has (n) in the first component), a
    vanishing factor k + q_s - q_t with 0 <= k < n (witness puts (n) in
    component s), and one with -n < k < 0 (witness puts (n) in
    component t).
    """
    cases: list[tuple[str, Specialization, Multipartition]] = []

    def witness(component: int) -> Multipartition:
        return tuple((n,) if s == component else () for s in range(1, m + 1))

    p = 2 if n >= 2 else None
    if p is not None:
        theta = Specialization({s: s % p for s in range(1, m + 1)}, prime=p)
        cases.append(("factorial", theta, witness(1)))
    if m >= 2:
        k = n - 1  # 0 <= k < n, theta(k + q_1 - q_2) = 0
        theta = Specialization({s: -k if s == 1 else 0 for s in range(1, m + 1)})
        cases.append(("nonnegative-offset", theta, witness(1)))
        k = -(n - 1) if n >= 2 else None  # -n < k < 0 needs n >= 2
        if k is not None:
            theta = Specialization({s: -k if s == 1 else 0 for s in range(1, m + 1)})
            cases.append(("negative-offset", theta, witness(2)))
    return cases
