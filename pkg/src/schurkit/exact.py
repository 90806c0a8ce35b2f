"""Exact arithmetic for factored rational functions over the integers.

Every quantity this library computes is a rational constant times a
product of integer powers of linear forms c + v - w in the parameters
q_1..q_m and one extra indeterminate x.  Distinct canonical forms are
pairwise non-associate irreducibles, so the factored representation is
unique and equality is a dictionary comparison; no polynomial gcd is
ever needed.

Canonical orientation of a form:
  * at least one variable is present (pure constants fold into the
    ambient rational constant);
  * the positive slot is always occupied, and when both variables are
    present the positive one has the smaller rank (q_1 < q_2 < ... < x);
  * flipping an orientation multiplies the ambient constant by
    (-1)^exponent, never changes the form itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

X = "x"

FieldElement = Union[Fraction, int]


class PoleError(ArithmeticError):
    """A denominator vanished under a specialization."""


class NotAPolynomialError(ValueError):
    """Expansion was requested for a genuine quotient."""


class NonIntegerConstantError(NotAPolynomialError):
    """Expansion left a fractional coefficient behind."""


def qvar(s: int) -> str:
    """Name of the s-th parameter (1-based)."""
    if s < 1:
        raise ValueError(f"parameter index must be positive, got {s}")
    return f"q{s}"


def _rank(v: str) -> tuple[int, int]:
    if v == X:
        return (1, 0)
    return (0, int(v[1:]))


@dataclass(frozen=True)
class LinearForm:
    """Canonical linear form c + pos - neg; construct via canonical_parts."""

    c: int
    pos: str
    neg: Optional[str] = None

    def variables(self) -> tuple[str, ...]:
        return (self.pos,) if self.neg is None else (self.pos, self.neg)

    def sort_key(self) -> tuple:
        neg_rank = (2, 0) if self.neg is None else _rank(self.neg)
        return (_rank(self.pos), neg_rank, self.c)

    def render(self, latex: bool = False) -> str:
        def var(v: str) -> str:
            if latex and v != X:
                return f"q_{{{v[1:]}}}"
            return v

        body = var(self.pos)
        if self.neg is not None:
            body += f"-{var(self.neg)}"
        if self.c:
            body = f"{self.c}+{body}"
        return f"({body})"

    def to_json(self) -> dict:
        return {"c": self.c, "pos": self.pos, "neg": self.neg}


def canonical_parts(
    c: int, pos: Optional[str] = None, neg: Optional[str] = None
) -> tuple[Optional[LinearForm], int]:
    """Reduce c + pos - neg to canonical (form, sign), or (None, c) if constant."""
    if pos == neg:
        return None, c
    if pos is None:
        return LinearForm(-c, neg), -1
    if neg is None:
        return LinearForm(c, pos), 1
    if _rank(pos) < _rank(neg):
        return LinearForm(c, pos, neg), 1
    return LinearForm(-c, neg, pos), -1


class FactoredRational:
    """A rational constant times a product of LinearForm^exponent.

    Instances are immutable by convention; every operation returns a new
    value.  Two instances are equal iff their canonical data coincide,
    which for these factored products is the same as equality of the
    rational functions they denote.
    """

    __slots__ = ("constant", "factors")

    def __init__(self, constant: Fraction, factors: Mapping[LinearForm, int]):
        constant = Fraction(constant)
        if constant == 0:
            factors = {}
        self.constant = constant
        self.factors = dict(factors)

    @classmethod
    def one(cls) -> "FactoredRational":
        return cls(Fraction(1), {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self.constant == other.constant and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.constant, frozenset(self.factors.items())))

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        return fr_mul(self, other)

    def __truediv__(self, other: "FactoredRational") -> "FactoredRational":
        return fr_div(self, other)

    def __pow__(self, k: int) -> "FactoredRational":
        return fr_pow(self, k)

    def __repr__(self) -> str:
        return f"FactoredRational({self.render()})"

    def is_zero(self) -> bool:
        return self.constant == 0

    def sorted_factors(self) -> list[tuple[LinearForm, int]]:
        """Factor list in the canonical order used by every renderer."""
        return sorted(self.factors.items(), key=lambda fe: fe[0].sort_key())

    def variables(self) -> list[str]:
        seen = {v for form in self.factors for v in form.variables()}
        return sorted(seen, key=_rank)

    def render(self, latex: bool = False) -> str:
        """Deterministic text form: constant prefix then canonical factors."""
        parts = []
        for form, exp in self.sorted_factors():
            s = form.render(latex=latex)
            if exp != 1:
                s += f"^{{{exp}}}" if latex else f"^{exp}"
            parts.append(s)
        body = "".join(parts)
        if not body:
            return str(self.constant)
        if self.constant == 1:
            return body
        if self.constant == -1:
            return "-" + body
        return f"{self.constant}*{body}"

    def to_json(self) -> dict:
        return {
            "num": str(self.constant.numerator),
            "den": str(self.constant.denominator),
            "factors": [[form.to_json(), exp] for form, exp in self.sorted_factors()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FactoredRational":
        b = ProductBuilder()
        b.const(Fraction(int(data["num"]), int(data["den"])))
        for form, exp in data["factors"]:
            b.form(int(form["c"]), form.get("pos"), form.get("neg"), exp=int(exp))
        return b.build()


class ProductBuilder:
    """Accumulates a canonical product of constants and linear-form powers."""

    __slots__ = ("constant", "factors")

    def __init__(self) -> None:
        self.constant = Fraction(1)
        self.factors: dict[LinearForm, int] = {}

    def const(self, value: Union[int, Fraction], exp: int = 1) -> "ProductBuilder":
        if exp == 0:
            return self
        if value == 0 and exp < 0:
            raise ZeroDivisionError("zero constant factor with negative exponent")
        self.constant *= Fraction(value) ** exp
        return self

    def form(
        self,
        c: int,
        pos: Optional[str] = None,
        neg: Optional[str] = None,
        exp: int = 1,
    ) -> "ProductBuilder":
        if exp == 0:
            return self
        form, sign = canonical_parts(c, pos, neg)
        if form is None:
            return self.const(sign, exp)
        if sign < 0 and exp % 2:
            self.constant = -self.constant
        new = self.factors.get(form, 0) + exp
        if new:
            self.factors[form] = new
        else:
            self.factors.pop(form, None)
        return self

    def fr(self, value: FactoredRational, exp: int = 1) -> "ProductBuilder":
        if exp == 0:
            return self
        self.const(value.constant, exp)
        for form, e in value.factors.items():
            new = self.factors.get(form, 0) + e * exp
            if new:
                self.factors[form] = new
            else:
                self.factors.pop(form, None)
        return self

    def build(self) -> FactoredRational:
        return FactoredRational(self.constant, self.factors)


def fr_const(value: Union[int, Fraction]) -> FactoredRational:
    return FactoredRational(Fraction(value), {})


def fr_form(
    c: int, pos: Optional[str] = None, neg: Optional[str] = None, exp: int = 1
) -> FactoredRational:
    return ProductBuilder().form(c, pos, neg, exp=exp).build()


def fr_mul(*values: FactoredRational) -> FactoredRational:
    b = ProductBuilder()
    for v in values:
        b.fr(v)
    return b.build()


def fr_pow(a: FactoredRational, k: int) -> FactoredRational:
    return ProductBuilder().fr(a, exp=k).build()


def fr_div(a: FactoredRational, b: FactoredRational) -> FactoredRational:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero product")
    return ProductBuilder().fr(a).fr(b, exp=-1).build()


def fr_equal(a: FactoredRational, b: FactoredRational) -> bool:
    """Exact equality of values, decided on canonical representations."""
    return a == b


def apply_permutation(
    sigma: Sequence[int], value: Union[FactoredRational, "SparsePoly"]
) -> Union[FactoredRational, "SparsePoly"]:
    """Rename q_s -> q_{sigma(s)} and re-canonicalize; sigma is 1-based images."""
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{len(sigma)}")
    if isinstance(value, SparsePoly):
        return value.apply_permutation(sigma)

    def rename(v: Optional[str]) -> Optional[str]:
        if v is None or v == X:
            return v
        return qvar(sigma[int(v[1:]) - 1])

    b = ProductBuilder()
    b.const(value.constant)
    for form, exp in value.factors.items():
        b.form(form.c, rename(form.pos), rename(form.neg), exp=exp)
    return b.build()


def substitute_x(a: FactoredRational, s: int, t: int) -> FactoredRational:
    """Replace x by q_s - q_t in every factor.

    Only forms of the shape c + x can occur in the kernels this is
    applied to; a form mixing x with a parameter would need three
    variables after substitution and is rejected.
    """
    if s == t:
        raise ValueError("substitution x -> q_s - q_t needs distinct indices")
    b = ProductBuilder()
    b.const(a.constant)
    for form, exp in a.factors.items():
        if X not in form.variables():
            b.form(form.c, form.pos, form.neg, exp=exp)
        elif form.pos == X and form.neg is None:
            b.form(form.c, qvar(s), qvar(t), exp=exp)
        else:
            raise ValueError(
                f"substituting x in {form.render()} would create a three-variable form"
            )
    return b.build()


def negate_x(a: FactoredRational) -> FactoredRational:
    """Replace x by -x; defined for values whose x-factors are pure c + x."""
    b = ProductBuilder()
    b.const(a.constant)
    for form, exp in a.factors.items():
        if X not in form.variables():
            b.form(form.c, form.pos, form.neg, exp=exp)
        elif form.pos == X and form.neg is None:
            b.form(form.c, neg=X, exp=exp)
        else:
            raise ValueError(f"cannot negate x inside the mixed form {form.render()}")
    return b.build()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Specialization:
    """Assignment of field values to the parameters q_s (and optionally x).

    prime=None evaluates over the rationals; otherwise over the prime
    field F_p.  Values may be given as ints or Fractions; over F_p a
    fraction a/b becomes a * b^-1 mod p.  Criterion-style tests should
    keep p > n, since n! vanishes identically when p <= n.
    """

    def __init__(
        self,
        q_values: Mapping[int, Union[int, Fraction, str]],
        x_value: Union[int, Fraction, str, None] = None,
        prime: Optional[int] = None,
    ):
        if prime is not None and not _is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        self.prime = prime
        self.q_values = {int(s): self._coerce(v) for s, v in q_values.items()}
        self.x_value = None if x_value is None else self._coerce(x_value)

    def _coerce(self, v: Union[int, Fraction, str]) -> FieldElement:
        frac = Fraction(v)
        if self.prime is None:
            return frac
        if frac.denominator % self.prime == 0:
            raise PoleError(f"denominator of {frac} vanishes mod {self.prime}")
        return frac.numerator * pow(frac.denominator, -1, self.prime) % self.prime

    def field_tag(self) -> str:
        return "Q" if self.prime is None else f"Fp:{self.prime}"

    def value_of(self, var: str) -> FieldElement:
        if var == X:
            if self.x_value is None:
                raise ValueError("x is not assigned by this specialization")
            return self.x_value
        s = int(var[1:])
        if s not in self.q_values:
            raise ValueError(f"q{s} is not assigned by this specialization")
        return self.q_values[s]

    def eval_form(self, form: LinearForm) -> FieldElement:
        v = form.c + self.value_of(form.pos)
        if form.neg is not None:
            v -= self.value_of(form.neg)
        return v % self.prime if self.prime is not None else v

    def constant_value(self, constant: Fraction) -> FieldElement:
        return self._coerce(constant)

    def render(self, v: FieldElement) -> str:
        return str(v)


def fr_eval(a: FactoredRational, theta: Specialization) -> FieldElement:
    """Exact value of a under theta; raises PoleError on vanishing denominators."""
    values = [(theta.eval_form(form), exp) for form, exp in a.factors.items()]
    for v, exp in values:
        if exp < 0 and v == 0:
            raise PoleError("denominator factor evaluates to zero")
    result = theta.constant_value(a.constant)
    for v, exp in values:
        if theta.prime is None:
            result *= Fraction(v) ** exp
        else:
            result = result * pow(v, exp, theta.prime) % theta.prime
    return result


class SparsePoly:
    """Expanded integer-coefficient polynomial over a fixed variable tuple."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], int]):
        self.variables = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "SparsePoly":
        zero = (0,) * len(variables)
        return cls(variables, {zero: value} if value else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            else:
                terms.pop(e, None)
        return SparsePoly(self.variables, terms)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                else:
                    terms.pop(e, None)
        return SparsePoly(self.variables, terms)

    def scale(self, k: int) -> "SparsePoly":
        return SparsePoly(self.variables, {e: k * c for e, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _exponent(self, var: str) -> tuple[int, ...]:
        idx = self.variables.index(var)
        return tuple(1 if i == idx else 0 for i in range(len(self.variables)))

    def _form_terms(self, form: LinearForm) -> dict[tuple[int, ...], int]:
        terms: dict[tuple[int, ...], int] = {}
        terms[self._exponent(form.pos)] = 1
        if form.neg is not None:
            terms[self._exponent(form.neg)] = -1
        if form.c:
            zero = (0,) * len(self.variables)
            terms[zero] = terms.get(zero, 0) + form.c
        return terms

    def mul_form(self, form: LinearForm) -> "SparsePoly":
        return self * SparsePoly(self.variables, self._form_terms(form))

    def div_form_exact(self, form: LinearForm) -> "SparsePoly":
        """Exact division by a linear form; raises NotAPolynomialError on remainder.

        Uses the one-divisor division algorithm in graded-lex order; the
        divisor's leading coefficient is always +-1, so quotients stay
        integral.
        """
        f_terms = self._form_terms(form)
        key = lambda e: (sum(e), e)
        lt_f = max(f_terms, key=key)
        cf = f_terms[lt_f]
        p = dict(self.terms)
        q: dict[tuple[int, ...], int] = {}
        while p:
            lt = max(p, key=key)
            if any(a < b for a, b in zip(lt, lt_f)):
                raise NotAPolynomialError(
                    f"{form.render()} does not divide the numerator exactly"
                )
            qe = tuple(a - b for a, b in zip(lt, lt_f))
            qc = p[lt] // cf
            q[qe] = qc
            for fe, fc in f_terms.items():
                e = tuple(a + b for a, b in zip(qe, fe))
                new = p.get(e, 0) - qc * fc
                if new:
                    p[e] = new
                else:
                    p.pop(e, None)
        return SparsePoly(self.variables, q)

    def evaluate(self, theta: Specialization) -> FieldElement:
        acc: FieldElement = Fraction(0) if theta.prime is None else 0
        values = [theta.value_of(v) for v in self.variables]
        for e, c in self.terms.items():
            term: FieldElement = c
            for v, k in zip(values, e):
                if k:
                    term *= pow(v, k, theta.prime) if theta.prime else v**k
            acc += term
        return acc % theta.prime if theta.prime is not None else acc

    def apply_permutation(self, sigma: Sequence[int]) -> "SparsePoly":
        def rename(v: str) -> str:
            return v if v == X else qvar(sigma[int(v[1:]) - 1])

        renamed = [rename(v) for v in self.variables]
        order = sorted(range(len(renamed)), key=lambda i: _rank(renamed[i]))
        variables = tuple(renamed[i] for i in order)
        terms = {tuple(e[i] for i in order): c for e, c in self.terms.items()}
        return SparsePoly(variables, terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Graded-lex order, leading term first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable, variables: Sequence[str]) -> "SparsePoly":
        return cls(variables, {tuple(e): int(c) for e, c in data})

    def render(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"

        def var(v: str) -> str:
            if latex and v != X:
                return f"q_{{{v[1:]}}}"
            return v

        chunks = []
        for e, c in self.sorted_terms():
            powers = []
            for v, k in zip(self.variables, e):
                if not k:
                    continue
                if k == 1:
                    powers.append(var(v))
                else:
                    powers.append(f"{var(v)}^{{{k}}}" if latex else f"{var(v)}^{k}")
            mono = ("" if latex else "*").join(powers)
            if not mono:
                chunks.append(f"{c:+d}")
            elif c == 1:
                chunks.append(f"+{mono}")
            elif c == -1:
                chunks.append(f"-{mono}")
            else:
                sep = "" if latex else "*"
                chunks.append(f"{c:+d}{sep}{mono}")
        out = "".join(chunks)
        return out[1:] if out.startswith("+") else out


def fr_expand(
    a: FactoredRational, variables: Optional[Sequence[str]] = None
) -> SparsePoly:
    """Expand a factored value into a SparsePoly with integer coefficients.

    Positive-exponent factors are multiplied out; each negative-exponent
    factor must divide the accumulated numerator exactly.  The rational
    constant must leave every coefficient integral.
    """
    if variables is None:
        variables = a.variables()
    poly = SparsePoly.constant(tuple(variables), 1)
    negatives: list[tuple[LinearForm, int]] = []
    for form, exp in a.sorted_factors():
        if exp > 0:
            for _ in range(exp):
                poly = poly.mul_form(form)
        else:
            negatives.append((form, -exp))
    for form, exp in negatives:
        for _ in range(exp):
            poly = poly.div_form_exact(form)
    terms: dict[tuple[int, ...], int] = {}
    for e, c in poly.terms.items():
        scaled = c * a.constant
        if scaled.denominator != 1:
            raise NonIntegerConstantError(
                f"constant {a.constant} leaves non-integer coefficient {scaled}"
            )
        terms[e] = int(scaled)
    return SparsePoly(poly.variables, terms)
