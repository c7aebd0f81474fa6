"""Commutative associative carrier algebras and their distinguished maps.

Carriers: Laurent polynomial rings in k variables, group algebras of finitely
generated abelian groups, quotients of one-variable Laurent rings by the
relation t^p = t^-p, and explicit finite multiplication tables (used for
truncated polynomial rings).  Elements are sparse maps from basis indices to
nonzero field scalars.

Derivations, involutions and linear functionals are first-class evaluable
objects defined on basis indices and extended linearly, with checkable laws
(Leibniz rule, multiplicativity + square = identity, anticommutation).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .fields import Field, FieldError, require_same_field


class CarrierMismatchError(ValueError):
    pass


class HypothesisViolation(ValueError):
    """A constructor's mathematical hypothesis does not hold for the inputs."""


# ---------------------------------------------------------------------------
# carriers
# ---------------------------------------------------------------------------

class CarrierAlgebra:
    """Commutative associative algebra given by a basis-index product rule."""

    shape = "abstract"

    def __init__(self, field: Field):
        self.field = field

    # -- structure -----------------------------------------------------
    def dim(self) -> Optional[int]:
        return None

    def unit_index(self):
        return None

    def mul_indices(self, i, j) -> List[Tuple[object, object]]:
        raise NotImplementedError

    def neg_index(self, i):
        raise NotImplementedError(f"{self.shape} carrier has no basis negation")

    def validate_index(self, i) -> None:
        raise NotImplementedError

    def basis_indices(self) -> List[object]:
        raise NotImplementedError(f"{self.shape} carrier is infinite dimensional")

    def window(self, bound: int) -> List[object]:
        raise NotImplementedError

    # -- text forms ------------------------------------------------------
    def index_str(self, i) -> str:
        raise NotImplementedError

    def parse_index(self, text: str):
        raise NotImplementedError

    # -- element constructors -------------------------------------------
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def monomial(self, index, coeff=None) -> "AlgebraElement":
        self.validate_index(index)
        c = self.field.one if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero()
        return AlgebraElement(self, {index: c})

    def one(self) -> "AlgebraElement":
        u = self.unit_index()
        if u is None:
            raise ValueError(f"{self.shape} carrier has no unit")
        return self.monomial(u)

    def element(self, terms) -> "AlgebraElement":
        out: Dict = {}
        for idx, c in dict(terms).items():
            self.validate_index(idx)
            if not self.field.is_zero(c):
                out[idx] = c
        return AlgebraElement(self, out)

    def __eq__(self, other):
        return self is other or (
            isinstance(other, CarrierAlgebra)
            and self.shape == other.shape
            and self.field == other.field
            and self._signature() == other._signature()
        )

    def __hash__(self):
        return hash((self.shape, self.field, self._signature()))

    def _signature(self):
        return ()


class LaurentAlgebra(CarrierAlgebra):
    """F[t_1^-1..t_k^-1, t_1..t_k]; indices are integer exponent tuples."""

    shape = "laurent"

    def __init__(self, field: Field, nvars: int = 1):
        super().__init__(field)
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars

    def _signature(self):
        return (self.nvars,)

    def unit_index(self):
        return (0,) * self.nvars

    def mul_indices(self, i, j):
        return [(tuple(a + b for a, b in zip(i, j)), self.field.one)]

    def neg_index(self, i):
        return tuple(-a for a in i)

    def validate_index(self, i):
        if not (isinstance(i, tuple) and len(i) == self.nvars and all(isinstance(a, int) for a in i)):
            raise ValueError(f"bad Laurent exponent tuple {i!r} for {self.nvars} variable(s)")

    def window(self, bound: int) -> List[tuple]:
        rng = range(-bound, bound + 1)
        return [tuple(t) for t in itertools.product(rng, repeat=self.nvars)]

    def index_str(self, i):
        if all(a == 0 for a in i):
            return "1"
        if self.nvars == 1:
            return f"t^{i[0]}"
        parts = [f"t{k + 1}^{a}" for k, a in enumerate(i) if a != 0]
        return "*".join(parts)

    def parse_index(self, text: str):
        s = text.strip()
        if s == "1":
            return (0,) * self.nvars
        exps = [0] * self.nvars
        for part in s.split("*"):
            name, _, power = part.partition("^")
            name = name.strip()
            k = 0 if name == "t" else int(name[1:]) - 1
            exps[k] = int(power) if power else 1
        return tuple(exps)


class GroupAlgebra(CarrierAlgebra):
    """F[G] for G = Z^a x Z_{m_1} x ... x Z_{m_b}; indices are group elements
    stored as (free..., torsion...) integer tuples with torsion residues
    reduced into [0, m_i)."""

    shape = "group"

    def __init__(self, field: Field, free_rank: int = 0, torsion: Sequence[int] = ()):
        super().__init__(field)
        self.free_rank = free_rank
        self.torsion = tuple(int(m) for m in torsion)
        if free_rank < 0 or any(m < 2 for m in self.torsion):
            raise ValueError("free rank must be >= 0 and torsion orders >= 2")
        if free_rank == 0 and not self.torsion:
            raise ValueError("trivial group not supported")

    def _signature(self):
        return (self.free_rank, self.torsion)

    @property
    def rank(self):
        return self.free_rank + len(self.torsion)

    def dim(self):
        if self.free_rank:
            return None
        d = 1
        for m in self.torsion:
            d *= m
        return d

    def unit_index(self):
        return (0,) * self.rank

    def reduce_index(self, i):
        free = tuple(i[: self.free_rank])
        tor = tuple(x % m for x, m in zip(i[self.free_rank:], self.torsion))
        return free + tor

    def add_indices(self, i, j):
        return self.reduce_index(tuple(a + b for a, b in zip(i, j)))

    def sub_indices(self, i, j):
        return self.reduce_index(tuple(a - b for a, b in zip(i, j)))

    def mul_indices(self, i, j):
        return [(self.add_indices(i, j), self.field.one)]

    def neg_index(self, i):
        return self.reduce_index(tuple(-a for a in i))

    def validate_index(self, i):
        if not (isinstance(i, tuple) and len(i) == self.rank and all(isinstance(a, int) for a in i)):
            raise ValueError(f"bad group element {i!r}")
        if i != self.reduce_index(i):
            raise ValueError(f"group element {i!r} has unreduced torsion part")

    def basis_indices(self):
        if self.free_rank:
            raise NotImplementedError("group has infinite order")
        return [tuple(t) for t in itertools.product(*(range(m) for m in self.torsion))]

    def window(self, bound: int):
        free = itertools.product(range(-bound, bound + 1), repeat=self.free_rank)
        tors = list(itertools.product(*(range(m) for m in self.torsion)))
        return [f + t for f in free for t in tors]

    def index_str(self, i):
        free = ",".join(str(a) for a in i[: self.free_rank])
        tor = ",".join(str(a) for a in i[self.free_rank:])
        if tor:
            return f"e({free}|{tor})"
        return f"e({free})"

    def parse_index(self, text: str):
        s = text.strip()
        if not (s.startswith("e(") and s.endswith(")")):
            raise ValueError(f"bad group element text {text!r}")
        body = s[2:-1]
        free_part, _, tor_part = body.partition("|")
        free = tuple(int(x) for x in free_part.split(",") if x.strip() != "")
        tor = tuple(int(x) for x in tor_part.split(",") if x.strip() != "")
        idx = free + tor
        if len(idx) != self.rank:
            raise ValueError(f"group element {text!r} has wrong rank for {self._signature()}")
        return self.reduce_index(idx)


class QuotientLaurentAlgebra(CarrierAlgebra):
    """One-variable Laurent ring modulo the identification t^p = t^-p.

    Exponents live in the canonical window {1-p, ..., p} and add modulo 2p;
    this is the quotient by the principal ideal generated by t^p - t^-p.
    """

    shape = "quotient-laurent"

    def __init__(self, field: Field, p: int):
        super().__init__(field)
        if p < 2:
            raise ValueError("quotient parameter must be >= 2")
        self.p = p

    def _signature(self):
        return (self.p,)

    def dim(self):
        return 2 * self.p

    def unit_index(self):
        return 0

    def reduce_exponent(self, e: int) -> int:
        return (e - (1 - self.p)) % (2 * self.p) + (1 - self.p)

    def mul_indices(self, i, j):
        return [(self.reduce_exponent(i + j), self.field.one)]

    def neg_index(self, i):
        return self.reduce_exponent(-i)

    def validate_index(self, i):
        if not isinstance(i, int) or not (1 - self.p <= i <= self.p):
            raise ValueError(
                f"quotient exponent {i!r} outside canonical window [{1 - self.p}, {self.p}]"
            )

    def basis_indices(self):
        return list(range(1 - self.p, self.p + 1))

    def window(self, bound: int):
        return self.basis_indices()

    def index_str(self, i):
        return "1" if i == 0 else f"t^{i}"

    def parse_index(self, text: str):
        s = text.strip()
        e = 0 if s == "1" else int(s.split("^")[1])
        e = self.reduce_exponent(e)
        return e


class TableAlgebra(CarrierAlgebra):
    """Finite-dimensional carrier given by an explicit multiplication table.

    The table maps ordered pairs (i, j) with i <= j to {k: coeff}; products
    are symmetrized from it.  Associativity is spot-verified on construction
    (exhaustively for dimension <= 6, on seeded samples above that).
    """

    shape = "table"

    def __init__(self, field: Field, dim: int, table: Dict, labels: Optional[List[str]] = None,
                 unit: Optional[int] = None, name: str = "table"):
        super().__init__(field)
        self._dim = dim
        self.labels = list(labels) if labels else [f"b{i}" for i in range(dim)]
        self.unit = unit
        self.name = name
        self.table = {}
        for (i, j), terms in table.items():
            key = (min(i, j), max(i, j))
            cleaned = {k: c for k, c in terms.items() if not field.is_zero(c)}
            self.table[key] = cleaned
        self._spot_check_associativity()

    def _signature(self):
        return (self._dim, self.name)

    def _spot_check_associativity(self):
        d = self._dim
        if d <= 6:
            triples = itertools.product(range(d), repeat=3)
        else:
            rng = random.Random(0)
            triples = [tuple(rng.randrange(d) for _ in range(3)) for _ in range(200)]
        for (i, j, k) in triples:
            lhs = self.monomial(i) * self.monomial(j) * self.monomial(k)
            rhs = self.monomial(i) * (self.monomial(j) * self.monomial(k))
            if lhs != rhs:
                raise ValueError(
                    f"multiplication table is not associative at ({i},{j},{k})"
                )

    def dim(self):
        return self._dim

    def unit_index(self):
        return self.unit

    def mul_indices(self, i, j):
        terms = self.table.get((min(i, j), max(i, j)), {})
        return list(terms.items())

    def validate_index(self, i):
        if not isinstance(i, int) or not (0 <= i < self._dim):
            raise ValueError(f"index {i!r} outside table of dimension {self._dim}")

    def basis_indices(self):
        return list(range(self._dim))

    def window(self, bound: int):
        return self.basis_indices()

    def index_str(self, i):
        return self.labels[i]

    def parse_index(self, text: str):
        return self.labels.index(text.strip())


def truncated_polynomial_algebra(field: Field, n: int, unital: bool = True) -> TableAlgebra:
    """F[x]/(x^n), or its maximal ideal x*F[x]/(x^n) when unital is False."""
    if unital:
        powers = list(range(n))
    else:
        powers = list(range(1, n))
    pos = {p: i for i, p in enumerate(powers)}
    table = {}
    for a in range(len(powers)):
        for b in range(a, len(powers)):
            s = powers[a] + powers[b]
            table[(a, b)] = {pos[s]: field.one} if s < n else {}
    labels = ["1" if p == 0 else ("x" if p == 1 else f"x^{p}") for p in powers]
    unit = pos.get(0)
    return TableAlgebra(field, len(powers), table, labels=labels, unit=unit,
                        name=f"poly-trunc-{n}{'' if unital else '-nonunital'}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class AlgebraElement:
    """Sparse finite linear combination of carrier basis indices."""

    __slots__ = ("carrier", "terms")

    def __init__(self, carrier: CarrierAlgebra, terms: Dict):
        self.carrier = carrier
        self.terms = terms

    @property
    def field(self):
        return self.carrier.field

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "AlgebraElement"):
        if self.carrier != other.carrier:
            raise CarrierMismatchError("elements live on different carriers")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for idx, c in other.terms.items():
            s = f.add(out.get(idx, f.zero), c)
            if f.is_zero(s):
                out.pop(idx, None)
            else:
                out[idx] = s
        return AlgebraElement(self.carrier, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return AlgebraElement(self.carrier, {i: f.neg(c) for i, c in self.terms.items()})

    def scale(self, scalar):
        f = self.field
        if f.is_zero(scalar):
            return AlgebraElement(self.carrier, {})
        return AlgebraElement(self.carrier, {i: f.mul(scalar, c) for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            f = self.field
            out: Dict = {}
            for i, ci in self.terms.items():
                for j, cj in other.terms.items():
                    cij = f.mul(ci, cj)
                    for k, ck in self.carrier.mul_indices(i, j):
                        s = f.add(out.get(k, f.zero), f.mul(cij, ck))
                        if f.is_zero(s):
                            out.pop(k, None)
                        else:
                            out[k] = s
            return AlgebraElement(self.carrier, out)
        if isinstance(other, int):
            return self.scale(self.field.embed(other))
        return self.scale(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.carrier == other.carrier
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.carrier, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _index_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.field
        parts = []
        for idx, c in self.sorted_terms():
            mono = self.carrier.index_str(idx)
            cs = f.render(c)
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _index_sort_key(idx):
    if isinstance(idx, tuple):
        return idx
    return (idx,)


def coordinates(elem: AlgebraElement, ordered_indices: Sequence) -> list:
    """Dense coordinate vector of an element over an ordered index list.

    Raises if the element has support outside the listed indices.
    """
    pos = {idx: k for k, idx in enumerate(ordered_indices)}
    f = elem.field
    vec = [f.zero] * len(ordered_indices)
    for idx, c in elem.terms.items():
        if idx not in pos:
            raise ValueError(f"element term {elem.carrier.index_str(idx)} escapes the basis")
        vec[pos[idx]] = c
    return vec


# ---------------------------------------------------------------------------
# group homomorphisms into the additive group of the field
# ---------------------------------------------------------------------------

class GroupHom:
    """alpha in Hom(G, F^+), stored by its values on the generators.

    Torsion generators must satisfy m_i * alpha(g_i) = 0 in F; over a field of
    characteristic zero this forces alpha to vanish on torsion.
    """

    def __init__(self, carrier: GroupAlgebra, free_values: Sequence = (), torsion_values: Sequence = ()):
        if not isinstance(carrier, GroupAlgebra):
            raise CarrierMismatchError("GroupHom requires a group algebra carrier")
        f = carrier.field
        self.carrier = carrier
        self.free_values = [f.normalize(v) for v in free_values]
        self.torsion_values = [f.normalize(v) for v in torsion_values]
        if len(self.free_values) != carrier.free_rank or len(self.torsion_values) != len(carrier.torsion):
            raise ValueError("generator value count does not match the group signature")
        for m, v in zip(carrier.torsion, self.torsion_values):
            if not f.is_zero(f.mul(f.embed(m), v)):
                raise HypothesisViolation(
                    f"hom value {f.render(v)} on a torsion generator of order {m} "
                    f"violates m*alpha = 0 in {f}"
                )

    def is_zero(self):
        f = self.carrier.field
        return all(f.is_zero(v) for v in self.free_values + self.torsion_values)

    def __call__(self, g) -> object:
        f = self.carrier.field
        total = f.zero
        for x, v in zip(g[: self.carrier.free_rank], self.free_values):
            total = f.add(total, f.mul(f.embed(x), v))
        for x, v in zip(g[self.carrier.free_rank:], self.torsion_values):
            total = f.add(total, f.mul(f.embed(x), v))
        return total


# ---------------------------------------------------------------------------
# endomorphisms and functionals
# ---------------------------------------------------------------------------

class EndoRule:
    def image(self, carrier: CarrierAlgebra, idx) -> List[Tuple[object, object]]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


class IdentityRule(EndoRule):
    def image(self, carrier, idx):
        return [(idx, carrier.field.one)]

    def describe(self):
        return "identity"


class MonomialScale(EndoRule):
    """t^m -> base^m t^m on a one-variable monomial carrier.

    base = -1 is the sign involution family member; base = +1 the identity.
    """

    def __init__(self, base):
        self.base = base

    def image(self, carrier, idx):
        m = idx[0] if isinstance(idx, tuple) else idx
        return [(idx, carrier.field.pow(self.base, m))]

    def describe(self):
        return "monomial scale base^m"


class LaurentDerivation(EndoRule):
    """t^l * d/dt on one-variable carriers: t^m -> m t^{m+l-1}."""

    def __init__(self, power: int):
        self.power = power

    def image(self, carrier, idx):
        f = carrier.field
        if isinstance(carrier, QuotientLaurentAlgebra):
            m = idx
            out = carrier.reduce_exponent(m + self.power - 1)
            return [(out, f.embed(m))]
        m = idx[0]
        return [((m + self.power - 1,), f.embed(m))]

    def describe(self):
        return f"t^{self.power} d/dt"


class VariableScalingDerivation(EndoRule):
    """t_j * d/dt_j on multivariable Laurent carriers: t^r -> r_j t^r."""

    def __init__(self, var: int = 0):
        self.var = var

    def image(self, carrier, idx):
        return [(idx, carrier.field.embed(idx[self.var]))]

    def describe(self):
        return f"t_{self.var + 1} d/dt_{self.var + 1}"


class LaurentFlip(EndoRule):
    """t^r -> (prod_s lambda_s^{r_s}) t^{-r}; lambda_s must be nonzero."""

    def __init__(self, lambdas: Sequence):
        self.lambdas = tuple(lambdas)

    def image(self, carrier, idx):
        f = carrier.field
        exps = idx if isinstance(idx, tuple) else (idx,)
        if len(self.lambdas) != len(exps):
            raise ValueError("one scale factor per variable required")
        c = f.one
        for lam, r in zip(self.lambdas, exps):
            if f.is_zero(lam):
                raise HypothesisViolation("flip involution requires lambda != 0")
            c = f.mul(c, f.pow(lam, r))
        return [(carrier.neg_index(idx), c)]

    def describe(self):
        return "lambda^r t^-r flip"


class GroupNegation(EndoRule):
    """e_g -> e_{-g} on any carrier with basis negation."""

    def image(self, carrier, idx):
        return [(carrier.neg_index(idx), carrier.field.one)]

    def describe(self):
        return "e_g -> e_-g"


class GroupHomDerivation(EndoRule):
    """e_g -> alpha(g) e_g for alpha in Hom(G, F^+)."""

    def __init__(self, hom: GroupHom):
        self.hom = hom

    def image(self, carrier, idx):
        return [(idx, self.hom(idx))]

    def describe(self):
        return "e_g -> alpha(g) e_g"


class TableMap(EndoRule):
    """Explicit linear map: basis j maps to sum_i entries[i][j] e_i."""

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [list(r) for r in entries]

    def image(self, carrier, idx):
        f = carrier.field
        out = []
        for i, row in enumerate(self.entries):
            if not f.is_zero(row[idx]):
                out.append((i, row[idx]))
        return out

    def describe(self):
        return "matrix-defined map"


class MonomialShift(EndoRule):
    """t^m -> coeff * t^{m+offset} on one-variable Laurent carriers."""

    def __init__(self, offset: int, coeff=None):
        self.offset = offset
        self.coeff = coeff

    def image(self, carrier, idx):
        f = carrier.field
        c = f.one if self.coeff is None else self.coeff
        m = idx[0]
        return [((m + self.offset,), c)]

    def describe(self):
        return f"t^m -> c t^(m{self.offset:+d})"


class IdMinus(EndoRule):
    """x -> x - inner(x)."""

    def __init__(self, inner: EndoRule):
        self.inner = inner

    def image(self, carrier, idx):
        f = carrier.field
        out = {idx: f.one}
        for j, c in self.inner.image(carrier, idx):
            s = f.sub(out.get(j, f.zero), c)
            if f.is_zero(s):
                out.pop(j, None)
            else:
                out[j] = s
        return list(out.items())

    def describe(self):
        return f"identity minus ({self.inner.describe()})"


class Endomorphism:
    """Linear map of a carrier, defined on basis indices, extended linearly."""

    def __init__(self, carrier: CarrierAlgebra, rule: EndoRule, name: str = ""):
        self.carrier = carrier
        self.rule = rule
        self.name = name or rule.describe()

    def image_of_index(self, idx) -> AlgebraElement:
        f = self.carrier.field
        out: Dict = {}
        for j, c in self.rule.image(self.carrier, idx):
            if not f.is_zero(c):
                s = f.add(out.get(j, f.zero), c)
                if f.is_zero(s):
                    out.pop(j, None)
                else:
                    out[j] = s
        return AlgebraElement(self.carrier, out)

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if x.carrier != self.carrier:
            raise CarrierMismatchError("endomorphism applied to a foreign element")
        acc = self.carrier.zero()
        for idx, c in x.terms.items():
            acc = acc + self.image_of_index(idx).scale(c)
        return acc

    def __repr__(self):
        return f"Endo({self.name})"


class FunctionalRule:
    def value(self, carrier: CarrierAlgebra, idx):
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


class AlternatingSign(FunctionalRule):
    """t^m -> (-1)^m (one-variable)."""

    def value(self, carrier, idx):
        m = idx[0] if isinstance(idx, tuple) else idx
        return carrier.field.embed(-1 if m % 2 else 1)

    def describe(self):
        return "(-1)^m"


class ConstantOne(FunctionalRule):
    def value(self, carrier, idx):
        return carrier.field.one

    def describe(self):
        return "1"


class ExponentValue(FunctionalRule):
    """t^m -> m (one-variable) or r_j for a chosen variable."""

    def __init__(self, var: int = 0):
        self.var = var

    def value(self, carrier, idx):
        m = idx[self.var] if isinstance(idx, tuple) else idx
        return carrier.field.embed(m)

    def describe(self):
        return "exponent value"


class GroupHomFunctional(FunctionalRule):
    """phi_alpha(e_g) = alpha(g)."""

    def __init__(self, hom: GroupHom):
        self.hom = hom

    def value(self, carrier, idx):
        return self.hom(idx)

    def describe(self):
        return "phi_alpha"


class TableFunctional(FunctionalRule):
    def __init__(self, values: Sequence):
        self.values = list(values)

    def value(self, carrier, idx):
        return self.values[idx]

    def describe(self):
        return "vector-defined functional"


class Functional:
    def __init__(self, carrier: CarrierAlgebra, rule: FunctionalRule, name: str = ""):
        self.carrier = carrier
        self.rule = rule
        self.name = name or rule.describe()

    def __call__(self, x: AlgebraElement):
        if x.carrier != self.carrier:
            raise CarrierMismatchError("functional applied to a foreign element")
        f = self.carrier.field
        total = f.zero
        for idx, c in x.terms.items():
            total = f.add(total, f.mul(c, self.rule.value(self.carrier, idx)))
        return total

    def values_on(self, indices: Sequence) -> list:
        return [self.rule.value(self.carrier, i) for i in indices]

    def __repr__(self):
        return f"Functional({self.name})"


# ---------------------------------------------------------------------------
# law checks
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    law: str
    passed: bool
    checked: int
    failures: List[dict] = dc_field(default_factory=list)
    details: Dict[str, "CheckReport"] = dc_field(default_factory=dict)
    notes: Dict[str, object] = dc_field(default_factory=dict)

    def first_witness(self) -> Optional[dict]:
        if self.failures:
            return self.failures[0]
        for sub in self.details.values():
            w = sub.first_witness()
            if w is not None:
                return w
        return None


_MAX_WITNESSES = 5


def check_derivation(f: Endomorphism, window: Sequence) -> CheckReport:
    """Leibniz law D(xy) = D(x)y + xD(y) on all pairs from the window."""
    carrier = f.carrier
    checked = 0
    failures = []
    for a, b in itertools.combinations_with_replacement(window, 2):
        xa, xb = carrier.monomial(a), carrier.monomial(b)
        lhs = f(xa * xb)
        rhs = f(xa) * xb + xa * f(xb)
        checked += 1
        if lhs != rhs and len(failures) < _MAX_WITNESSES:
            failures.append({
                "pair": [carrier.index_str(a), carrier.index_str(b)],
                "lhs": str(lhs), "rhs": str(rhs),
            })
    return CheckReport("D(xy) = D(x)y + xD(y)", not failures, checked, failures)


def check_involution(f: Endomorphism, window: Sequence) -> CheckReport:
    """Multiplicativity on pairs and f(f(x)) = x on singletons."""
    carrier = f.carrier
    checked = 0
    failures = []
    for a in window:
        xa = carrier.monomial(a)
        checked += 1
        if f(f(xa)) != xa and len(failures) < _MAX_WITNESSES:
            failures.append({"index": carrier.index_str(a), "law": "f(f(x)) = x",
                             "value": str(f(f(xa)))})
    for a, b in itertools.combinations_with_replacement(window, 2):
        xa, xb = carrier.monomial(a), carrier.monomial(b)
        checked += 1
        if f(xa * xb) != f(xa) * f(xb) and len(failures) < _MAX_WITNESSES:
            failures.append({"pair": [carrier.index_str(a), carrier.index_str(b)],
                             "law": "f(xy) = f(x)f(y)"})
    return CheckReport("f(xy) = f(x)f(y) and f^2 = id", not failures, checked, failures)


def check_anticommute(omega: Endomorphism, delta: Endomorphism, window: Sequence) -> CheckReport:
    """(omega.delta + delta.omega)(x) = 0 on all window basis indices."""
    carrier = omega.carrier
    if carrier != delta.carrier:
        raise CarrierMismatchError("maps live on different carriers")
    checked = 0
    failures = []
    for a in window:
        xa = carrier.monomial(a)
        val = omega(delta(xa)) + delta(omega(xa))
        checked += 1
        if not val.is_zero() and len(failures) < _MAX_WITNESSES:
            failures.append({"index": carrier.index_str(a), "value": str(val)})
    return CheckReport("omega.delta + delta.omega = 0", not failures, checked, failures)


def check_functional_bracket_conditions(
    alpha: Optional[Functional],
    beta: Optional[Functional],
    gamma: Optional[Functional],
    delta: Optional[Endomorphism],
    omega: Optional[Endomorphism],
    window: Sequence,
) -> CheckReport:
    """The three compatibility conditions between functionals and maps that
    make the functional-row triple brackets close: alpha kills products,
    beta kills derivation commutators x D(y) - y D(x), and gamma takes the
    same value on x D(y) - y D(x) and omega(x) D(y) - omega(y) D(x).

    Each supplied condition is evaluated on all window pairs; the report
    carries one sub-report per condition.
    """
    details = {}
    carrier = None
    for obj in (alpha, beta, gamma, delta, omega):
        if obj is not None:
            carrier = obj.carrier
            break
    if carrier is None:
        raise ValueError("nothing to check")

    pairs = list(itertools.combinations_with_replacement(window, 2))

    if alpha is not None:
        failures = []
        for a, b in pairs:
            val = alpha(carrier.monomial(a) * carrier.monomial(b))
            if not carrier.field.is_zero(val) and len(failures) < _MAX_WITNESSES:
                failures.append({"pair": [carrier.index_str(a), carrier.index_str(b)],
                                 "value": carrier.field.render(val)})
        details["alpha_kills_products"] = CheckReport(
            "alpha(xy) = 0", not failures, len(pairs), failures)

    if beta is not None and delta is not None:
        failures = []
        for a, b in pairs:
            xa, xb = carrier.monomial(a), carrier.monomial(b)
            val = beta(xa * delta(xb) - xb * delta(xa))
            if not carrier.field.is_zero(val) and len(failures) < _MAX_WITNESSES:
                failures.append({"pair": [carrier.index_str(a), carrier.index_str(b)],
                                 "value": carrier.field.render(val)})
        details["beta_kills_derivation_commutators"] = CheckReport(
            "beta(x D(y) - y D(x)) = 0", not failures, len(pairs), failures)

    if gamma is not None and delta is not None and omega is not None:
        failures = []
        for a, b in pairs:
            xa, xb = carrier.monomial(a), carrier.monomial(b)
            lhs = gamma(xa * delta(xb) - xb * delta(xa))
            rhs = gamma(omega(xa) * delta(xb) - omega(xb) * delta(xa))
            if lhs != rhs and len(failures) < _MAX_WITNESSES:
                failures.append({"pair": [carrier.index_str(a), carrier.index_str(b)],
                                 "lhs": carrier.field.render(lhs),
                                 "rhs": carrier.field.render(rhs)})
        details["gamma_twist_balance"] = CheckReport(
            "gamma(x D(y) - y D(x)) = gamma(w(x) D(y) - w(y) D(x))",
            not failures, len(pairs), failures)

    passed = all(r.passed for r in details.values())
    checked = sum(r.checked for r in details.values())
    return CheckReport("functional bracket conditions", passed, checked, [], details)


def check_witt_relation(carrier: LaurentAlgebra, bound: int) -> CheckReport:
    """Commutator law of the scaling derivations on a one-variable Laurent
    ring: [t^m d, t^n d] = (n-m) t^{m+n} d with d = t d/dt, on monomials."""
    if not isinstance(carrier, LaurentAlgebra) or carrier.nvars != 1:
        raise ValueError("the Witt relation check is one-variable")
    f = carrier.field
    checked = 0
    failures = []
    for m in range(-bound, bound + 1):
        Dm = Endomorphism(carrier, LaurentDerivation(m + 1))
        for n in range(-bound, bound + 1):
            Dn = Endomorphism(carrier, LaurentDerivation(n + 1))
            for j in range(-bound, bound + 1):
                x = carrier.monomial((j,))
                lhs = Dm(Dn(x)) - Dn(Dm(x))
                rhs = carrier.monomial((m + n + j,), f.embed((n - m) * j))
                checked += 1
                if lhs != rhs and len(failures) < _MAX_WITNESSES:
                    failures.append({"m": m, "n": n, "input": carrier.index_str((j,)),
                                     "lhs": str(lhs), "rhs": str(rhs)})
    return CheckReport("[t^m d, t^n d] = (n-m) t^{m+n} d", not failures,
                       checked, failures)


# ---------------------------------------------------------------------------
# involution classification for one-variable Laurent rings
# ---------------------------------------------------------------------------

@dataclass
class InvolutionFamily:
    kind: str                       # "sign" or "flip"
    description: str
    make: Callable[..., Endomorphism]


def classify_involutions(carrier: LaurentAlgebra) -> List[InvolutionFamily]:
    """The two parametric families of involutions of F[t,t^-1], char != 2.

    Sign family: t^m -> e^m t^m with e = +-1; flip family: t^m -> c^m t^-m
    with c != 0.  Any algebra involution is one of these.
    """
    if not isinstance(carrier, LaurentAlgebra) or carrier.nvars != 1:
        raise ValueError("classification applies to one-variable Laurent rings")
    if carrier.field.characteristic == 2:
        raise HypothesisViolation(
            "involution classification assumes characteristic != 2, "
            f"but the field is {carrier.field}"
        )

    def make_sign(eps: int) -> Endomorphism:
        if eps not in (1, -1):
            raise ValueError("sign parameter must be +1 or -1")
        return Endomorphism(carrier, MonomialScale(carrier.field.embed(eps)),
                            name=f"sign involution eps={eps}")

    def make_flip(lam) -> Endomorphism:
        if carrier.field.is_zero(lam):
            raise HypothesisViolation("flip involution requires lambda != 0")
        return Endomorphism(carrier, LaurentFlip((lam,)),
                            name="flip involution")

    return [
        InvolutionFamily("sign", "t^m -> e^m t^m, e = +-1", make_sign),
        InvolutionFamily("flip", "t^m -> c^m t^-m, c != 0", make_flip),
    ]
