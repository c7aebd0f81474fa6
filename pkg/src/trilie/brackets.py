"""Evaluable 3-ary alternating brackets on carrier algebras.

The determinant bracket (three row operators: maps, functionals or the
identity, expanded as a formal 3x3 determinant) is the single source of
truth; the closed forms (group algebra wedge, Laurent flip, parity
coefficient families, quotient form, monomial form) are optimizations that
are verified against it, never trusted on their own.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .carriers import (
    AlgebraElement,
    CarrierAlgebra,
    CarrierMismatchError,
    CheckReport,
    Endomorphism,
    Functional,
    GroupAlgebra,
    GroupHom,
    HypothesisViolation,
    LaurentAlgebra,
    QuotientLaurentAlgebra,
)
from .fields import Field
from .structure import FiniteNLieAlgebra, _perm_sign

_PERMS3 = [(p, _perm_sign(p)) for p in itertools.permutations(range(3))]

Row = Union[str, Endomorphism, Functional]


def _normalize_row(row: Row) -> Tuple[str, object]:
    if row == "id" or row is None:
        return ("id", None)
    if isinstance(row, Endomorphism):
        return ("endo", row)
    if isinstance(row, Functional):
        return ("func", row)
    raise ValueError(f"bad determinant row {row!r}")


class TriBracket:
    """3-linear alternating multiplication, defined on basis indices and
    extended trilinearly."""

    arity = 3

    def __init__(self, carrier: CarrierAlgebra):
        self.carrier = carrier

    def eval_indices(self, i, j, k) -> AlgebraElement:
        raise NotImplementedError

    def __call__(self, a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> AlgebraElement:
        for x in (a, b, c):
            if x.carrier != self.carrier:
                raise CarrierMismatchError("bracket applied to a foreign element")
        f = self.carrier.field
        total = self.carrier.zero()
        for (i, ca) in a.terms.items():
            for (j, cb) in b.terms.items():
                cab = f.mul(ca, cb)
                for (k, cc) in c.terms.items():
                    term = self.eval_indices(i, j, k)
                    if term.terms:
                        total = total + term.scale(f.mul(cab, cc))
        return total

    def describe(self) -> str:
        return type(self).__name__


class DeterminantBracket(TriBracket):
    """Formal 3x3 determinant whose rows are maps/functionals applied to the
    three arguments; functional rows contribute scalar cofactors."""

    def __init__(self, carrier: CarrierAlgebra, rows: Sequence[Row]):
        super().__init__(carrier)
        if len(rows) != 3:
            raise ValueError("a determinant bracket needs exactly three rows")
        self.rows = [_normalize_row(r) for r in rows]
        if all(kind == "func" for kind, _ in self.rows):
            raise ValueError("at least one row must be algebra valued")
        for kind, obj in self.rows:
            if kind != "id" and obj.carrier != carrier:
                raise CarrierMismatchError("row operator lives on a different carrier")

    def __call__(self, a, b, c):
        elems = (a, b, c)
        for x in elems:
            if x.carrier != self.carrier:
                raise CarrierMismatchError("bracket applied to a foreign element")
        f = self.carrier.field
        total = self.carrier.zero()
        for perm, sign in _PERMS3:
            scal = f.one if sign == 1 else f.embed(-1)
            alg: Optional[AlgebraElement] = None
            for (kind, obj), pos in zip(self.rows, perm):
                x = elems[pos]
                if kind == "func":
                    scal = f.mul(scal, obj(x))
                else:
                    val = x if kind == "id" else obj(x)
                    alg = val if alg is None else alg * val
            if not f.is_zero(scal):
                total = total + alg.scale(scal)
        return total

    def eval_indices(self, i, j, k):
        m = self.carrier.monomial
        return self(m(i), m(j), m(k))


def functional_det(f1: Functional, f2: Functional, f3: Functional,
                   a: AlgebraElement, b: AlgebraElement, c: AlgebraElement):
    """Scalar 3x3 determinant of three functionals applied to three elements."""
    field = a.field
    vals = [[f(x) for x in (a, b, c)] for f in (f1, f2, f3)]
    total = field.zero
    for perm, sign in _PERMS3:
        term = field.one
        for r, pos in enumerate(perm):
            term = field.mul(term, vals[r][pos])
        total = field.add(total, term if sign == 1 else field.neg(term))
    return total


# ---------------------------------------------------------------------------
# the three 2-ary brackets on a commutative algebra
# ---------------------------------------------------------------------------

def pair_bracket_delta(delta: Endomorphism, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """[a,b] = a D(b) - b D(a)."""
    return a * delta(b) - b * delta(a)


def pair_bracket_omega(omega: Endomorphism, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """[a,b] = w(a) b - w(b) a."""
    return omega(a) * b - omega(b) * a


def pair_bracket_omega_delta(omega: Endomorphism, delta: Endomorphism,
                             a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """[a,b] = (a - w(a)) D(b) - (b - w(b)) D(a); needs w.D + D.w = 0."""
    return (a - omega(a)) * delta(b) - (b - omega(b)) * delta(a)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _require_char_not_two(field: Field, what: str):
    if field.characteristic == 2:
        raise HypothesisViolation(f"{what} assumes characteristic != 2, got {field}")


class GroupWedgeBracket(TriBracket):
    """[e_g,e_h,e_w] = a(w-h) e_{h+w-g} + a(g-w) e_{g+w-h} + a(h-g) e_{g+h-w}
    for a group hom a: G -> F^+ (closed form of the determinant bracket with
    rows: negation involution, identity, hom-scaling derivation)."""

    def __init__(self, hom: GroupHom):
        super().__init__(hom.carrier)
        self.hom = hom

    def eval_indices(self, g, h, w):
        G: GroupAlgebra = self.carrier
        f = G.field
        out: Dict = {}
        for (x, y, z) in ((g, h, w), (h, w, g), (w, g, h)):
            # cyclic: coefficient a(z - y), target y + z - x
            c = self.hom(G.sub_indices(z, y))
            idx = G.sub_indices(G.add_indices(y, z), x)
            if not f.is_zero(c):
                s = f.add(out.get(idx, f.zero), c)
                if f.is_zero(s):
                    out.pop(idx, None)
                else:
                    out[idx] = s
        return AlgebraElement(G, out)


class LaurentFlipBracket(TriBracket):
    """[t^r,t^i,t^n] = L(r)(n_j-i_j) t^{i+n-r} + L(i)(r_j-n_j) t^{r+n-i}
    + L(n)(i_j-r_j) t^{r+i-n}, where L(r) = prod_s lambda_s^{r_s} and j is the
    distinguished variable (closed form with rows: flip involution, identity,
    scaling derivation of variable j)."""

    def __init__(self, carrier: LaurentAlgebra, lambdas: Sequence, var: int = 0):
        super().__init__(carrier)
        _require_char_not_two(carrier.field, "the flip-involution bracket")
        f = carrier.field
        self.lambdas = tuple(f.normalize(l) for l in lambdas)
        if len(self.lambdas) != carrier.nvars:
            raise ValueError("one scale factor per variable required")
        if any(f.is_zero(l) for l in self.lambdas):
            raise HypothesisViolation("the flip-involution bracket requires lambda != 0")
        self.var = var

    def _scale(self, exps):
        f = self.carrier.field
        c = f.one
        for lam, r in zip(self.lambdas, exps):
            c = f.mul(c, f.pow(lam, r))
        return c

    def eval_indices(self, r, i, n):
        f = self.carrier.field
        j = self.var
        out: Dict = {}
        for (x, y, z) in ((r, i, n), (i, n, r), (n, r, i)):
            coeff = f.mul(self._scale(x), f.embed(z[j] - y[j]))
            idx = tuple(b + c - a for a, b, c in zip(x, y, z))
            if not f.is_zero(coeff):
                s = f.add(out.get(idx, f.zero), coeff)
                if f.is_zero(s):
                    out.pop(idx, None)
                else:
                    out[idx] = s
        return AlgebraElement(self.carrier, out)


def parity_coefficient(field: Field, l: int, m: int, n: int):
    """(-1)^l (n-m) + (-1)^m (l-n) + (-1)^n (m-l), embedded into the field."""
    def sgn(e):
        return -1 if e % 2 else 1

    return field.embed(sgn(l) * (n - m) + sgn(m) * (l - n) + sgn(n) * (m - l))


class LaurentParityBracket(TriBracket):
    """[t^l,t^m,t^n] = {(-1)^l(n-m)+(-1)^m(l-n)+(-1)^n(m-l)} t^{l+m+n+shift-1}.

    shift = 2k is the closed form with rows (sign involution, identity,
    t^{2k} d/dt); shift = 0 is the plain-derivative form.
    """

    def __init__(self, carrier: LaurentAlgebra, shift: int = 0):
        super().__init__(carrier)
        if carrier.nvars != 1:
            raise ValueError("parity bracket is one-variable")
        _require_char_not_two(carrier.field, "the parity-coefficient bracket")
        self.shift = shift

    def eval_indices(self, li, mi, ni):
        l, m, n = li[0], mi[0], ni[0]
        c = parity_coefficient(self.carrier.field, l, m, n)
        return self.carrier.monomial((l + m + n + self.shift - 1,), c)


class QuotientParityBracket(TriBracket):
    """The parity-coefficient bracket on the 2p-dimensional quotient carrier
    with exponents identified modulo t^p = t^-p; requires ch F = p > 2."""

    def __init__(self, carrier: QuotientLaurentAlgebra):
        super().__init__(carrier)
        p = carrier.p
        if p <= 2:
            raise HypothesisViolation("the quotient bracket requires p > 2")
        if carrier.field.characteristic != p:
            raise HypothesisViolation(
                f"the quotient bracket requires ch F = p = {p}, "
                f"got {carrier.field}"
            )

    def eval_indices(self, l, m, n):
        Q: QuotientLaurentAlgebra = self.carrier
        c = parity_coefficient(Q.field, l, m, n)
        return Q.monomial(Q.reduce_exponent(l + m + n - 1), c)


class MonomialBracket(TriBracket):
    """[e_a,e_b,e_c] = f(a,b,c) e_{a+b+c+t} for a skew coefficient function f
    and a fixed shift t; skewness of f is validated on sampled triples."""

    def __init__(self, carrier: CarrierAlgebra, coeff_fn: Callable, t_shift,
                 skew_samples: int = 60, seed: int = 0):
        super().__init__(carrier)
        self.coeff_fn = coeff_fn
        self.t_shift = t_shift
        carrier.validate_index(t_shift)
        self._validate_skew(skew_samples, seed)

    def _validate_skew(self, samples, seed):
        rng = random.Random(seed)
        f = self.carrier.field
        window = self.carrier.window(3)
        for _ in range(samples):
            a, b, c = (rng.choice(window) for _ in range(3))
            base = self.coeff_fn(a, b, c)
            for perm, sign in _PERMS3:
                args = [(a, b, c)[t] for t in perm]
                got = self.coeff_fn(*args)
                want = base if sign == 1 else f.neg(base)
                if got != want:
                    raise ValueError(
                        f"coefficient function is not skew-symmetric at {args}"
                    )

    def _index_sum(self, parts):
        idx = None
        for q in parts:
            if idx is None:
                idx = q
                continue
            terms = self.carrier.mul_indices(idx, q)
            if len(terms) != 1:
                raise ValueError("monomial bracket needs a single-term index product")
            idx = terms[0][0]
        return idx

    def eval_indices(self, a, b, c):
        coeff = self.coeff_fn(a, b, c)
        idx = self._index_sum([a, b, c, self.t_shift])
        return self.carrier.monomial(idx, coeff)


def parity_determinant_coefficient(field: Field):
    """The skew function f(l,m,n) = det[[(-1)^l,(-1)^m,(-1)^n],[1,1,1],[l,m,n]]
    on integer (1-tuple) indices; equals the parity coefficient."""

    def f(a, b, c):
        return parity_coefficient(field, a[0], b[0], c[0])

    return f


class StructureBackedBracket(TriBracket):
    """Bracket of a tabulated algebra, replayed on a finite carrier whose
    ordered basis indexes the structure constants."""

    def __init__(self, algebra: FiniteNLieAlgebra, carrier: CarrierAlgebra,
                 basis_order: Sequence):
        super().__init__(carrier)
        if algebra.dim != len(basis_order):
            raise ValueError("basis order does not match the algebra dimension")
        self.algebra = algebra
        self.basis_order = list(basis_order)
        self.pos = {idx: k for k, idx in enumerate(basis_order)}

    def eval_indices(self, i, j, k):
        vec = self.algebra.bracket_indices((self.pos[i], self.pos[j], self.pos[k]))
        f = self.carrier.field
        return AlgebraElement(
            self.carrier, {self.basis_order[l]: c for l, c in vec.items()}
        )


# ---------------------------------------------------------------------------
# tabulation
# ---------------------------------------------------------------------------

@dataclass
class ClosureFailure:
    triple: tuple
    escaped_index: object
    value: str

    def __str__(self):
        return f"bracket of {self.triple} escapes the basis at {self.escaped_index}"


def tabulate(bracket: TriBracket, basis: Sequence, name: str = "") -> Union[FiniteNLieAlgebra, ClosureFailure]:
    """Materialize a bracket as structure constants over an ordered basis.

    Returns the first escaping triple as a `ClosureFailure` value when the
    basis is not closed (expected for un-truncated Laurent families).
    """
    carrier = bracket.carrier
    pos = {idx: k for k, idx in enumerate(basis)}
    f = carrier.field
    constants = {}
    for (a, b, c) in itertools.combinations(range(len(basis)), 3):
        elem = bracket.eval_indices(basis[a], basis[b], basis[c])
        vec = {}
        for idx, coeff in elem.terms.items():
            if idx not in pos:
                labels = (carrier.index_str(basis[a]), carrier.index_str(basis[b]),
                          carrier.index_str(basis[c]))
                return ClosureFailure(labels, carrier.index_str(idx), str(elem))
            vec[pos[idx]] = coeff
        if vec:
            constants[(a, b, c)] = vec
    labels = [carrier.index_str(i) for i in basis]
    return FiniteNLieAlgebra(f, len(basis), 3, constants, labels, name=name)


# ---------------------------------------------------------------------------
# bracket-level checks
# ---------------------------------------------------------------------------

def check_alternating(bracket: TriBracket, window: Sequence, seed: int = 0,
                      samples: int = 40) -> CheckReport:
    """Repeated arguments vanish; permutations flip signs (sampled)."""
    carrier = bracket.carrier
    f = carrier.field
    rng = random.Random(seed)
    checked = 0
    failures = []
    for i, j in itertools.product(window[: min(len(window), 8)], repeat=2):
        val = bracket.eval_indices(i, i, j)
        checked += 1
        if not val.is_zero() and len(failures) < 5:
            failures.append({"triple": [carrier.index_str(i)] * 2 + [carrier.index_str(j)],
                             "value": str(val)})
    for _ in range(samples):
        a, b, c = (rng.choice(window) for _ in range(3))
        base = bracket.eval_indices(a, b, c)
        for perm, sign in _PERMS3:
            args = [(a, b, c)[t] for t in perm]
            got = bracket.eval_indices(*args)
            want = base if sign == 1 else base.scale(f.embed(-1))
            checked += 1
            if got != want and len(failures) < 5:
                failures.append({"triple": [carrier.index_str(x) for x in args],
                                 "got": str(got), "want": str(want)})
    return CheckReport("alternating multiplication", not failures, checked, failures)


def check_trilinear(bracket: TriBracket, window: Sequence, seed: int = 0,
                    samples: int = 25) -> CheckReport:
    """eval(ax+by, c, d) = a eval(x,c,d) + b eval(y,c,d) on random elements."""
    carrier = bracket.carrier
    f = carrier.field
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x, y, c, d = (carrier.monomial(rng.choice(window)) for _ in range(4))
        a_s, b_s = f.random_element(rng), f.random_element(rng)
        lhs = bracket(x.scale(a_s) + y.scale(b_s), c, d)
        rhs = bracket(x, c, d).scale(a_s) + bracket(y, c, d).scale(b_s)
        if lhs != rhs and len(failures) < 5:
            failures.append({"got": str(lhs), "want": str(rhs)})
    return CheckReport("trilinearity", not failures, samples, failures)


def check_agreement(closed: TriBracket, oracle: TriBracket, window: Sequence) -> CheckReport:
    """Exact equality of two brackets on every ordered window triple."""
    checked = 0
    failures = []
    carrier = closed.carrier
    for a, b, c in itertools.product(window, repeat=3):
        lhs = closed.eval_indices(a, b, c)
        rhs = oracle.eval_indices(a, b, c)
        checked += 1
        if lhs != rhs and len(failures) < 5:
            failures.append({
                "triple": [carrier.index_str(x) for x in (a, b, c)],
                "closed": str(lhs), "determinant": str(rhs),
            })
    return CheckReport("closed form agrees with determinant oracle",
                       not failures, checked, failures)


def check_involution_antisymmetry(bracket: TriBracket, omega: Endomorphism,
                                  window: Sequence) -> CheckReport:
    """w([x,y,z]) = -[w(x), w(y), w(z)] on all window triples."""
    carrier = bracket.carrier
    f = carrier.field
    checked = 0
    failures = []
    for a, b, c in itertools.combinations(window, 3):
        xs = [carrier.monomial(i) for i in (a, b, c)]
        lhs = omega(bracket(*xs))
        rhs = bracket(*[omega(x) for x in xs]).scale(f.embed(-1))
        checked += 1
        if lhs != rhs and len(failures) < 5:
            failures.append({"triple": [carrier.index_str(x) for x in (a, b, c)],
                             "lhs": str(lhs), "rhs": str(rhs)})
    return CheckReport("involution anti-equivariance", not failures, checked, failures)


# ---------------------------------------------------------------------------
# fundamental identity on a monomial window (for infinite carriers)
# ---------------------------------------------------------------------------

def check_fi_window(bracket: TriBracket, window: Sequence, mode: str = "exhaustive",
                    samples: int = 500, seed: int = 0) -> CheckReport:
    """Fundamental-identity residual on window basis 5-tuples, evaluated
    exactly in the carrier (results may leave the window; that is fine).

    Exhaustive mode enumerates strictly increasing x-triples and y-pairs; the
    residual is alternating in both groups, so this covers the full
    |window|^5 tuple space, which is what `notes["covered"]` counts.  Sampled
    mode draws seeded arbitrary tuples instead.
    """
    carrier = bracket.carrier

    def residual_case(xs, ys):
        ex = [carrier.monomial(i) for i in xs]
        ey = [carrier.monomial(i) for i in ys]
        lhs = bracket(bracket(*ex), *ey)
        rhs = carrier.zero()
        for t in range(3):
            args = list(ex)
            args[t] = bracket(ex[t], *ey)
            rhs = rhs + bracket(*args)
        return lhs - rhs

    checked = 0
    failures = []
    if mode == "exhaustive":
        cases = ((xs, ys) for xs in itertools.combinations(window, 3)
                 for ys in itertools.combinations(window, 2))
    elif mode == "sampled":
        rng = random.Random(seed)
        cases = (
            (tuple(rng.choice(window) for _ in range(3)),
             tuple(rng.choice(window) for _ in range(2)))
            for _ in range(samples)
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for xs, ys in cases:
        res = residual_case(xs, ys)
        checked += 1
        if not res.is_zero() and len(failures) < 5:
            failures.append({
                "x": [carrier.index_str(i) for i in xs],
                "y": [carrier.index_str(i) for i in ys],
                "residual": str(res),
            })
    return CheckReport("fundamental identity on the window", not failures,
                       checked, failures, notes={"covered": len(window) ** 5})


# ---------------------------------------------------------------------------
# homomorphisms between brackets
# ---------------------------------------------------------------------------

def check_homomorphism(sigma: Endomorphism, source: TriBracket, target: TriBracket,
                       window: Sequence,
                       intertwine: Sequence[Tuple[str, Endomorphism, Endomorphism]] = (),
                       require_invertible: bool = False,
                       exclude_indices: Sequence = ()) -> CheckReport:
    """sigma([a,b,c]_src) = [sigma a, sigma b, sigma c]_tgt on window triples.

    `intertwine` entries (name, m_src, m_tgt) additionally assert
    sigma . m_src = m_tgt . sigma on window singletons.  When the maps carry
    an isomorphism claim, `require_invertible` checks that sigma sends window
    monomials to nonzero single terms with pairwise distinct indices.
    `exclude_indices` drops selected window indices (with the exclusion noted
    in the report) for maps whose rule degenerates there.
    """
    carrier = source.carrier
    f = carrier.field
    excluded = set(exclude_indices)
    win = [i for i in window if i not in excluded]
    checked = 0
    failures = []
    notes: Dict[str, object] = {}
    if excluded:
        notes["excluded_indices"] = [carrier.index_str(i) for i in excluded]
        u = carrier.unit_index()
        if u is not None:
            img = sigma(carrier.monomial(u))
            notes["unit_image"] = str(img)
            notes["unit_fixed"] = img == carrier.monomial(u)

    for a, b, c in itertools.combinations(win, 3):
        xs = [carrier.monomial(i) for i in (a, b, c)]
        lhs = sigma(source(*xs))
        rhs = target(*[sigma(x) for x in xs])
        checked += 1
        if lhs != rhs and len(failures) < 5:
            failures.append({"triple": [carrier.index_str(x) for x in (a, b, c)],
                             "lhs": str(lhs), "rhs": str(rhs)})

    details = {}
    for name, m_src, m_tgt in intertwine:
        sub_fail = []
        for i in win:
            x = carrier.monomial(i)
            lhs = sigma(m_src(x))
            rhs = m_tgt(sigma(x))
            if lhs != rhs and len(sub_fail) < 5:
                sub_fail.append({"index": carrier.index_str(i),
                                 "lhs": str(lhs), "rhs": str(rhs)})
        details[name] = CheckReport(f"sigma.{name}_src = {name}_tgt.sigma",
                                    not sub_fail, len(win), sub_fail)

    if require_invertible:
        seen = {}
        inv_fail = []
        for i in win:
            img = sigma(carrier.monomial(i))
            if len(img.terms) != 1:
                inv_fail.append({"index": carrier.index_str(i), "image": str(img)})
                continue
            (j, coeff), = img.terms.items()
            if f.is_zero(coeff) or j in seen:
                inv_fail.append({"index": carrier.index_str(i), "image": str(img)})
            seen[j] = i
        details["invertible_on_window"] = CheckReport(
            "sigma maps window monomials to distinct nonzero monomials",
            not inv_fail, len(win), inv_fail[:5])

    passed = not failures and all(r.passed for r in details.values())
    return CheckReport("sigma([a,b,c]) = [sigma a, sigma b, sigma c]",
                       passed, checked, failures, details, notes)


# ---------------------------------------------------------------------------
# plus/minus grading under an involution
# ---------------------------------------------------------------------------

def check_grading(bracket: TriBracket, delta: Optional[Endomorphism],
                  plus_elements: Sequence[AlgebraElement],
                  minus_elements: Sequence[AlgebraElement],
                  window: Sequence) -> CheckReport:
    """Both graded pieces are abelian and the derivation swaps them.

    plus/minus must decompose the window span as a direct sum (checked, a
    failure raises).  Asserted: triple brackets inside each piece vanish and
    delta maps each piece into the other; mixed triples are only observed and
    reported, never asserted zero.
    """
    from .carriers import coordinates
    from .linalg import SpanBuilder

    carrier = bracket.carrier
    f = carrier.field
    plus_coords = [coordinates(x, window) for x in plus_elements]
    minus_coords = [coordinates(x, window) for x in minus_elements]
    sb = SpanBuilder(f, len(window))
    for v in plus_coords + minus_coords:
        if not sb.add(v):
            raise ValueError("plus/minus generators are not independent")
    if sb.dim != len(window):
        raise ValueError("plus + minus does not span the enumerated window")

    checked = 0
    failures = []
    for name, part in (("plus", plus_elements), ("minus", minus_elements)):
        for xs in itertools.combinations(part, 3):
            val = bracket(*xs)
            checked += 1
            if not val.is_zero() and len(failures) < 5:
                failures.append({"part": name, "value": str(val)})

    details = {}
    if delta is not None:
        plus_span = SpanBuilder(f, len(window))
        for v in plus_coords:
            plus_span.add(v)
        minus_span = SpanBuilder(f, len(window))
        for v in minus_coords:
            minus_span.add(v)
        swap_fail = []
        for x in plus_elements:
            if not minus_span.contains(coordinates(delta(x), window)):
                swap_fail.append({"from": "plus", "element": str(x), "image": str(delta(x))})
        for x in minus_elements:
            if not plus_span.contains(coordinates(delta(x), window)):
                swap_fail.append({"from": "minus", "element": str(x), "image": str(delta(x))})
        details["delta_swaps_pieces"] = CheckReport(
            "delta(plus) in minus and delta(minus) in plus",
            not swap_fail, len(plus_elements) + len(minus_elements), swap_fail[:5])

    mixed_nonzero = 0
    mixed_total = 0
    for xs in itertools.product(plus_elements, plus_elements, minus_elements):
        mixed_total += 1
        if not bracket(*xs).is_zero():
            mixed_nonzero += 1
    notes = {"mixed_triples_observed": mixed_total,
             "mixed_triples_nonzero": mixed_nonzero}

    passed = not failures and all(r.passed for r in details.values())
    return CheckReport("graded pieces are abelian subalgebras", passed, checked,
                       failures, details, notes)


# ---------------------------------------------------------------------------
# Laurent divisibility and ideal membership
# ---------------------------------------------------------------------------

def laurent_divmod(numer: AlgebraElement, denom: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """Exact division in a one-variable Laurent ring: numer = q*denom + r.

    Both are shifted to honest polynomials (the denominator acquiring a
    nonzero constant term), divided there, and shifted back; r = 0 certifies
    divisibility in the Laurent ring.
    """
    carrier = numer.carrier
    if not isinstance(carrier, LaurentAlgebra) or carrier.nvars != 1:
        raise ValueError("laurent_divmod is one-variable")
    if denom.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    f = carrier.field
    if numer.is_zero():
        return carrier.zero(), carrier.zero()
    n_exps = [e[0] for e in numer.terms]
    d_exps = [e[0] for e in denom.terms]
    n_min, d_min = min(n_exps), min(d_exps)
    deg_n = max(n_exps) - n_min
    deg_d = max(d_exps) - d_min
    N = [f.zero] * (deg_n + 1)
    for (e,), c in numer.terms.items():
        N[e - n_min] = c
    D = [f.zero] * (deg_d + 1)
    for (e,), c in denom.terms.items():
        D[e - d_min] = c
    lead_inv = f.inv(D[deg_d])
    Q = [f.zero] * max(deg_n - deg_d + 1, 0)
    for k in range(deg_n - deg_d, -1, -1):
        c = f.mul(N[k + deg_d], lead_inv)
        if f.is_zero(c):
            continue
        Q[k] = c
        for t, dcoeff in enumerate(D):
            N[k + t] = f.sub(N[k + t], f.mul(c, dcoeff))
    shift = n_min - d_min
    quot = carrier.element({(k + shift,): c for k, c in enumerate(Q)})
    rem = carrier.element({(k + n_min,): c for k, c in enumerate(N)})
    return quot, rem


def check_principal_ideal_membership(bracket: TriBracket, generator: AlgebraElement,
                                     cofactor_exponents: Sequence[int],
                                     argument_bound: int) -> CheckReport:
    """All brackets [g*t^j, t^a, t^b] are divisible by g, by exact division."""
    carrier = bracket.carrier
    checked = 0
    failures = []
    for j in cofactor_exponents:
        x = generator * carrier.monomial((j,))
        for a in range(-argument_bound, argument_bound + 1):
            for b in range(-argument_bound, argument_bound + 1):
                val = bracket(x, carrier.monomial((a,)), carrier.monomial((b,)))
                checked += 1
                if val.is_zero():
                    continue
                _, rem = laurent_divmod(val, generator)
                if not rem.is_zero() and len(failures) < 5:
                    failures.append({"cofactor": j, "args": [a, b],
                                     "value": str(val), "remainder": str(rem)})
    return CheckReport("bracket values stay divisible by the ideal generator",
                       not failures, checked, failures)


# ---------------------------------------------------------------------------
# kernel ideal certification for finite group algebras
# ---------------------------------------------------------------------------

def group_kernel_certificate(hom: GroupHom, seed: int = 0, spot_samples: int = 400):
    """Non-simplicity certificate for the group-algebra wedge bracket: the
    kernel of phi(x) = sum lambda_g alpha(g) is a maximal ideal.

    Works at carrier level so it scales to group algebras whose structure
    constants could not be tabulated (dimension in the hundreds).  The
    phi-value of a basis bracket depends only on the triple of hom values
    (phi([e_g,e_h,e_w]) = P(alpha(g),alpha(h),alpha(w)) with
    P(a,b,c) = (c-b)(b+c-a)+(a-c)(a+c-b)+(b-a)(a+b-c)), so checking P = 0 on
    every triple of attained hom values covers every basis triple exactly;
    seeded direct evaluations cross-check that factorization.

    Returns (SimplicityCertificate, CheckReport).
    """
    from .linalg import kernel_of_functional
    from .structure import SimplicityCertificate
    from .carriers import GroupHomFunctional, Functional

    G = hom.carrier
    if G.dim() is None:
        raise ValueError("kernel certification needs a finite group algebra")
    if hom.is_zero():
        raise HypothesisViolation("the hom must be nonzero for a maximal kernel ideal")
    f = G.field
    basis = G.basis_indices()
    values = [hom(g) for g in basis]
    ker = kernel_of_functional(f, values)

    def P(a, b, c):
        return f.add(
            f.add(f.mul(f.sub(c, b), f.sub(f.add(b, c), a)),
                  f.mul(f.sub(a, c), f.sub(f.add(a, c), b))),
            f.mul(f.sub(b, a), f.sub(f.add(a, b), c)),
        )

    attained = sorted(set(values), key=f.render)
    failures = []
    checked = 0
    for a in attained:
        for b in attained:
            for c in attained:
                checked += 1
                if not f.is_zero(P(a, b, c)) and len(failures) < 5:
                    failures.append({"hom_values": [f.render(x) for x in (a, b, c)]})

    # seeded spot checks: evaluate actual brackets and compare with the fiber
    # polynomial, and probe [v, e_A, e_B] membership for v in the kernel
    rng = random.Random(seed)
    bracket = GroupWedgeBracket(hom)
    phi = Functional(G, GroupHomFunctional(hom))
    for _ in range(spot_samples):
        g, h, w = (rng.choice(basis) for _ in range(3))
        val = phi(bracket.eval_indices(g, h, w))
        checked += 1
        if val != P(hom(g), hom(h), hom(w)) or not f.is_zero(val):
            if len(failures) < 5:
                failures.append({"triple": [G.index_str(x) for x in (g, h, w)],
                                 "phi": f.render(val)})
    for _ in range(spot_samples // 4):
        v = G.zero()
        for _ in range(2):
            row = ker.basis[rng.randrange(len(ker.basis))]
            v = v + G.element({basis[i]: c for i, c in enumerate(row)
                               if not f.is_zero(c)})
        x = bracket(v, G.monomial(rng.choice(basis)), G.monomial(rng.choice(basis)))
        checked += 1
        if not f.is_zero(phi(x)) and len(failures) < 5:
            failures.append({"kernel_probe": str(x)})

    report = CheckReport(
        "phi vanishes on every bracket (kernel is a maximal ideal)",
        not failures, checked, failures,
        notes={"kernel_dim": ker.dim, "codim": ker.codim,
               "hom_value_classes": len(attained)})
    cert = SimplicityCertificate(
        "non-simple" if report.passed else "evidence-only",
        "kernel-functional", checked, ker if report.passed else None, seed=seed,
        notes={"witness": "kernel of the hom functional",
               "derived_algebra_inside_witness": report.passed})
    return cert, report


# ---------------------------------------------------------------------------
# window evidence for the plain-derivative Laurent family over char 0
# ---------------------------------------------------------------------------

def check_parity_family_vanishing(field: Field, bound: int) -> CheckReport:
    """The coefficient of [t^l, t^m, t^{-m+1}] under the plain-derivative
    parity bracket vanishes exactly when l = m or l = -m+1."""
    checked = 0
    failures = []
    for l in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            c = parity_coefficient(field, l, m, -m + 1)
            expect_zero = l == m or l == -m + 1
            checked += 1
            if field.is_zero(c) != expect_zero and len(failures) < 5:
                failures.append({"l": l, "m": m, "coefficient": field.render(c)})
    return CheckReport("coefficient vanishing classification", not failures,
                       checked, failures)


def laurent_reachability(field: Field, bound: int, arg_bound: Optional[int] = None) -> CheckReport:
    """Every window monomial reaches every other by one plain-derivative
    parity bracket whose two other arguments stay in a slightly larger
    window (ideal-closure evidence)."""
    window = range(-bound, bound + 1)
    if arg_bound is None:
        arg_bound = bound + 2
    args = range(-arg_bound, arg_bound + 1)
    checked = 0
    failures = []
    for j in window:
        for l in window:
            ok = False
            for a in args:
                for b in args:
                    if j + a + b - 1 == l and not field.is_zero(
                        parity_coefficient(field, j, a, b)
                    ):
                        ok = True
                        break
                if ok:
                    break
            checked += 1
            if not ok and len(failures) < 5:
                failures.append({"from": j, "to": l})
    return CheckReport("window monomials generate each other", not failures,
                       checked, failures)
