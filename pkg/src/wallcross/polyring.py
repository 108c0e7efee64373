"""Multivariate polynomials over Q and a Groebner-basis ideal calculus.

The ring keeps a fixed tuple of variable names; polynomials store a dict from
exponent tuples to nonzero Fraction coefficients.  All ideal operations reduce
to computing the unique reduced monic Groebner basis under a chosen monomial
order (Buchberger with normal pair selection, the coprime-leading-term
criterion and the chain criterion, followed by minimalization and
interreduction), so every operation is exact and deterministic.

Intersections use the classic single-tag trick ``I ∩ J = (w·I + (1-w)·J) ∩ k[x]``
with a block elimination order; colon ideals divide the intersection with a
principal ideal; elimination restricts a block-order basis to the subring.
The variable ``w`` is reserved for intersections and may not appear in any
ring the caller builds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Block",
    "DEGREVLEX",
    "DegRevLex",
    "Exponents",
    "Ideal",
    "Lex",
    "MonomialOrder",
    "Polynomial",
    "PolynomialRing",
    "eliminate",
    "groebner",
    "ideal_colon",
    "ideal_equal",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "member",
    "normal_form",
]

Exponents = tuple[int, ...]
Coefficient = Union[int, Fraction]

_INTERSECTION_TAG = "w"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Base for total orders on exponent tuples; larger key = larger monomial."""

    def key(self, ring: "PolynomialRing") -> Callable[[Exponents], object]:
        raise NotImplementedError

    def cache_token(self, ring: "PolynomialRing") -> object:
        raise NotImplementedError


class DegRevLex(MonomialOrder):
    """Graded reverse lexicographic order (the default everywhere)."""

    def key(self, ring: "PolynomialRing") -> Callable[[Exponents], object]:
        def k(e: Exponents) -> object:
            return (sum(e), tuple(-x for x in reversed(e)))

        return k

    def cache_token(self, ring: "PolynomialRing") -> object:
        return "degrevlex"

    def __repr__(self) -> str:
        return "DegRevLex()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DegRevLex)

    def __hash__(self) -> int:
        return hash("degrevlex")


class Lex(MonomialOrder):
    """Lexicographic order; ``priority`` lists variables from most significant.

    Omitted variables rank after the listed ones, in ring order.
    """

    def __init__(self, priority: Sequence[str] = ()):  # noqa: D401
        self.priority = tuple(priority)

    def _permutation(self, ring: "PolynomialRing") -> tuple[int, ...]:
        for name in self.priority:
            if name not in ring.index:
                raise ValueError(f"unknown variable in Lex priority: {name!r}")
        listed = [ring.index[name] for name in self.priority]
        rest = [i for i, v in enumerate(ring.variables) if v not in self.priority]
        return tuple(listed + rest)

    def key(self, ring: "PolynomialRing") -> Callable[[Exponents], object]:
        perm = self._permutation(ring)

        def k(e: Exponents) -> object:
            return tuple(e[i] for i in perm)

        return k

    def cache_token(self, ring: "PolynomialRing") -> object:
        return ("lex", self._permutation(ring))

    def __repr__(self) -> str:
        return f"Lex({self.priority!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lex) and self.priority == other.priority

    def __hash__(self) -> int:
        return hash(("lex", self.priority))


class Block(MonomialOrder):
    """Elimination order: grevlex on the block ``elim``, then grevlex on the rest.

    Any monomial containing an ``elim`` variable beats any monomial without,
    so a Groebner basis under this order intersects cleanly with the subring.
    """

    def __init__(self, elim: Iterable[str]):
        self.elim = frozenset(elim)
        if not self.elim:
            raise ValueError("elimination block must be nonempty")

    def _split(self, ring: "PolynomialRing") -> tuple[tuple[int, ...], tuple[int, ...]]:
        for name in self.elim:
            if name not in ring.index:
                raise ValueError(f"unknown variable in elimination block: {name!r}")
        first = tuple(i for i, v in enumerate(ring.variables) if v in self.elim)
        rest = tuple(i for i, v in enumerate(ring.variables) if v not in self.elim)
        return first, rest

    def key(self, ring: "PolynomialRing") -> Callable[[Exponents], object]:
        first, rest = self._split(ring)

        def k(e: Exponents) -> object:
            block = tuple(e[i] for i in first)
            tail = tuple(e[i] for i in rest)
            return (
                sum(block),
                tuple(-x for x in reversed(block)),
                sum(tail),
                tuple(-x for x in reversed(tail)),
            )

        return k

    def cache_token(self, ring: "PolynomialRing") -> object:
        return ("block", self._split(ring)[0])

    def __repr__(self) -> str:
        return f"Block({sorted(self.elim)!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Block) and self.elim == other.elim

    def __hash__(self) -> int:
        return hash(("block", self.elim))


DEGREVLEX = DegRevLex()


# ---------------------------------------------------------------------------
# ring and polynomials
# ---------------------------------------------------------------------------

class PolynomialRing:
    """Q[variables] with a fixed, ordered tuple of distinct variable names."""

    __slots__ = ("variables", "index")

    def __init__(self, variables: Sequence[str]):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"bad variable name: {name!r}")
        self.variables = names
        self.index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.variables)})"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coefficient) -> "Polynomial":
        c = Fraction(c)
        zero = (0,) * self.nvars
        return Polynomial(self, {zero: c} if c else {})

    def variable(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise ValueError(f"{name!r} is not a variable of {self!r}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(v) for v in self.variables)

    def parse(self, text: str) -> "Polynomial":
        return _parse(self, text)

    def parse_list(self, text: str) -> tuple["Polynomial", ...]:
        """Parse a comma-separated list of polynomials."""
        parts = _split_top_level(text)
        return tuple(self.parse(p) for p in parts if p.strip())


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Exponents, Coefficient]):
        clean: dict[Exponents, Fraction] = {}
        n = ring.nvars
        for exps, coef in terms.items():
            c = Fraction(coef)
            if not c:
                continue
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {ring!r}")
            clean[exps] = c
        self.ring = ring
        self.terms = clean

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def coefficient_of(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError(f"mixed rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Polynomial | Coefficient") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial | Coefficient") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> "Polynomial":
        return self.ring.constant(other) - self

    def __mul__(self, other: "Polynomial | Coefficient") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self, keyf: Callable[[Exponents], object]) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[max(self.terms, key=keyf)]
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    def leading(self, keyf: Callable[[Exponents], object]) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=keyf)
        return e, self.terms[e]

    # -- calculus and substitution -------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.index[name]
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            terms[tuple(e2)] = c * e[i]
        return Polynomial(self.ring, terms)

    def substitute(self, assignment: Mapping[str, "Polynomial | Coefficient"]) -> "Polynomial":
        """Substitute values or polynomials (same ring) for some variables."""
        for name in assignment:
            if name not in self.ring.index:
                raise ValueError(f"{name!r} is not a variable of {self.ring!r}")
        values: dict[int, Polynomial] = {}
        for name, value in assignment.items():
            if isinstance(value, Polynomial):
                self._check(value)
                values[self.ring.index[name]] = value
            else:
                values[self.ring.index[name]] = self.ring.constant(value)
        out = self.ring.zero()
        for e, c in self.terms.items():
            part = self.ring.constant(c)
            kept = list(e)
            for i, val in values.items():
                if e[i]:
                    part = part * val ** e[i]
                    kept[i] = 0
            mono = Polynomial(self.ring, {tuple(kept): Fraction(1)})
            out = out + part * mono
        return out

    def evaluate(self, assignment: Mapping[str, Coefficient]) -> Fraction:
        """Evaluate at a full rational point."""
        missing = set(self.ring.variables) - set(assignment)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        total = Fraction(0)
        point = [Fraction(assignment[v]) for v in self.ring.variables]
        for e, c in self.terms.items():
            val = c
            for x, k in zip(point, e):
                if k:
                    val *= x ** k
            total += val
        return total

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keyf = DEGREVLEX.key(self.ring)
        parts: list[str] = []
        for e in sorted(self.terms, key=keyf, reverse=True):
            c = self.terms[e]
            factors = [
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.ring.variables, e)
                if k
            ]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self}>"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str]] = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("num", text[i:j]))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
            elif ch in "+-*^()/":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial {text!r}")
        self.pos = 0

    def peek(self) -> str:
        return self.toks[self.pos][0] if self.pos < len(self.toks) else ""

    def next(self) -> tuple[str, str]:
        if self.pos >= len(self.toks):
            raise ValueError("unexpected end of polynomial text")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok


def _parse(ring: PolynomialRing, text: str) -> Polynomial:
    """Parse the documented text form (sums of ``*``-joined power products with
    rational coefficients); parenthesized subexpressions are accepted too."""
    toks = _Tokens(text)
    poly = _parse_expr(ring, toks)
    if toks.peek():
        raise ValueError(f"trailing input in polynomial {text!r}")
    return poly


def _parse_expr(ring: PolynomialRing, toks: _Tokens) -> Polynomial:
    sign = 1
    while toks.peek() in ("+", "-"):
        if toks.next()[0] == "-":
            sign = -sign
    out = _parse_term(ring, toks) * sign
    while toks.peek() in ("+", "-"):
        sign = 1
        while toks.peek() in ("+", "-"):
            if toks.next()[0] == "-":
                sign = -sign
        out = out + _parse_term(ring, toks) * sign
    return out


def _parse_term(ring: PolynomialRing, toks: _Tokens) -> Polynomial:
    out = _parse_factor(ring, toks)
    while toks.peek() == "*":
        toks.next()
        out = out * _parse_factor(ring, toks)
    return out


def _parse_factor(ring: PolynomialRing, toks: _Tokens) -> Polynomial:
    base = _parse_atom(ring, toks)
    if toks.peek() == "^":
        toks.next()
        kind, val = toks.next()
        if kind != "num":
            raise ValueError("exponent must be a nonnegative integer")
        return base ** int(val)
    return base


def _parse_atom(ring: PolynomialRing, toks: _Tokens) -> Polynomial:
    kind, val = toks.next()
    if kind == "num":
        num = int(val)
        if toks.peek() == "/":
            toks.next()
            kind2, val2 = toks.next()
            if kind2 != "num":
                raise ValueError("denominator must be an integer")
            return ring.constant(Fraction(num, int(val2)))
        return ring.constant(num)
    if kind == "name":
        return ring.variable(val)
    if kind == "(":
        inner = _parse_expr(ring, toks)
        kind2, _ = toks.next()
        if kind2 != ")":
            raise ValueError("expected closing parenthesis")
        return inner
    if kind == "-":
        return -_parse_factor(ring, toks)
    raise ValueError(f"unexpected token {val!r} in polynomial")


# ---------------------------------------------------------------------------
# division and Buchberger
# ---------------------------------------------------------------------------

def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))

def _mono_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))

def _mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))

def _mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def normal_form(
    p: Polynomial,
    basis: Sequence[Polynomial],
    keyf: Callable[[Exponents], object] | None = None,
) -> Polynomial:
    """Fully reduce ``p`` modulo ``basis``: no term of the result is divisible
    by any basis leading monomial.  Reducers are tried in basis order, which
    makes the computation deterministic for a fixed basis."""
    if keyf is None:
        keyf = DEGREVLEX.key(p.ring)
    leads = [(g.leading(keyf), g) for g in basis if g]
    work = dict(p.terms)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        e = max(work, key=keyf)
        c = work.pop(e)
        for (le, lc), g in leads:
            if _divides(le, e):
                shift = _mono_div(e, le)
                factor = c / lc
                for ge, gc in g.terms.items():
                    if ge == le:
                        continue
                    te = _mono_mul(ge, shift)
                    s = work.get(te, Fraction(0)) - factor * gc
                    if s:
                        work[te] = s
                    else:
                        work.pop(te, None)
                break
        else:
            remainder[e] = c
    return Polynomial(p.ring, remainder)


def _spoly(f: Polynomial, g: Polynomial, keyf: Callable[[Exponents], object]) -> Polynomial:
    (fe, fc) = f.leading(keyf)
    (ge, gc) = g.leading(keyf)
    lcm = _mono_lcm(fe, ge)
    mf = Polynomial(f.ring, {_mono_div(lcm, fe): Fraction(1) / fc})
    mg = Polynomial(g.ring, {_mono_div(lcm, ge): Fraction(1) / gc})
    return mf * f - mg * g


def _buchberger(gens: Sequence[Polynomial], ring: PolynomialRing,
                keyf: Callable[[Exponents], object]) -> list[Polynomial]:
    basis = [g.monic(keyf) for g in gens if g]
    if not basis:
        return []
    if any(g.is_constant() for g in basis):
        return [ring.one()]
    leads = [g.leading(keyf)[0] for g in basis]
    pairs: set[tuple[int, int]] = {
        (i, j) for j in range(len(basis)) for i in range(j)
    }
    while pairs:
        # normal selection: smallest lcm of leading monomials, ties by index
        i, j = min(pairs, key=lambda ij: (keyf(_mono_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        lcm = _mono_lcm(leads[i], leads[j])
        # coprime leading terms: S-polynomial reduces to zero
        if lcm == _mono_mul(leads[i], leads[j]):
            continue
        # chain criterion: some k with LM_k | lcm and both side pairs resolved
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(leads[k], lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 not in pairs and p2 not in pairs:
                skip = True
                break
        if skip:
            continue
        r = normal_form(_spoly(basis[i], basis[j], keyf), basis, keyf)
        if r:
            if r.is_constant():
                return [ring.one()]
            basis.append(r.monic(keyf))
            leads.append(r.leading(keyf)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    return _reduce_basis(basis, keyf)


def _reduce_basis(basis: list[Polynomial],
                  keyf: Callable[[Exponents], object]) -> list[Polynomial]:
    """Minimalize (drop redundant leading terms) then interreduce to the
    unique reduced monic basis, sorted by decreasing leading monomial."""
    leads = [g.leading(keyf)[0] for g in basis]
    keep: list[int] = []
    for i, le in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if _divides(lj, le) and (lj != le or j < i):
                redundant = True
                break
        if redundant:
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced: list[Polynomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, keyf)
        if r:
            reduced.append(r.monic(keyf))
    reduced.sort(key=lambda g: keyf(g.leading(keyf)[0]), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """An ideal of a polynomial ring, held by a finite generator list.

    Reduced Groebner bases are computed per order on demand and cached (the
    cache is write-once per order token, so sharing across threads is safe in
    the idempotent sense: recomputation yields the identical basis).
    """

    ring: PolynomialRing
    generators: tuple[Polynomial, ...]
    _bases: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        gens = []
        for g in self.generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"not a polynomial: {g!r}")
            if g.ring != self.ring:
                raise ValueError(f"generator {g} lives in {g.ring!r}, not {self.ring!r}")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> tuple[Polynomial, ...]:
        token = order.cache_token(self.ring)
        cached = self._bases.get(token)
        if cached is None:
            keyf = order.key(self.ring)
            cached = tuple(_buchberger(self.generators, self.ring, keyf))
            self._bases[token] = cached
        return cached

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def contains_one(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal(ring: PolynomialRing, *gens: Polynomial | str) -> Ideal:
    """Convenience builder; string generators are parsed in ``ring``."""
    polys = tuple(ring.parse(g) if isinstance(g, str) else g for g in gens)
    return Ideal(ring, polys)


def groebner(I: Ideal, order: MonomialOrder = DEGREVLEX) -> Ideal:
    """Compute (and cache on ``I``) the reduced monic basis under ``order``."""
    I.groebner_basis(order)
    return I


def member(p: Polynomial, I: Ideal) -> bool:
    if p.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    return normal_form(p, I.groebner_basis(), DEGREVLEX.key(I.ring)).is_zero()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return I.groebner_basis() == J.groebner_basis()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    gens = tuple(f * g for f in I.generators for g in J.generators)
    return Ideal(I.ring, gens)


def _extended_ring(ring: PolynomialRing) -> PolynomialRing:
    if _INTERSECTION_TAG in ring.index:
        raise ValueError(
            f"variable {_INTERSECTION_TAG!r} is reserved for intersections"
        )
    return PolynomialRing((_INTERSECTION_TAG,) + ring.variables)


def _lift(p: Polynomial, big: PolynomialRing) -> Polynomial:
    return Polynomial(big, {(0,) + e: c for e, c in p.terms.items()})


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of the tag variable from w·I + (1-w)·J."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    big = _extended_ring(I.ring)
    w = big.variable(_INTERSECTION_TAG)
    one = big.one()
    gens = [w * _lift(f, big) for f in I.generators]
    gens += [(one - w) * _lift(g, big) for g in J.generators]
    return eliminate(Ideal(big, tuple(gens)), {_INTERSECTION_TAG})


def _exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Exact quotient p / f; raises if the division is not exact."""
    keyf = DEGREVLEX.key(p.ring)
    (fe, fc) = f.leading(keyf)
    quotient = p.ring.zero()
    rest = p
    while rest:
        (re, rc) = rest.leading(keyf)
        if not _divides(fe, re):
            raise ValueError(f"{p} is not divisible by {f}")
        t = Polynomial(p.ring, {_mono_div(re, fe): rc / fc})
        quotient = quotient + t
        rest = rest - t * f
    return quotient


def ideal_colon(I: Ideal, f: Polynomial) -> Ideal:
    """The colon ideal (I : f) = {g : g·f ∈ I}, via (I ∩ (f)) / f."""
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if not f:
        raise ValueError("colon by the zero polynomial")
    inter = ideal_intersect(I, Ideal(I.ring, (f,)))
    gens = tuple(_exact_divide(g, f) for g in inter.groebner_basis())
    return Ideal(I.ring, gens)


def eliminate(I: Ideal, names: Iterable[str]) -> Ideal:
    """Eliminate ``names``: I ∩ Q[remaining variables], over the smaller ring."""
    drop = set(names)
    for name in drop:
        if name not in I.ring.index:
            raise ValueError(f"{name!r} is not a variable of {I.ring!r}")
    gb = I.groebner_basis(Block(drop))
    remaining = tuple(v for v in I.ring.variables if v not in drop)
    small = PolynomialRing(remaining)
    keep_idx = tuple(I.ring.index[v] for v in remaining)
    drop_idx = tuple(I.ring.index[v] for v in sorted(drop))
    out: list[Polynomial] = []
    for g in gb:
        if any(any(e[i] for i in drop_idx) for e in g.terms):
            continue
        out.append(Polynomial(small, {
            tuple(e[i] for i in keep_idx): c for e, c in g.terms.items()
        }))
    return Ideal(small, tuple(out))
