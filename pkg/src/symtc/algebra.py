"""Finitely presented graded-commutative rings with exact coefficients.

A ring is presented by generators (odd ones live in an exterior bitmask,
even ones in an exponent vector) and a relation schema that can enumerate the
fresh relation elements of any requested degree.  Quotients are realized
degree by degree: enumerate the spanning monomials, span the degree-d slice
of the relation ideal, row-reduce exactly, and cache the resulting basis and
normal-form projection.

>>> from symtc.catalog import macdonald_ring
>>> R = macdonald_ring(2, 1)
>>> a1, b1, c = R.gen("a1"), R.gen("b1"), R.gen("c")
>>> (a1 * b1) * c == c * (a1 * b1)
True
>>> R.poincare_polynomial(4)
[1, 2, 2, 2, 1]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .errors import RingMismatch
from .fields import GF2, QQ


class Generator(NamedTuple):
    gid: int
    name: str
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2


class Monomial(NamedTuple):
    """Exterior bitmask over odd generators plus exponents over even ones."""

    ext: int
    pows: Tuple[int, ...]

    def is_unit(self) -> bool:
        return self.ext == 0 and not any(self.pows)


@dataclass(frozen=True)
class DegreeData:
    """Cached quotient data for one degree."""

    monomials: Tuple[Monomial, ...]
    index: Dict[Monomial, int]
    basis: Tuple[int, ...]
    nf: Dict[int, Dict[int, object]]
    ideal: Tuple["Element", ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


class Element:
    """A sparse linear combination of monomials with exact coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "PresentedRing", terms: Dict[Monomial, object]):
        self.ring = ring
        self.terms = terms

    # -- basics ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Optional[int]:
        """Homogeneous degree, or None for 0 or inhomogeneous elements."""
        degrees = {self.ring.mono_degree(m) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def homogeneous_parts(self) -> Dict[int, "Element"]:
        parts: Dict[int, Dict[Monomial, object]] = {}
        for mono, coeff in self.terms.items():
            parts.setdefault(self.ring.mono_degree(mono), {})[mono] = coeff
        return {d: Element(self.ring, t) for d, t in sorted(parts.items())}

    def support(self) -> List[Monomial]:
        return sorted(self.terms)

    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, self.ring.field.zero)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Element") -> None:
        if self.ring is not other.ring:
            raise RingMismatch(
                f"elements of {self.ring.name} and {other.ring.name} cannot be combined"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = field.add(terms.get(mono, field.zero), coeff)
            if field.is_zero(new):
                terms.pop(mono, None)
            else:
                terms[mono] = new
        return Element(self.ring, terms)

    def __neg__(self) -> "Element":
        field = self.ring.field
        return Element(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, k) -> "Element":
        field = self.ring.field
        k = field.coerce(k)
        if field.is_zero(k):
            return Element(self.ring, {})
        return Element(self.ring, {m: field.mul(c, k) for m, c in self.terms.items()})

    def __rmul__(self, k):
        if isinstance(k, Element):
            return NotImplemented
        return self.scale(k)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        return self.ring.cup(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        return f"<{self.ring.name}: {self.ring.format_element(self)}>"


class PresentedRing:
    """A finitely presented graded-commutative ring over Q or Z2.

    ``relation_schema(ring, d)`` yields the fresh relation elements of degree
    d; the degree-d slice of the ideal is spanned by those together with
    generator multiples of the already-reduced lower slices.

    ``odd_square`` names an even generator e with x**2 = e for every odd
    generator x (the char-2 rewrite of the catalog's Z2 rings); without it,
    odd squares vanish structurally.
    """

    def __init__(
        self,
        name: str,
        field,
        generators: Sequence[Tuple[str, int]],
        relation_schema: Callable[["PresentedRing", int], Iterable["Element"]],
        top_degree: Optional[int] = None,
        odd_square: Optional[str] = None,
        meta: Optional[dict] = None,
    ):
        self.name = name
        self.field = field
        self.generators: Tuple[Generator, ...] = tuple(
            Generator(i, gname, deg) for i, (gname, deg) in enumerate(generators)
        )
        if len({g.name for g in self.generators}) != len(self.generators):
            raise ValueError("generator names must be unique")
        self.relation_schema = relation_schema
        self.top_degree = top_degree
        self.meta = dict(meta or {})

        self._odd: Tuple[Generator, ...] = tuple(g for g in self.generators if g.parity == 1)
        self._even: Tuple[Generator, ...] = tuple(g for g in self.generators if g.parity == 0)
        self._odd_slot = {g.gid: i for i, g in enumerate(self._odd)}
        self._even_slot = {g.gid: i for i, g in enumerate(self._even)}
        self._by_name = {g.name: g for g in self.generators}
        if odd_square is not None:
            target = self._by_name[odd_square]
            if target.parity != 0:
                raise ValueError("odd_square target must be an even generator")
            if field.characteristic != 2:
                raise ValueError("odd-square rewriting is a characteristic-2 rule")
            self._odd_square_slot: Optional[int] = self._even_slot[target.gid]
        else:
            self._odd_square_slot = None
        self._degree_cache: Dict[int, DegreeData] = {}

    # -- element constructors -------------------------------------------
    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {self.unit_monomial(): self.field.one})

    def unit_monomial(self) -> Monomial:
        return Monomial(0, (0,) * len(self._even))

    def gen(self, name: str) -> Element:
        g = self._by_name[name]
        return Element(self, {self.generator_monomial(g): self.field.one})

    def generator_monomial(self, g: Generator) -> Monomial:
        if g.parity == 1:
            return Monomial(1 << self._odd_slot[g.gid], (0,) * len(self._even))
        pows = [0] * len(self._even)
        pows[self._even_slot[g.gid]] = 1
        return Monomial(0, tuple(pows))

    def element(self, terms: Dict[Monomial, object]) -> Element:
        field = self.field
        clean = {}
        for mono, coeff in terms.items():
            coeff = field.coerce(coeff)
            if not field.is_zero(coeff):
                clean[mono] = coeff
        return Element(self, clean)

    # -- monomial structure ----------------------------------------------
    def mono_degree(self, mono: Monomial) -> int:
        d = 0
        ext = mono.ext
        while ext:
            low = ext & -ext
            d += self._odd[low.bit_length() - 1].degree
            ext ^= low
        for e, g in zip(mono.pows, self._even):
            d += e * g.degree
        return d

    def mul_mono(self, m1: Monomial, m2: Monomial) -> Tuple[int, Optional[Monomial]]:
        """Koszul-signed free product of two monomials.

        Returns (sign, monomial); sign 0 with None when an odd generator
        squares to zero structurally.
        """
        overlap = m1.ext & m2.ext
        pows = tuple(a + b for a, b in zip(m1.pows, m2.pows))
        if overlap:
            if self._odd_square_slot is None:
                return 0, None
            # char 2: each repeated odd generator rewrites to the square target
            lifted = list(pows)
            lifted[self._odd_square_slot] += bin(overlap).count("1")
            return 1, Monomial(m1.ext ^ m2.ext, tuple(lifted))
        if self.field.characteristic == 2:
            return 1, Monomial(m1.ext | m2.ext, pows)
        inversions = 0
        ext2 = m2.ext
        while ext2:
            low = ext2 & -ext2
            inversions += bin(m1.ext >> low.bit_length()).count("1")
            ext2 ^= low
        sign = -1 if inversions % 2 else 1
        return sign, Monomial(m1.ext | m2.ext, pows)

    def mono_str(self, mono: Monomial) -> str:
        parts = []
        ext = mono.ext
        while ext:
            low = ext & -ext
            parts.append(self._odd[low.bit_length() - 1].name)
            ext ^= low
        for e, g in zip(mono.pows, self._even):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def format_element(self, el: Element) -> str:
        if not el.terms:
            return "0"
        chunks = []
        for mono in sorted(el.terms):
            coeff = el.terms[mono]
            mono_s = self.mono_str(mono)
            if coeff == self.field.one and mono_s != "1":
                chunks.append(mono_s)
            elif mono_s == "1":
                chunks.append(str(coeff))
            else:
                chunks.append(f"{coeff}*{mono_s}")
        return " + ".join(chunks)

    # -- free multiplication ---------------------------------------------
    def mul_free(self, x: Element, y: Element) -> Element:
        """Bilinear Koszul-signed product with no relation reduction."""
        if x.ring is not self or y.ring is not self:
            raise RingMismatch("mul_free operands must belong to this ring")
        field = self.field
        terms: Dict[Monomial, object] = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                sign, mono = self.mul_mono(m1, m2)
                if mono is None:
                    continue
                coeff = field.mul(c1, c2)
                if sign == -1:
                    coeff = field.neg(coeff)
                new = field.add(terms.get(mono, field.zero), coeff)
                if field.is_zero(new):
                    terms.pop(mono, None)
                else:
                    terms[mono] = new
        return Element(self, terms)

    # -- degree bases ------------------------------------------------------
    def monomials_of_degree(self, d: int) -> Tuple[Monomial, ...]:
        if d < 0:
            return ()
        out: List[Monomial] = []
        n_odd = len(self._odd)
        for ext in range(1 << n_odd):
            od = 0
            bits = ext
            while bits:
                low = bits & -bits
                od += self._odd[low.bit_length() - 1].degree
                bits ^= low
            if od > d:
                continue
            for pows in self._exponents(d - od, 0):
                out.append(Monomial(ext, pows))
        return tuple(sorted(out))

    def _exponents(self, rem: int, slot: int) -> Iterator[Tuple[int, ...]]:
        if slot == len(self._even):
            if rem == 0:
                yield ()
            return
        step = self._even[slot].degree
        e = 0
        while e * step <= rem:
            for rest in self._exponents(rem - e * step, slot + 1):
                yield (e,) + rest
            e += 1

    def degree_data(self, d: int) -> DegreeData:
        data = self._degree_cache.get(d)
        if data is not None:
            return data
        monos = self.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(monos)}
        if d == 0:
            data = DegreeData(monos, index, tuple(range(len(monos))), {}, ())
        else:
            rows: List[linalg.Row] = []
            makers: List[Element] = []
            for rel in self.relation_schema(self, d):
                if rel.terms:
                    makers.append(rel)
            for g in self.generators:
                lower = d - g.degree
                if lower <= 0:
                    continue
                gel = Element(self, {self.generator_monomial(g): self.field.one})
                for v in self.degree_data(lower).ideal:
                    prod = self.mul_free(gel, v)
                    if prod.terms:
                        makers.append(prod)
            for el in makers:
                rows.append({index[m]: c for m, c in el.terms.items()})
            pivots: Dict[int, linalg.Row] = {}
            for group in linalg.split_components(rows):
                ech = linalg.Echelon(self.field)
                for i in group:
                    ech.insert(rows[i])
                pivots.update(ech.rref())
            basis = tuple(i for i in range(len(monos)) if i not in pivots)
            nf = {
                lead: {c: self.field.neg(v) for c, v in row.items() if c != lead}
                for lead, row in pivots.items()
            }
            ideal = tuple(
                Element(self, {monos[c]: v for c, v in pivots[lead].items()})
                for lead in sorted(pivots)
            )
            data = DegreeData(monos, index, basis, nf, ideal)
        self._degree_cache[d] = data
        return data

    def dim(self, d: int) -> int:
        if d < 0 or (self.top_degree is not None and d > self.top_degree):
            return 0
        return self.degree_data(d).dim

    def basis_elements(self, d: int) -> List[Element]:
        if d < 0 or (self.top_degree is not None and d > self.top_degree):
            return []
        data = self.degree_data(d)
        return [
            Element(self, {data.monomials[i]: self.field.one}) for i in data.basis
        ]

    def poincare_polynomial(self, up_to: int) -> List[int]:
        return [self.dim(d) for d in range(up_to + 1)]

    def total_dim(self) -> int:
        if self.top_degree is None:
            from .errors import NoTopDegree

            raise NoTopDegree(f"{self.name} has no top degree")
        return sum(self.dim(d) for d in range(self.top_degree + 1))

    # -- normal forms ------------------------------------------------------
    def normal_form(self, x: Element) -> Element:
        if x.ring is not self:
            raise RingMismatch("normal_form argument belongs to another ring")
        field = self.field
        out: Dict[Monomial, object] = {}

        def accumulate(mono: Monomial, coeff) -> None:
            new = field.add(out.get(mono, field.zero), coeff)
            if field.is_zero(new):
                out.pop(mono, None)
            else:
                out[mono] = new

        for mono, coeff in x.terms.items():
            d = self.mono_degree(mono)
            if self.top_degree is not None and d > self.top_degree:
                continue
            data = self.degree_data(d)
            col = data.index[mono]
            row = data.nf.get(col)
            if row is None:
                accumulate(mono, coeff)
            else:
                for c, v in row.items():
                    accumulate(data.monomials[c], field.mul(coeff, v))
        return Element(self, out)

    def cup(self, x: Element, y: Element) -> Element:
        return self.normal_form(self.mul_free(x, y))

    def is_zero(self, x: Element) -> bool:
        return self.normal_form(x).is_zero()

    # -- reporting ---------------------------------------------------------
    def dump(self, up_to: Optional[int] = None) -> dict:
        """Structured description: generators and per-degree basis monomials."""
        horizon = up_to if up_to is not None else self.top_degree
        if horizon is None:
            raise ValueError("specify up_to for a ring without top degree")
        degrees = {}
        for d in range(horizon + 1):
            data = self.degree_data(d)
            degrees[d] = [self.mono_str(data.monomials[i]) for i in data.basis]
        return {
            "ring": self.name,
            "field": self.field.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "top_degree": self.top_degree,
            "basis": degrees,
        }

    def __repr__(self):
        return f"<PresentedRing {self.name} over {self.field.name}>"


def mul_monomial(
    m1: Monomial, m2: Monomial, ring: PresentedRing
) -> Tuple[int, Optional[Monomial]]:
    """Koszul-signed free product of monomials drawn from ``ring``."""
    return ring.mul_mono(m1, m2)


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(k, x: Element) -> Element:
    return x.scale(k)


def mul_free(x: Element, y: Element) -> Element:
    return x.ring.mul_free(x, y)


def cup(ring: PresentedRing, x: Element, y: Element) -> Element:
    return ring.cup(x, y)


def normal_form(ring: PresentedRing, x: Element) -> Element:
    return ring.normal_form(x)


def poincare_polynomial(ring: PresentedRing, up_to: int) -> List[int]:
    return ring.poincare_polynomial(up_to)
