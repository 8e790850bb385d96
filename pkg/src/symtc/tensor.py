"""Kunneth tensor products and powers of presented rings.

Elements are sparse combinations of pure tensors (one factor basis monomial
per slot).  Multiplication is slotwise, with the interchange sign picked up
from moving odd-degree slot entries past each other; slots are re-reduced to
factor normal form immediately, so supports stay within per-degree bases.

The ``convention`` knob selects the interchange rule: "koszul" is the graded
sign (the default, and the only one with topological meaning); "plain" drops
interchange signs entirely and exists as an opt-in reproduction mode for
coefficient bookkeeping done in the unsigned tensor algebra.  Over Z2 the two
coincide.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .algebra import Element, Monomial, PresentedRing
from .errors import MixedFields, RingMismatch

PureTensor = Tuple[Monomial, ...]

CONVENTIONS = ("koszul", "plain")


def _nf_terms(ring: PresentedRing, mono: Monomial) -> Dict[Monomial, object]:
    """Normal form of a single monomial, cached on the factor ring."""
    cache = getattr(ring, "_mono_nf_cache", None)
    if cache is None:
        cache = {}
        ring._mono_nf_cache = cache  # type: ignore[attr-defined]
    terms = cache.get(mono)
    if terms is None:
        terms = ring.normal_form(Element(ring, {mono: ring.field.one})).terms
        cache[mono] = terms
    return terms


class TElement:
    """A sparse combination of pure tensors with exact coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "TensorRing", terms: Dict[PureTensor, object]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Optional[int]:
        degrees = {self.ring.tensor_degree(pt) for pt in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def homogeneous_parts(self) -> Dict[int, "TElement"]:
        parts: Dict[int, Dict[PureTensor, object]] = {}
        for pt, coeff in self.terms.items():
            parts.setdefault(self.ring.tensor_degree(pt), {})[pt] = coeff
        return {d: TElement(self.ring, t) for d, t in sorted(parts.items())}

    def support(self) -> List[PureTensor]:
        return sorted(self.terms)

    def coefficient(self, pt: PureTensor):
        return self.terms.get(pt, self.ring.field.zero)

    def leading_term(self) -> Tuple[PureTensor, object]:
        pt = max(self.terms)
        return pt, self.terms[pt]

    def _check(self, other: "TElement") -> None:
        if self.ring is not other.ring:
            raise RingMismatch("tensor elements belong to different tensor rings")

    def __add__(self, other: "TElement") -> "TElement":
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for pt, coeff in other.terms.items():
            new = field.add(terms.get(pt, field.zero), coeff)
            if field.is_zero(new):
                terms.pop(pt, None)
            else:
                terms[pt] = new
        return TElement(self.ring, terms)

    def __neg__(self) -> "TElement":
        field = self.ring.field
        return TElement(self.ring, {pt: field.neg(c) for pt, c in self.terms.items()})

    def __sub__(self, other: "TElement") -> "TElement":
        return self + (-other)

    def scale(self, k) -> "TElement":
        field = self.ring.field
        k = field.coerce(k)
        if field.is_zero(k):
            return TElement(self.ring, {})
        return TElement(self.ring, {pt: field.mul(c, k) for pt, c in self.terms.items()})

    def __rmul__(self, k):
        if isinstance(k, TElement):
            return NotImplemented
        return self.scale(k)

    def __mul__(self, other):
        if not isinstance(other, TElement):
            return self.scale(other)
        return self.ring.cup(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        return f"<{self.ring.name}: {self.ring.format_element(self)}>"


class TensorRing:
    """An m-fold Kunneth product, kept flat over presented-ring slots."""

    def __init__(
        self,
        factors: Sequence[PresentedRing],
        convention: str = "koszul",
        power_base=None,
        power_exponent: Optional[int] = None,
    ):
        if not factors:
            raise ValueError("a tensor ring needs at least one factor")
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        field = factors[0].field
        for f in factors[1:]:
            if f.field is not field:
                raise MixedFields("tensor factors must share one coefficient field")
        self.factors: Tuple[PresentedRing, ...] = tuple(factors)
        self.field = field
        self.convention = convention
        self.power_base = power_base
        self.power_exponent = power_exponent
        self.block = (
            len(power_base.factors) if isinstance(power_base, TensorRing) else 1
        ) if power_base is not None else None
        tops = [f.top_degree for f in self.factors]
        self.top_degree = None if any(t is None for t in tops) else sum(tops)
        self.name = " (x) ".join(f.name for f in self.factors)
        self._basis_cache: Dict[int, Tuple[Tuple[PureTensor, ...], Dict[PureTensor, int]]] = {}
        self._dim_cache: Dict[int, int] = {}

    # -- structure ---------------------------------------------------------
    @property
    def slots(self) -> int:
        return len(self.factors)

    def tensor_degree(self, pt: PureTensor) -> int:
        return sum(f.mono_degree(m) for f, m in zip(self.factors, pt))

    def zero(self) -> TElement:
        return TElement(self, {})

    def one(self) -> TElement:
        return TElement(self, {self.unit_tensor(): self.field.one})

    def unit_tensor(self) -> PureTensor:
        return tuple(f.unit_monomial() for f in self.factors)

    def element(self, terms: Dict[PureTensor, object]) -> TElement:
        """Build an element, reducing every slot to factor normal form."""
        field = self.field
        out: Dict[PureTensor, object] = {}
        for pt, coeff in terms.items():
            coeff = field.coerce(coeff)
            if field.is_zero(coeff):
                continue
            self._expand_pure(pt, coeff, out)
        return TElement(self, {pt: c for pt, c in out.items() if not field.is_zero(c)})

    def _expand_pure(self, pt: PureTensor, coeff, out: Dict[PureTensor, object]) -> None:
        field = self.field
        partial: List[Tuple[Tuple[Monomial, ...], object]] = [((), coeff)]
        for f, mono in zip(self.factors, pt):
            nf = _nf_terms(f, mono)
            if not nf:
                return
            partial = [
                (slots + (m,), field.mul(c, v))
                for slots, c in partial
                for m, v in nf.items()
            ]
        for slots, c in partial:
            new = field.add(out.get(slots, field.zero), c)
            if field.is_zero(new):
                out.pop(slots, None)
            else:
                out[slots] = new

    # -- multiplication ------------------------------------------------------
    def _interchange_sign(self, p: PureTensor, q: PureTensor) -> int:
        if self.convention == "plain" or self.field.characteristic == 2:
            return 1
        odd_p = [self.factors[j].mono_degree(p[j]) & 1 for j in range(self.slots)]
        suffix = 0
        count = 0
        # walk slots right to left: q_i moves past p_j for all j > i
        for i in range(self.slots - 1, -1, -1):
            if self.factors[i].mono_degree(q[i]) & 1:
                count += suffix
            suffix += odd_p[i]
        return -1 if count & 1 else 1

    def cup(self, x: TElement, y: TElement) -> TElement:
        if x.ring is not self or y.ring is not self:
            raise RingMismatch("cup operands must belong to this tensor ring")
        field = self.field
        out: Dict[PureTensor, object] = {}
        for p, cp in x.terms.items():
            for q, cq in y.terms.items():
                coeff = field.mul(cp, cq)
                if self._interchange_sign(p, q) == -1:
                    coeff = field.neg(coeff)
                partial: List[Tuple[Tuple[Monomial, ...], object]] = [((), coeff)]
                dead = False
                for i, f in enumerate(self.factors):
                    sign, mono = f.mul_mono(p[i], q[i])
                    if mono is None:
                        dead = True
                        break
                    nf = _nf_terms(f, mono)
                    if not nf:
                        dead = True
                        break
                    if sign == -1:
                        partial = [(s, field.neg(c)) for s, c in partial]
                    partial = [
                        (slots + (m,), field.mul(c, v))
                        for slots, c in partial
                        for m, v in nf.items()
                    ]
                if dead:
                    continue
                for slots, c in partial:
                    new = field.add(out.get(slots, field.zero), c)
                    if field.is_zero(new):
                        out.pop(slots, None)
                    else:
                        out[slots] = new
        return TElement(self, out)

    def is_zero(self, x: TElement) -> bool:
        return x.is_zero()

    # -- degree bases ---------------------------------------------------------
    def dim(self, d: int) -> int:
        if d < 0 or (self.top_degree is not None and d > self.top_degree):
            return 0
        dim = self._dim_cache.get(d)
        if dim is None:
            dims = [1]
            for f in self.factors:
                new = [0] * (d + 1)
                for i, v in enumerate(dims):
                    if v == 0:
                        continue
                    for e in range(d - i + 1):
                        fd = f.dim(e)
                        if fd:
                            new[i + e] += v * fd
                dims = new
            dim = dims[d]
            self._dim_cache[d] = dim
        return dim

    def basis_tensors(self, d: int) -> Tuple[Tuple[PureTensor, ...], Dict[PureTensor, int]]:
        cached = self._basis_cache.get(d)
        if cached is not None:
            return cached
        tensors: List[PureTensor] = []

        def fill(slot: int, rem: int, prefix: Tuple[Monomial, ...]) -> None:
            if slot == self.slots:
                if rem == 0:
                    tensors.append(prefix)
                return
            f = self.factors[slot]
            cap = rem if f.top_degree is None else min(rem, f.top_degree)
            for e in range(cap + 1):
                data = f.degree_data(e)
                if not data.basis:
                    continue
                for i in data.basis:
                    fill(slot + 1, rem - e, prefix + (data.monomials[i],))

        fill(0, d, ())
        tensors.sort()
        out = (tuple(tensors), {pt: i for i, pt in enumerate(tensors)})
        self._basis_cache[d] = out
        return out

    def basis_elements(self, d: int) -> List[TElement]:
        tensors, _ = self.basis_tensors(d)
        return [TElement(self, {pt: self.field.one}) for pt in tensors]

    def poincare_polynomial(self, up_to: int) -> List[int]:
        return [self.dim(d) for d in range(up_to + 1)]

    def total_dim(self) -> int:
        if self.top_degree is None:
            from .errors import NoTopDegree

            raise NoTopDegree(f"{self.name} has no top degree")
        return sum(self.dim(d) for d in range(self.top_degree + 1))

    # -- projections and the diagonal -----------------------------------------
    def _block_span(self, i: int) -> Tuple[int, int]:
        if self.power_base is None:
            if not 1 <= i <= self.slots:
                raise ValueError(f"slot index {i} out of range 1..{self.slots}")
            return i - 1, i
        m = self.power_exponent
        if not 1 <= i <= m:
            raise ValueError(f"power slot index {i} out of range 1..{m}")
        return (i - 1) * self.block, i * self.block

    def pi(self, i: int, x) -> TElement:
        """Pullback along the i-th projection: x in slot i, units elsewhere."""
        lo, hi = self._block_span(i)
        units = self.unit_tensor()
        if self.power_base is not None:
            base = self.power_base
            if isinstance(base, TensorRing):
                if x.ring is not base:
                    raise RingMismatch("element does not live in the power base ring")
                items = x.terms.items()
                embed = lambda key: tuple(key)
            else:
                if x.ring is not base:
                    raise RingMismatch("element does not live in the power base ring")
                items = x.terms.items()
                embed = lambda key: (key,)
        else:
            if x.ring is not self.factors[i - 1]:
                raise RingMismatch(f"element does not live in factor {i}")
            items = x.terms.items()
            embed = lambda key: (key,)
        terms: Dict[PureTensor, object] = {}
        for key, coeff in items:
            block = embed(key)
            pt = units[:lo] + tuple(block) + units[hi:]
            terms[pt] = coeff
        return self.element(terms)

    def diag(self, x: TElement):
        """Pullback along the diagonal: multiply the m blocks in slot order."""
        if self.power_base is None:
            raise RingMismatch("diagonal pullback needs a tensor power")
        if x.ring is not self:
            raise RingMismatch("element does not live in this tensor power")
        base = self.power_base
        m = self.power_exponent
        k = self.block
        field = self.field
        if isinstance(base, TensorRing):
            out = base.zero()
            for pt, coeff in x.terms.items():
                val = base.element({pt[0:k]: coeff})
                for j in range(1, m):
                    val = base.cup(val, base.element({pt[j * k : (j + 1) * k]: field.one}))
                    if val.is_zero():
                        break
                out = out + val
            return out
        out = base.zero()
        for pt, coeff in x.terms.items():
            val = Element(base, {pt[0]: coeff})
            for j in range(1, m):
                val = base.cup(val, Element(base, {pt[j]: field.one}))
                if val.is_zero():
                    break
            out = out + val
        return base.normal_form(out)

    # -- formatting -------------------------------------------------------------
    def format_tensor(self, pt: PureTensor) -> str:
        return " (x) ".join(f.mono_str(m) for f, m in zip(self.factors, pt))

    def format_element(self, el: TElement) -> str:
        if not el.terms:
            return "0"
        chunks = []
        for pt in sorted(el.terms):
            coeff = el.terms[pt]
            body = self.format_tensor(pt)
            chunks.append(body if coeff == self.field.one else f"{coeff}*[{body}]")
        return " + ".join(chunks)

    def __repr__(self):
        return f"<TensorRing {self.name} ({self.convention})>"


# ---------------------------------------------------------------------------
# constructors and the spec-facing operation names
# ---------------------------------------------------------------------------

RingLike = Union[PresentedRing, TensorRing]


def tensor_product(factors: Sequence[RingLike], convention: str = "koszul") -> TensorRing:
    slots: List[PresentedRing] = []
    for f in factors:
        if isinstance(f, TensorRing):
            if f.convention != convention:
                raise ValueError("cannot mix interchange conventions in one product")
            slots.extend(f.factors)
        else:
            slots.append(f)
    return TensorRing(slots, convention=convention)


def tensor_power(ring: RingLike, m: int, convention: str = "koszul") -> TensorRing:
    if m < 1:
        raise ValueError("tensor power exponent must be >= 1")
    if isinstance(ring, TensorRing):
        if ring.convention != convention:
            raise ValueError("cannot change interchange convention in a power")
        slots = ring.factors * m
    else:
        slots = (ring,) * m
    return TensorRing(slots, convention=convention, power_base=ring, power_exponent=m)


def proj_pullback(T: TensorRing, i: int, x) -> TElement:
    return T.pi(i, x)


def diagonal_pullback(T: TensorRing, x: TElement):
    return T.diag(x)
