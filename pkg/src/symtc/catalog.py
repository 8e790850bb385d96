"""Constructors for the cohomology rings in the catalog, plus space descriptors.

Rings provided: the rational cohomology of symmetric products of orientable
surfaces (exterior classes a_i, b_i in degree 1, a polynomial class c in
degree 2, with the vanishing family a_I b_J (c - a_k b_k)...(c^s) for
pairwise-distinct index groups once the weighted length passes n), the Z2
cohomology of symmetric products of non-orientable surfaces (e_i in degree 1
with e_i^2 = d, and e_I d^s = 0 past weight n), and truncated sphere rings.

Space descriptors form a small expression tree (spheres, symmetric products
of surfaces, products, powers) with a per-leaf coefficient convention:
non-orientable leaves force Z2, everything else defaults to Q, and genuinely
mixed trees are rejected.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .algebra import Element, Monomial, PresentedRing
from .errors import MixedFields, UnsupportedSpace
from .fields import GF2, QQ, field_by_name

_cache_lock = threading.Lock()
_ring_cache: Dict[tuple, PresentedRing] = {}


def _memo(key: tuple, build) -> PresentedRing:
    with _cache_lock:
        ring = _ring_cache.get(key)
        if ring is None:
            ring = build()
            _ring_cache[key] = ring
        return ring


# ---------------------------------------------------------------------------
# orientable surfaces: SP^n(M_g) over Q
# ---------------------------------------------------------------------------

def _orientable_schema(ring: PresentedRing, d: int) -> Iterator[Element]:
    """Fresh relation elements of degree d.

    Emits a_I b_J (c - a_k b_k)...(c - a_k b_k) c^s over all assignments of
    pairwise-distinct indices with len(I)+len(J)+2r+s >= n+1 and total degree
    d.  Distinctness across all three groups matters: allowing k in I (or an
    index in both I and J) would kill the degree-2 class of SP^1 and the
    rank-2 piece H^3(SP^2 of the torus), both pinned by the dimension tests.
    """
    n = ring.meta["n"]
    g = ring.meta["g"]
    c = ring.gen("c")
    for roles in itertools.product((0, 1, 2, 3), repeat=g):
        ell = sum(1 for r in roles if r == 1)
        em = sum(1 for r in roles if r == 2)
        ar = sum(1 for r in roles if r == 3)
        q = ell + em + 2 * ar
        if q > d or (d - q) % 2:
            continue
        s = (d - q) // 2
        if q + s < n + 1:
            continue
        ext = 0
        for i, r in enumerate(roles):
            if r == 1:
                ext |= 1 << (2 * i)
            elif r == 2:
                ext |= 1 << (2 * i + 1)
        el = ring.element({Monomial(ext, (s,)): 1})
        for i, r in enumerate(roles):
            if r == 3:
                pair = ring.element({Monomial((1 << (2 * i)) | (1 << (2 * i + 1)), (0,)): 1})
                el = ring.mul_free(el, c - pair)
        yield el


def macdonald_ring(n: int, g: int, field=QQ) -> PresentedRing:
    """Rational cohomology ring of the n-th symmetric product of a genus-g
    orientable surface."""
    if n < 1 or g < 0:
        raise ValueError(f"need n >= 1 and g >= 0, got n={n}, g={g}")
    if field is not QQ:
        raise ValueError("the orientable-surface rings are rational")

    def build() -> PresentedRing:
        gens: List[Tuple[str, int]] = []
        for i in range(1, g + 1):
            gens.append((f"a{i}", 1))
            gens.append((f"b{i}", 1))
        gens.append(("c", 2))
        return PresentedRing(
            name=f"H*(SP^{n}(M_{g}); Q)",
            field=QQ,
            generators=gens,
            relation_schema=_orientable_schema,
            top_degree=2 * n,
            meta={"kind": "orientable", "n": n, "g": g},
        )

    return _memo(("macdonald", n, g), build)


# ---------------------------------------------------------------------------
# non-orientable surfaces: SP^n(N_g) over Z2
# ---------------------------------------------------------------------------

def _nonorientable_schema(ring: PresentedRing, d: int) -> Iterator[Element]:
    """Vanishing monomials e_I d^s with |I| + s >= n+1 of degree d.

    The square rewrite e_i^2 = d is carried by the ring's monomial product,
    so the per-degree linear algebra here degenerates to striking monomials.
    """
    n = ring.meta["n"]
    g = ring.meta["g"]
    for r in range(min(g, d) + 1):
        if (d - r) % 2:
            continue
        s = (d - r) // 2
        if r + s < n + 1:
            continue
        for subset in itertools.combinations(range(g), r):
            ext = 0
            for i in subset:
                ext |= 1 << i
            yield ring.element({Monomial(ext, (s,)): 1})


def ks_ring(n: int, g: int) -> PresentedRing:
    """Z2 cohomology ring of the n-th symmetric product of a genus-g
    non-orientable surface."""
    if n < 1 or g < 1:
        raise ValueError(f"need n, g >= 1, got n={n}, g={g}")

    def build() -> PresentedRing:
        gens: List[Tuple[str, int]] = [(f"e{i}", 1) for i in range(1, g + 1)]
        gens.append(("d", 2))
        return PresentedRing(
            name=f"H*(SP^{n}(N_{g}); Z2)",
            field=GF2,
            generators=gens,
            relation_schema=_nonorientable_schema,
            top_degree=2 * n,
            odd_square="d",
            meta={"kind": "nonorientable", "n": n, "g": g},
        )

    return _memo(("ks", n, g), build)


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

def _even_sphere_schema(ring: PresentedRing, d: int) -> Iterator[Element]:
    k = ring.meta["k"]
    if d % k == 0 and d // k >= 2:
        yield ring.element({Monomial(0, (d // k,)): 1})


def _no_relations(ring: PresentedRing, d: int) -> Iterator[Element]:
    return iter(())


def sphere_ring(k: int, field=QQ) -> PresentedRing:
    """H*(S^k): one generator of degree k with square zero."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")

    def build() -> PresentedRing:
        schema = _no_relations if k % 2 else _even_sphere_schema
        return PresentedRing(
            name=f"H*(S^{k}; {field.name})",
            field=field,
            generators=[("x", k)],
            relation_schema=schema,
            top_degree=k,
            meta={"kind": "sphere", "k": k},
        )

    return _memo(("sphere", k, field.name), build)


# ---------------------------------------------------------------------------
# space descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Orientable:
    g: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("orientable genus must be >= 0")

    def __str__(self):
        return f"M({self.g})"


@dataclass(frozen=True)
class NonOrientable:
    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("non-orientable genus must be >= 1")

    def __str__(self):
        return f"N({self.g})"


Surface = Union[Orientable, NonOrientable]


@dataclass(frozen=True)
class Sphere:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("sphere dimension must be >= 1")

    def __str__(self):
        return f"S({self.k})"


@dataclass(frozen=True)
class SymmetricProduct:
    n: int
    surface: Surface

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("symmetric product exponent must be >= 1")

    def __str__(self):
        return f"SP({self.n}, {self.surface})"


@dataclass(frozen=True)
class Power:
    base: "SpaceDescriptor"
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("power exponent must be >= 1")

    def __str__(self):
        return f"{self.base}^{self.k}"


@dataclass(frozen=True)
class Product:
    parts: Tuple["SpaceDescriptor", ...]

    def __str__(self):
        return " x ".join(str(p) for p in self.parts)


SpaceDescriptor = Union[Sphere, SymmetricProduct, Orientable, NonOrientable, Power, Product]


def leaves(space: SpaceDescriptor) -> Iterator[SpaceDescriptor]:
    if isinstance(space, Product):
        for p in space.parts:
            yield from leaves(p)
    elif isinstance(space, Power):
        yield from leaves(space.base)
    else:
        yield space


def field_of(space: SpaceDescriptor):
    """Coefficient field per the leaf convention; mixed surfaces rejected.

    Spheres are field-flexible: they follow the surrounding surface leaves.
    """
    has_q = False
    has_z2 = False
    for leaf in leaves(space):
        if isinstance(leaf, NonOrientable) or (
            isinstance(leaf, SymmetricProduct) and isinstance(leaf.surface, NonOrientable)
        ):
            has_z2 = True
        elif isinstance(leaf, (Orientable,)) or (
            isinstance(leaf, SymmetricProduct) and isinstance(leaf.surface, Orientable)
        ):
            has_q = True
    if has_q and has_z2:
        raise MixedFields(f"{space} mixes rational and Z2 coefficient leaves")
    return GF2 if has_z2 else QQ


def dimension(space: SpaceDescriptor) -> int:
    """Dimension of the underlying closed manifold."""
    if isinstance(space, Sphere):
        return space.k
    if isinstance(space, (Orientable, NonOrientable)):
        return 2
    if isinstance(space, SymmetricProduct):
        return 2 * space.n
    if isinstance(space, Power):
        return space.k * dimension(space.base)
    if isinstance(space, Product):
        return sum(dimension(p) for p in space.parts)
    raise UnsupportedSpace(f"unknown space form {space!r}")


def ring_of(space: SpaceDescriptor, convention: str = "koszul"):
    """Cohomology ring of a space descriptor (tensor ring for products)."""
    from .tensor import tensor_power, tensor_product

    field = field_of(space)
    if isinstance(space, Sphere):
        return sphere_ring(space.k, field)
    if isinstance(space, Orientable):
        return macdonald_ring(1, space.g)
    if isinstance(space, NonOrientable):
        return ks_ring(1, space.g)
    if isinstance(space, SymmetricProduct):
        if isinstance(space.surface, Orientable):
            return macdonald_ring(space.n, space.surface.g)
        return ks_ring(space.n, space.surface.g)
    if isinstance(space, Power):
        return tensor_power(ring_of(space.base, convention), space.k, convention=convention)
    if isinstance(space, Product):
        if field is GF2:
            # coerce any sphere factors to Z2 so the product is single-field
            factor_rings = []
            for p in space.parts:
                if isinstance(p, Sphere):
                    factor_rings.append(sphere_ring(p.k, GF2))
                else:
                    factor_rings.append(ring_of(p, convention))
        else:
            factor_rings = [ring_of(p, convention) for p in space.parts]
        return tensor_product(factor_rings, convention=convention)
    raise UnsupportedSpace(f"unknown space form {space!r}")
