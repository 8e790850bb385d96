"""Cup-lengths, zero-divisor cup-lengths, and certified cat / TC_m bounds.

Lower bounds are always machine-checked: cup-length witnesses are explicit
nonzero products, TC_m lower bounds carry replayable special-zero-divisor
certificates, and ``zcl_bruteforce`` is an independent kernel-ideal
nilpotency oracle.  Upper bounds come from dimension counts, the
cohomological-dimension refinement for symmetric products of orientable
surfaces, product subadditivity, and a small cited table of classical
values.  A report is exact only when a certified lower bound meets a
certified upper bound; otherwise the honest interval is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .algebra import Element, PresentedRing
from .catalog import (
    NonOrientable,
    Orientable,
    Power,
    Product,
    SpaceDescriptor,
    Sphere,
    SymmetricProduct,
    dimension,
    ring_of,
)
from .errors import InexactValue, NoTopDegree, RingMismatch, SizeLimitExceeded, UnsupportedSpace
from .tensor import TElement, TensorRing, tensor_power
from .zerodiv import Certificate, SpecialZeroDivisor, special_zero_divisor, szcl_lower

RingLike = Union[PresentedRing, TensorRing]

CITE = {
    "sphere-tc": "higher topological complexity of spheres (Basabe-Gonzalez-Rudyak-Tamaki)",
    "sphere-cat": "classical: spheres have category 1",
    "torus-tc": "higher topological complexity of tori (Basabe-Gonzalez-Rudyak-Tamaki)",
    "surface-tc": "higher topological complexity of orientable surfaces (Gonzalez et al.)",
    "cpn-tc": "higher topological complexity of complex projective spaces (Basabe-Gonzalez-Rudyak-Tamaki)",
    "rp2-tc": "TC of real projective planes via immersion dimension (Farber-Tabachnikov-Yuzvinsky)",
    "nonor-tc2": "TC_2 of non-orientable surfaces (Dranishnikov; Cohen-Vandembroucq)",
    "nonor-tcm": "higher TC of non-orientable surfaces, m >= 3 (Gonzalez-Gutierrez-Guzman-et al.)",
    "dim": "category of a connected complex is at most its dimension",
    "dim-plus-cd": "Dranishnikov's bound cat <= (dim + cd(pi_1))/2; pi_1 is free abelian of rank 2g here",
    "cat-product": "category is subadditive on products",
    "tc-product": "TC_m is subadditive on products (Basabe-Gonzalez-Rudyak-Tamaki)",
    "m-times-cat": "TC_m(X) <= cat(X^m) <= m cat(X)",
    "cup": "cup-length bounds category from below",
    "zcl": "zero-divisor cup-length bounds TC_m from below",
    "cat-power": "cat(X^{m-1}) <= TC_m(X)",
}


# ---------------------------------------------------------------------------
# coordinates and subspace powers
# ---------------------------------------------------------------------------

def _coords(ring: RingLike, el, d: int) -> linalg.Row:
    """Coordinates of a homogeneous element in the degree-d quotient basis."""
    if isinstance(ring, TensorRing):
        _, index = ring.basis_tensors(d)
        return {index[pt]: c for pt, c in el.terms.items()}
    data = ring.degree_data(d)
    pos = {col: i for i, col in enumerate(data.basis)}
    nf = ring.normal_form(el)
    return {pos[data.index[m]]: c for m, c in nf.terms.items()}


def _positive_basis(ring: RingLike) -> Dict[int, List[object]]:
    top = ring.top_degree
    if top is None:
        raise NoTopDegree(f"{ring.name} has no top degree")
    return {d: ring.basis_elements(d) for d in range(1, top + 1) if ring.dim(d)}


def _subspace_nilpotency(
    ring: RingLike, seed: Dict[int, List[object]]
) -> Tuple[int, List[object]]:
    """Largest k with span(seed)^k nonzero, plus one witnessing factor list.

    Levels are kept as independent representatives per degree; any nonzero
    product found while building level k+1 witnesses length k+1 even when it
    is linearly dependent on earlier ones.
    """
    top = ring.top_degree
    current: Dict[int, List[Tuple[object, Tuple[object, ...]]]] = {}
    for d, elements in sorted(seed.items()):
        ech = linalg.Echelon(ring.field)
        for el in elements:
            if el.is_zero():
                continue
            if ech.insert(_coords(ring, el, d)) is not None:
                current.setdefault(d, []).append((el, (el,)))
    if not current:
        return 0, []
    k = 1
    witness = list(next(iter(sorted(current.items())))[1][0][1])
    while True:
        nxt: Dict[int, List[Tuple[object, Tuple[object, ...]]]] = {}
        ech_by_degree: Dict[int, linalg.Echelon] = {}
        found_tag: Optional[Tuple[object, ...]] = None
        for d1, items in sorted(current.items()):
            for u, tag in items:
                for d2, seeds in sorted(seed.items()):
                    if d1 + d2 > top:
                        continue
                    for v in seeds:
                        w = ring.cup(u, v)
                        if w.is_zero():
                            continue
                        if found_tag is None:
                            found_tag = tag + (v,)
                        ech = ech_by_degree.setdefault(d1 + d2, linalg.Echelon(ring.field))
                        if ech.insert(_coords(ring, w, d1 + d2)) is not None:
                            nxt.setdefault(d1 + d2, []).append((w, tag + (v,)))
        if found_tag is None:
            return k, witness
        k += 1
        witness = list(found_tag)
        current = nxt


# ---------------------------------------------------------------------------
# cup-length
# ---------------------------------------------------------------------------

@dataclass
class CupLength:
    length: int
    witness: List[object]
    method: str

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "method": self.method,
            "witness": [repr(w) for w in self.witness],
        }


_cup_cache: Dict[Tuple[str, str], CupLength] = {}


def _witness_search(ring: RingLike) -> List[object]:
    top = ring.top_degree
    candidates = []
    for d, elements in sorted(_positive_basis(ring).items()):
        candidates.extend((d, el) for el in elements)
    acc = ring.one()
    used: List[object] = []
    total = 0
    progress = True
    while progress:
        progress = False
        for d, el in candidates:
            if total + d > top:
                break
            trial = ring.cup(acc, el)
            if not trial.is_zero():
                acc = trial
                used.append(el)
                total += d
                progress = True
                break
    return used


def _lifted_witness(ring: TensorRing) -> List[object]:
    """Concatenate factor witnesses through the projection pullbacks."""
    if ring.power_base is not None:
        blocks = ring.power_exponent
        sub = cup_length(ring.power_base).witness
        return [ring.pi(i, w) for i in range(1, blocks + 1) for w in sub]
    out = []
    for fi, f in enumerate(ring.factors, start=1):
        for w in cup_length(f).witness:
            out.append(ring.pi(fi, w))
    return out


def _budget_upper(ring: RingLike) -> int:
    """Degree-knapsack upper bound for the cup-length.

    Over Q, factors of odd degree d multiply alternatingly, so at most
    dim H^d of them can appear; even degrees are only budget-limited.
    """
    top = ring.top_degree
    char2 = ring.field.characteristic == 2
    budget = top
    count = 0
    for d in range(1, top + 1):
        if budget < d:
            break
        dim_d = ring.dim(d)
        if dim_d == 0:
            continue
        cap = budget // d
        if d % 2 == 1 and not char2:
            cap = min(cap, dim_d)
        count += cap
        budget -= cap * d
    return count


def cup_length(ring: RingLike, force_nilpotency: bool = False) -> CupLength:
    """Maximal length of a nonzero product of positive-degree classes.

    Fast path: an explicit witness meeting the degree-knapsack upper bound.
    When the two disagree (or on request) the exact subspace-power
    nilpotency computation decides.
    """
    if ring.top_degree is None:
        raise NoTopDegree(f"{ring.name} has no top degree")
    key = (ring.name, getattr(ring, "convention", "ring"), force_nilpotency)
    cached = _cup_cache.get(key)
    if cached is not None:
        return cached
    if not force_nilpotency:
        if isinstance(ring, TensorRing):
            witness = _lifted_witness(ring)
            acc = ring.one()
            for w in witness:
                acc = ring.cup(acc, w)
            if acc.is_zero():
                witness = _witness_search(ring)
            else:
                extended = True
                while extended:
                    extended = False
                    # try to extend a lifted witness the same way the search would
                    for d, elements in sorted(_positive_basis(ring).items()):
                        if (acc.degree() or 0) + d > ring.top_degree:
                            break
                        for el in elements:
                            trial = ring.cup(acc, el)
                            if not trial.is_zero():
                                acc = trial
                                witness.append(el)
                                extended = True
                                break
                        if extended:
                            break
        else:
            witness = _witness_search(ring)
        upper = _budget_upper(ring)
        if len(witness) == upper:
            result = CupLength(upper, witness, "witness meets degree budget")
            _cup_cache[key] = result
            return result
    length, witness = _subspace_nilpotency(ring, _positive_basis(ring))
    result = CupLength(length, witness, "subspace-power nilpotency")
    _cup_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# zero-divisor cup-length oracle
# ---------------------------------------------------------------------------

def diagonal_kernel(T: TensorRing) -> Dict[int, List[TElement]]:
    """Per-degree basis of Ker(diagonal pullback) on a tensor power."""
    base = T.power_base
    if base is None:
        raise RingMismatch("the diagonal kernel needs a tensor power")
    out: Dict[int, List[TElement]] = {}
    for d in range(1, T.top_degree + 1):
        tensors, _ = T.basis_tensors(d)
        if not tensors:
            continue
        rows = []
        for pt in tensors:
            img = T.diag(TElement(T, {pt: T.field.one}))
            rows.append(_coords(base, img, d) if not img.is_zero() else {})
        for vec in linalg.nullspace(rows, T.field):
            el = TElement(T, {tensors[i]: c for i, c in sorted(vec.items())})
            out.setdefault(d, []).append(el)
    return out


def zcl_bruteforce(
    ring: RingLike, m: int, size_limit: int = 4096, convention: str = "koszul"
) -> int:
    """Exact m-th zero-divisor cup-length by kernel-ideal nilpotency.

    Only feasible when the tensor power is small; raises SizeLimitExceeded
    past ``size_limit`` total dimensions (use certificates instead).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    total = ring.total_dim() ** m
    if total > size_limit:
        raise SizeLimitExceeded(
            f"tensor power has total dimension {total} > {size_limit}"
        )
    T = tensor_power(ring, m, convention=convention)
    kernel = diagonal_kernel(T)
    if not kernel:
        return 0
    length, _ = _subspace_nilpotency(T, kernel)
    return length


# ---------------------------------------------------------------------------
# bound reports
# ---------------------------------------------------------------------------

@dataclass
class BoundReport:
    invariant: str
    space: SpaceDescriptor
    lower: int
    upper: int
    exact: bool
    m: Optional[int] = None
    lower_reason: str = ""
    upper_reason: str = ""
    certificate: Optional[Certificate] = None
    witness: Optional[List[object]] = None
    citations: List[str] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)

    @property
    def value(self) -> int:
        if not self.exact:
            raise InexactValue(
                f"{self.invariant} of {self.space} is only bounded: [{self.lower}, {self.upper}]"
            )
        return self.lower

    def to_json(self) -> dict:
        out = {
            "invariant": self.invariant,
            "space": str(self.space),
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_reason": self.lower_reason,
            "upper_reason": self.upper_reason,
            "citations": list(self.citations),
            "notes": list(self.notes),
        }
        if self.m is not None:
            out["m"] = self.m
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.witness is not None:
            out["witness"] = [repr(w) for w in self.witness]
        return out


def _normalize(space: SpaceDescriptor) -> SpaceDescriptor:
    """SP^1 of a surface is the surface."""
    if isinstance(space, SymmetricProduct) and space.n == 1:
        return space.surface
    if isinstance(space, Power) and space.k == 1:
        return _normalize(space.base)
    if isinstance(space, Product) and len(space.parts) == 1:
        return _normalize(space.parts[0])
    return space


def known_cat(space: SpaceDescriptor) -> Optional[Tuple[int, str]]:
    space = _normalize(space)
    if isinstance(space, Sphere):
        return 1, CITE["sphere-cat"]
    return None


def known_tc(space: SpaceDescriptor, m: int) -> Optional[Tuple[int, str]]:
    space = _normalize(space)
    if isinstance(space, Sphere):
        return (m - 1 if space.k % 2 else m), CITE["sphere-tc"]
    if isinstance(space, Orientable):
        if space.g == 0:
            return m, CITE["sphere-tc"]
        if space.g == 1:
            return 2 * m - 2, CITE["torus-tc"]
        return 2 * m, CITE["surface-tc"]
    if isinstance(space, SymmetricProduct) and isinstance(space.surface, Orientable):
        if space.surface.g == 0:
            return m * space.n, CITE["cpn-tc"]
        return None
    if isinstance(space, NonOrientable):
        if m >= 3:
            return 2 * m, CITE["nonor-tcm"]
        if space.g == 1:
            return 3, CITE["rp2-tc"]
        return 4, CITE["nonor-tc2"]
    return None


def _is_orientable_sp(space: SpaceDescriptor) -> Optional[Tuple[int, int]]:
    space = _normalize(space)
    if isinstance(space, Orientable):
        return 1, space.g
    if isinstance(space, SymmetricProduct) and isinstance(space.surface, Orientable):
        return space.n, space.surface.g
    return None


def _is_nonorientable_sp(space: SpaceDescriptor) -> Optional[Tuple[int, int]]:
    space = _normalize(space)
    if isinstance(space, NonOrientable):
        return 1, space.g
    if isinstance(space, SymmetricProduct) and isinstance(space.surface, NonOrientable):
        return space.n, space.surface.g
    return None


def _factors_of(space: SpaceDescriptor) -> Optional[List[SpaceDescriptor]]:
    space = _normalize(space)
    if isinstance(space, Product):
        return list(space.parts)
    if isinstance(space, Power):
        return [space.base] * space.k
    return None


def cat_bounds(space: SpaceDescriptor) -> BoundReport:
    """Certified bounds for the Lusternik-Schnirelmann category."""
    ring = ring_of(space)
    cl = cup_length(ring)
    citations = [CITE["cup"]]
    uppers: List[Tuple[str, int, str]] = [("dimension", dimension(space), CITE["dim"])]
    sp = _is_orientable_sp(space)
    if sp is not None and sp[0] > sp[1]:
        n, g = sp
        uppers.append(("dim-plus-cd", n + g, CITE["dim-plus-cd"]))
    kc = known_cat(space)
    if kc is not None:
        uppers.append(("known-table", kc[0], kc[1]))
    factors = _factors_of(space)
    if factors is not None:
        reports = [cat_bounds(f) for f in factors]
        if all(r.exact for r in reports):
            uppers.append(("cat-product", sum(r.lower for r in reports), CITE["cat-product"]))
    reason, upper, cite = min(uppers, key=lambda t: t[1])
    citations.append(cite)
    return BoundReport(
        invariant="cat",
        space=space,
        lower=cl.length,
        upper=upper,
        exact=cl.length == upper,
        lower_reason=f"cup-length ({cl.method})",
        upper_reason=reason,
        witness=cl.witness,
        citations=citations,
    )


def tcm_bounds(
    space: SpaceDescriptor,
    m: int,
    with_certificate: Union[bool, str] = "auto",
    strategy: str = "auto",
) -> BoundReport:
    """Certified bounds for the m-th sequential topological complexity.

    Lower: the best of a verified special-zero-divisor certificate, the
    category of the (m-1)-st power, and the cited table.  Upper: the
    category of the m-th power (m times an exact category), product
    subadditivity, and the cited table.  ``with_certificate`` may be False
    to skip certificate search when a table value already decides.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    ring = ring_of(space)
    cat_rep = cat_bounds(space)
    citations: List[str] = []
    notes: List[str] = []

    kt = known_tc(space, m)
    want_cert = (
        with_certificate is True
        or (with_certificate == "auto" and (kt is None or m <= 3))
    )
    lowers: List[Tuple[str, int]] = []
    cert: Optional[Certificate] = None
    if want_cert:
        length, cert = szcl_lower(ring, m, strategy=strategy)
        if cert is not None and not cert.verify():
            raise AssertionError("szcl certificate failed to re-verify")
        lowers.append(("szcl-certificate", length))
        citations.append(CITE["zcl"])
    if cat_rep.exact:
        power_rep = cat_bounds(Power(space, m - 1)) if m > 2 else cat_rep
        if power_rep.exact:
            lowers.append(("cat-of-power", power_rep.lower))
            citations.append(CITE["cat-power"])
    uppers: List[Tuple[str, int, str]] = [("dimension", m * dimension(space), CITE["dim"])]
    if cat_rep.exact:
        power_m = cat_bounds(Power(space, m))
        if power_m.exact:
            uppers.append(("m-times-cat", power_m.lower, CITE["m-times-cat"]))
        else:
            uppers.append(("m-times-cat", m * cat_rep.lower, CITE["m-times-cat"]))
    if kt is not None:
        lowers.append(("known-table", kt[0]))
        uppers.append(("known-table", kt[0], kt[1]))
        citations.append(kt[1])
    factors = _factors_of(space)
    if factors is not None:
        sub = [tcm_bounds(f, m, with_certificate=False) for f in factors]
        if all(r.exact for r in sub):
            uppers.append(("tc-product", sum(r.lower for r in sub), CITE["tc-product"]))
    nn = _is_nonorientable_sp(space)
    if nn is not None and nn[0] >= 2:
        n = nn[0]
        notes.append(
            f"reported interval for this family: [{2 * n * (m - 1)}, {2 * n * m}]"
        )
    lower_reason, lower = max(lowers, key=lambda t: t[1], default=("none", 0))
    upper_reason, upper, cite = min(uppers, key=lambda t: t[1])
    citations.append(cite)
    return BoundReport(
        invariant=f"TC_{m}",
        space=space,
        m=m,
        lower=lower,
        upper=upper,
        exact=lower == upper,
        lower_reason=lower_reason,
        upper_reason=upper_reason,
        certificate=cert,
        citations=sorted(set(citations)),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# derived checks
# ---------------------------------------------------------------------------

@dataclass
class AdditivityReport:
    spaces: List[SpaceDescriptor]
    m: int
    factor_cat: List[BoundReport]
    product_cat: BoundReport
    cat_additive: bool
    factor_szcl: List[int]
    lifted_szcl: int
    szcl_superadditive: bool
    factor_tc: List[BoundReport]
    product_tc: BoundReport
    tc_additive: Optional[bool]

    def to_json(self) -> dict:
        return {
            "spaces": [str(s) for s in self.spaces],
            "m": self.m,
            "cat_factors": [r.to_json() for r in self.factor_cat],
            "cat_product": self.product_cat.to_json(),
            "cat_additive": self.cat_additive,
            "szcl_factors": self.factor_szcl,
            "szcl_lifted_product": self.lifted_szcl,
            "szcl_superadditive": self.szcl_superadditive,
            "tc_factors": [r.to_json() for r in self.factor_tc],
            "tc_product": self.product_tc.to_json(),
            "tc_additive": self.tc_additive,
        }


def _lift_certificate_factors(
    cert: Certificate, product_ring: TensorRing, fi: int, T_prod: TensorRing
) -> List[SpecialZeroDivisor]:
    lifted = []
    for szd in cert.factors:
        base_class = product_ring.pi(fi, szd.base)
        lifted.append(special_zero_divisor(T_prod, base_class, szd.weights))
    return lifted


def product_additivity_check(spaces: Sequence[SpaceDescriptor], m: int) -> AdditivityReport:
    """Verify cup/cat additivity and szcl super-additivity on a finite product.

    The szcl check multiplies the factor certificates after lifting them
    through the product projections; TC additivity is certified only when
    every TC value involved is exact.
    """
    spaces = list(spaces)
    product_space = Product(tuple(spaces))
    product_ring = ring_of(product_space)

    factor_cat = [cat_bounds(s) for s in spaces]
    product_cat = cat_bounds(product_space)
    cat_additive = (
        all(r.exact for r in factor_cat)
        and product_cat.exact
        and product_cat.lower == sum(r.lower for r in factor_cat)
    )

    factor_certs = []
    factor_szcl = []
    for s in spaces:
        length, cert = szcl_lower(ring_of(s), m)
        factor_szcl.append(length)
        factor_certs.append(cert)
    T_prod = tensor_power(product_ring, m)
    lifted: List[SpecialZeroDivisor] = []
    for fi, cert in enumerate(factor_certs, start=1):
        if cert is not None:
            lifted.extend(_lift_certificate_factors(cert, product_ring, fi, T_prod))
    acc = T_prod.one()
    count = 0
    for szd in lifted:
        trial = T_prod.cup(acc, szd.element)
        if trial.is_zero():
            break
        acc = trial
        count += 1
    lifted_szcl = count
    szcl_superadditive = count == sum(factor_szcl) and not acc.is_zero()

    factor_tc = [tcm_bounds(s, m) for s in spaces]
    product_tc = tcm_bounds(product_space, m)
    if all(r.exact for r in factor_tc) and product_tc.exact:
        tc_additive: Optional[bool] = product_tc.lower == sum(r.lower for r in factor_tc)
    else:
        tc_additive = None
    return AdditivityReport(
        spaces=spaces,
        m=m,
        factor_cat=factor_cat,
        product_cat=product_cat,
        cat_additive=cat_additive,
        factor_szcl=factor_szcl,
        lifted_szcl=lifted_szcl,
        szcl_superadditive=szcl_superadditive,
        factor_tc=factor_tc,
        product_tc=product_tc,
        tc_additive=tc_additive,
    )


@dataclass
class GaneaReport:
    space: SpaceDescriptor
    k: int
    m: Optional[int]
    base_cat: BoundReport
    product_cat: BoundReport
    cat_certified: bool
    cat_equality: Optional[bool]
    tc_status: str
    base_tc: Optional[BoundReport] = None
    product_tc: Optional[BoundReport] = None
    sphere_tc: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "space": str(self.space),
            "k": self.k,
            "m": self.m,
            "cat_base": self.base_cat.to_json(),
            "cat_product": self.product_cat.to_json(),
            "cat_certified": self.cat_certified,
            "cat_equality": self.cat_equality,
            "tc_status": self.tc_status,
        }
        if self.base_tc is not None:
            out["tc_base"] = self.base_tc.to_json()
        if self.product_tc is not None:
            out["tc_product"] = self.product_tc.to_json()
        if self.sphere_tc is not None:
            out["tc_sphere"] = self.sphere_tc
        return out


def ganea_check(space: SpaceDescriptor, k: int, m: Optional[int] = None) -> GaneaReport:
    """Check cat(space x S^k) = cat(space) + 1, and TC_m additivity with S^k."""
    base_cat = cat_bounds(space)
    product_space = Product((space, Sphere(k)))
    product_cat = cat_bounds(product_space)
    cat_certified = base_cat.exact and product_cat.exact
    cat_equality = (
        product_cat.lower == base_cat.lower + 1 if cat_certified else None
    )
    if m is None:
        return GaneaReport(
            space, k, None, base_cat, product_cat, cat_certified, cat_equality, "not-requested"
        )
    base_tc = tcm_bounds(space, m)
    sphere_tc = known_tc(Sphere(k), m)[0]
    if not base_tc.exact:
        return GaneaReport(
            space, k, m, base_cat, product_cat, cat_certified, cat_equality,
            "cannot certify: base TC_m is an interval", base_tc, None, sphere_tc,
        )
    product_tc = tcm_bounds(product_space, m)
    if product_tc.exact and product_tc.lower == base_tc.lower + sphere_tc:
        status = "certified"
    elif product_tc.exact:
        status = "certified-unequal"
    else:
        status = "cannot certify: product TC_m is an interval"
    return GaneaReport(
        space, k, m, base_cat, product_cat, cat_certified, cat_equality,
        status, base_tc, product_tc, sphere_tc,
    )


@dataclass
class GenfunReport:
    space: SpaceDescriptor
    horizon: int
    cat: int
    values: List[int]
    progression_ok: bool
    series_ok: bool
    numerator: List[int]
    numerator_at_one: int

    def to_json(self) -> dict:
        return {
            "space": str(self.space),
            "horizon": self.horizon,
            "cat": self.cat,
            "tc_values": self.values,
            "progression_ok": self.progression_ok,
            "series_ok": self.series_ok,
            "numerator": self.numerator,
            "numerator_at_one": self.numerator_at_one,
        }


def genfun(space: SpaceDescriptor, horizon: int) -> GenfunReport:
    """TC-generating-function coefficients TC_{m+1} for m = 1..horizon.

    Requires every TC value in range to be exact; verifies the arithmetic
    progression TC_{m+1} = (m+1) cat and the closed form
    (2t - t^2) cat / (1 - t)^2.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    cat_rep = cat_bounds(space)
    if not cat_rep.exact:
        raise InexactValue(f"cat of {space} is not exact")
    cat = cat_rep.lower
    values = []
    for m in range(2, horizon + 2):
        rep = tcm_bounds(space, m, with_certificate="auto")
        if not rep.exact:
            raise InexactValue(f"TC_{m} of {space} is only [{rep.lower}, {rep.upper}]")
        values.append(rep.lower)
    progression_ok = all(values[i] == (i + 2) * cat for i in range(len(values)))
    # expansion of (2t - t^2) cat / (1-t)^2: coefficient of t^m is (m+1) cat
    series = [(m + 1) * cat for m in range(1, horizon + 1)]
    series_ok = values == series
    numerator = [0, 2 * cat, -cat]
    return GenfunReport(
        space=space,
        horizon=horizon,
        cat=cat,
        values=values,
        progression_ok=progression_ok,
        series_ok=series_ok,
        numerator=numerator,
        numerator_at_one=sum(numerator),
    )


def essential(space: SpaceDescriptor) -> bool:
    """A closed 2n-manifold in the catalog is essential iff cat equals 2n."""
    sp = _is_orientable_sp(space) or _is_nonorientable_sp(space)
    if sp is None:
        raise UnsupportedSpace(
            "essentialness is decided only for symmetric products of surfaces"
        )
    rep = cat_bounds(space)
    if not rep.exact:
        raise InexactValue(f"cat of {space} is not exact")
    return rep.lower == dimension(space)


@dataclass
class DtcReport:
    space: SpaceDescriptor
    m: int
    lower: int
    certificate: Optional[Certificate]
    equals_tc: bool
    tc: Optional[BoundReport]

    def to_json(self) -> dict:
        out = {
            "space": str(self.space),
            "m": self.m,
            "lower": self.lower,
            "equals_tc": self.equals_tc,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.tc is not None:
            out["tc"] = self.tc.to_json()
        return out


def dtc_lower(space: SpaceDescriptor, m: int) -> DtcReport:
    """Special-zero-divisor length as a distributional-complexity lower bound."""
    from .catalog import field_of
    from .fields import QQ

    if field_of(space) is not QQ:
        raise UnsupportedSpace("the distributional lower bound is a rational-coefficient statement")
    length, cert = szcl_lower(ring_of(space), m)
    tc = tcm_bounds(space, m)
    equals = tc.exact and tc.lower == length
    return DtcReport(space=space, m=m, lower=length, certificate=cert, equals_tc=equals, tc=tc)
