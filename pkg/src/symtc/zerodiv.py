"""Special zero-divisors and certified cup products of them.

A special zero-divisor of a class x is sum_j gamma_j pi_j*(x) with integer
weights summing to zero (at least two nonzero); its diagonal pullback
vanishes by construction.  ``szcl_lower`` searches for long nonzero cup
products of such classes and returns a replayable certificate.

Strategies:

* ``paper``   - a fixed recipe of canonical-weight bar powers per catalog
  family, multiplied left to right with reduce-as-you-go; if the running
  product dies the longest nonzero prefix is kept.
* ``staircase`` - per odd class the m-1 consecutive-difference bars
  pi_j* - pi_{j+1}* (each usable once: odd classes square to zero over Q),
  canonical bars for even classes, pairwise bars over Z2 where odd squares
  survive; assembled greedily, skipping any factor that kills the product.
* ``greedy``  - beam search over bars of homogeneous basis classes.

``auto`` runs paper and staircase and keeps the longer certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Element, PresentedRing
from .errors import RingMismatch
from .tensor import PureTensor, TElement, TensorRing, tensor_power

STRATEGIES = ("auto", "paper", "staircase", "greedy")


@dataclass(frozen=True)
class SpecialZeroDivisor:
    """sum_j gamma_j pi_j*(x), with diagonal pullback zero."""

    base: object
    weights: Tuple[int, ...]
    element: TElement
    label: str = ""


def canonical_weights(m: int) -> Tuple[int, ...]:
    return (1,) * (m - 1) + (-(m - 1),)


def staircase_weights(m: int, j: int) -> Tuple[int, ...]:
    if not 1 <= j <= m - 1:
        raise ValueError(f"staircase index {j} out of range 1..{m - 1}")
    w = [0] * m
    w[j - 1] = 1
    w[j] = -1
    return tuple(w)


def special_zero_divisor(T: TensorRing, x, weights: Sequence[int]) -> SpecialZeroDivisor:
    """Realize sum_j weights[j] pi_j*(x) and check it kills the diagonal."""
    if T.power_base is None:
        raise RingMismatch("special zero-divisors live in tensor powers")
    m = T.power_exponent
    weights = tuple(int(w) for w in weights)
    if len(weights) != m:
        raise ValueError(f"need {m} weights, got {len(weights)}")
    if sum(weights) != 0:
        raise ValueError("weights must sum to zero")
    if sum(1 for w in weights if w) < 2:
        raise ValueError("need at least two nonzero weights")
    deg = x.degree()
    if deg is None or deg <= 0:
        raise ValueError("base class must be homogeneous of positive degree")
    el = T.zero()
    for j, w in enumerate(weights, start=1):
        if w:
            el = el + T.pi(j, x).scale(w)
    diag = T.diag(el)
    if not diag.is_zero():
        raise AssertionError("realized special zero-divisor does not kill the diagonal")
    return SpecialZeroDivisor(base=x, weights=weights, element=el)


def canonical_szd(T: TensorRing, x, label: str = "") -> SpecialZeroDivisor:
    szd = special_zero_divisor(T, x, canonical_weights(T.power_exponent))
    return SpecialZeroDivisor(szd.base, szd.weights, szd.element, label)


def staircase_szd(T: TensorRing, x, j: int, label: str = "") -> SpecialZeroDivisor:
    szd = special_zero_divisor(T, x, staircase_weights(T.power_exponent, j))
    return SpecialZeroDivisor(szd.base, szd.weights, szd.element, label)


def pair_szd(T: TensorRing, x, i: int, j: int, label: str = "") -> SpecialZeroDivisor:
    w = [0] * T.power_exponent
    w[i - 1] += 1
    w[j - 1] -= 1
    szd = special_zero_divisor(T, x, w)
    return SpecialZeroDivisor(szd.base, szd.weights, szd.element, label)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass
class Certificate:
    """A replayable nonzero cup product of special zero-divisors."""

    tensor_ring: TensorRing
    factors: List[SpecialZeroDivisor]
    product: TElement
    convention: str

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def leading(self) -> Tuple[PureTensor, object]:
        return self.product.leading_term()

    @property
    def leading_coefficient(self):
        return self.product.leading_term()[1]

    def verify(self) -> bool:
        """Re-multiply the stored factors and compare with the product."""
        acc = self.tensor_ring.one()
        for f in self.factors:
            acc = self.tensor_ring.cup(acc, f.element)
        return (not acc.is_zero()) and acc == self.product

    def to_json(self) -> dict:
        T = self.tensor_ring
        return {
            "length": self.length,
            "convention": self.convention,
            "tensor_ring": T.name,
            "factors": [
                {
                    "label": f.label,
                    "weights": list(f.weights),
                    "degree": f.element.degree(),
                    "terms": _terms_json(f.element),
                }
                for f in self.factors
            ],
            "product": {
                "degree": self.product.degree(),
                "support": len(self.product.terms),
                "leading_tensor": T.format_tensor(self.leading[0]),
                "leading_coefficient": str(self.leading[1]),
                "terms": _terms_json(self.product),
            },
        }


def _terms_json(el: TElement, cap: int = 64) -> List[dict]:
    T = el.ring
    out = []
    for pt in el.support()[:cap]:
        out.append({"tensor": T.format_tensor(pt), "coefficient": str(el.terms[pt])})
    if len(el.terms) > cap:
        out.append({"tensor": "...", "coefficient": f"{len(el.terms) - cap} more"})
    return out


# ---------------------------------------------------------------------------
# class pools per catalog family
# ---------------------------------------------------------------------------

def _pool_classes(base) -> List[Tuple[object, int, str]]:
    """(class, degree parity, label) pool used by the certificate strategies."""
    if isinstance(base, TensorRing):
        pool = []
        # lift each factor's pool through the product projections
        offset = 0
        for fi, f in enumerate(base.factors, start=1):
            for y, parity, label in _pool_classes(f):
                lifted = base.pi(fi, y) if base.power_base is None else None
                if lifted is None:
                    # powers-of-powers are not used as certificate bases
                    continue
                pool.append((lifted, parity, f"{label}[{fi}]"))
            offset += 1
        return pool
    kind = base.meta.get("kind")
    if kind == "orientable":
        pool = []
        for i in range(1, base.meta["g"] + 1):
            pool.append((base.gen(f"a{i}"), 1, f"a{i}"))
            pool.append((base.gen(f"b{i}"), 1, f"b{i}"))
        pool.append((base.gen("c"), 0, "c"))
        return pool
    if kind == "nonorientable":
        pool = [
            (base.gen(f"e{i}"), 1, f"e{i}") for i in range(1, base.meta["g"] + 1)
        ]
        pool.append((base.gen("d"), 0, "d"))
        return pool
    if kind == "sphere":
        return [(base.gen("x"), base.meta["k"] % 2, "x")]
    # fallback: homogeneous basis classes in low degree
    pool = []
    top = base.top_degree or 0
    for d in range(1, top + 1):
        for el in base.basis_elements(d):
            pool.append((el, d % 2, base.format_element(el)))
    return pool


def _greedy_multiply(
    T: TensorRing, stream: Iterable[SpecialZeroDivisor], skip_dead: bool
) -> Tuple[TElement, List[SpecialZeroDivisor]]:
    """Multiply factors left to right; optionally skip ones that kill the product."""
    acc = T.one()
    used: List[SpecialZeroDivisor] = []
    budget = T.top_degree
    for szd in stream:
        deg = szd.element.degree() or 0
        if budget is not None and (acc_deg := acc.degree() or 0) + deg > budget:
            continue
        trial = T.cup(acc, szd.element)
        if trial.is_zero():
            if skip_dead:
                continue
            break
        acc = trial
        used.append(szd)
    return acc, used


def _paper_stream(T: TensorRing, base) -> List[SpecialZeroDivisor]:
    """The fixed canonical-bar recipe per catalog family."""
    m = T.power_exponent
    kind = base.meta.get("kind") if isinstance(base, PresentedRing) else None
    stream: List[SpecialZeroDivisor] = []
    if kind == "orientable":
        n, g = base.meta["n"], base.meta["g"]
        for i in range(1, min(n, g) + 1):
            stream += [canonical_szd(T, base.gen(f"a{i}"), f"a{i}")] * m
            stream += [canonical_szd(T, base.gen(f"b{i}"), f"b{i}")] * m
        if n > g:
            stream += [canonical_szd(T, base.gen("c"), "c")] * (m * (n - g))
        return stream
    if kind == "nonorientable":
        n, g = base.meta["n"], base.meta["g"]
        for i in range(1, min(n, g) + 1):
            stream += [canonical_szd(T, base.gen(f"e{i}"), f"e{i}")] * 2
        return stream
    if kind == "sphere":
        x = base.gen("x")
        reps = m - 1 if base.meta["k"] % 2 else m
        return [canonical_szd(T, x, "x")] * reps
    if isinstance(base, TensorRing) and base.power_base is None:
        out: List[SpecialZeroDivisor] = []
        for fi, f in enumerate(base.factors, start=1):
            kind_f = f.meta.get("kind")
            if kind_f == "sphere":
                x = base.pi(fi, f.gen("x"))
                reps = m - 1 if f.meta["k"] % 2 else m
                out += [canonical_szd(T, x, f"x[{fi}]")] * reps
            else:
                sub = _paper_stream_lifted(T, base, fi, f)
                out += sub
        return out
    return []


def _paper_stream_lifted(
    T: TensorRing, base: TensorRing, fi: int, f: PresentedRing
) -> List[SpecialZeroDivisor]:
    m = T.power_exponent
    kind = f.meta.get("kind")
    out: List[SpecialZeroDivisor] = []
    if kind == "orientable":
        n, g = f.meta["n"], f.meta["g"]
        for i in range(1, min(n, g) + 1):
            out += [canonical_szd(T, base.pi(fi, f.gen(f"a{i}")), f"a{i}[{fi}]")] * m
            out += [canonical_szd(T, base.pi(fi, f.gen(f"b{i}")), f"b{i}[{fi}]")] * m
        if n > g:
            out += [canonical_szd(T, base.pi(fi, f.gen("c")), f"c[{fi}]")] * (m * (n - g))
    elif kind == "nonorientable":
        n, g = f.meta["n"], f.meta["g"]
        for i in range(1, min(n, g) + 1):
            out += [canonical_szd(T, base.pi(fi, f.gen(f"e{i}")), f"e{i}[{fi}]")] * 2
    return out


def _staircase_stream(T: TensorRing, base) -> List[SpecialZeroDivisor]:
    """Corrected factor stream: staircases for odd classes, bar powers for even."""
    m = T.power_exponent
    budget = T.top_degree or 0
    char2 = T.field.characteristic == 2
    stream: List[SpecialZeroDivisor] = []
    for y, parity, label in _pool_classes(base):
        deg = y.degree() or 1
        if parity == 1 and not char2:
            for j in range(1, m):
                stream.append(staircase_szd(T, y, j, label))
        elif parity == 1 and char2:
            # odd squares survive over Z2; chains of pairwise bars can be long
            reps = budget // deg
            for j in range(1, m):
                stream += [pair_szd(T, y, j, j + 1, label)] * reps
        else:
            reps = budget // deg
            stream += [canonical_szd(T, y, label)] * reps
    return stream


def _beam_search(
    T: TensorRing, base, beam_width: int
) -> Tuple[TElement, List[SpecialZeroDivisor]]:
    """Deterministic beam search over bars of homogeneous basis classes."""
    m = T.power_exponent
    char2 = T.field.characteristic == 2
    candidates: List[SpecialZeroDivisor] = []
    top = base.top_degree or 0
    for d in range(1, top + 1):
        for idx, el in enumerate(base.basis_elements(d)):
            label = f"deg{d}#{idx}"
            if d % 2 == 1 and not char2:
                for j in range(1, m):
                    candidates.append(staircase_szd(T, el, j, label))
            else:
                candidates.append(canonical_szd(T, el, label))
                if char2:
                    for j in range(1, m):
                        candidates.append(pair_szd(T, el, j, j + 1, label))

    def state_key(state):
        product, _ = state
        return (-len(product.terms), sorted(product.terms)[0])

    best: Tuple[TElement, List[SpecialZeroDivisor]] = (T.one(), [])
    frontier = [(T.one(), [])]
    budget = T.top_degree
    while frontier:
        nxt = []
        seen = set()
        for product, used in frontier:
            for szd in candidates:
                deg = szd.element.degree() or 0
                if budget is not None and (product.degree() or 0) + deg > budget:
                    continue
                trial = T.cup(product, szd.element)
                if trial.is_zero():
                    continue
                key = tuple(sorted(trial.terms))
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((trial, used + [szd]))
        if not nxt:
            break
        nxt.sort(key=state_key)
        frontier = nxt[:beam_width]
        if len(frontier[0][1]) > len(best[1]):
            best = frontier[0]
    return best


def szcl_lower(
    ring,
    m: int,
    strategy: str = "auto",
    convention: str = "koszul",
    beam_width: int = 64,
) -> Tuple[int, Optional[Certificate]]:
    """Certified lower bound for the m-th special zero-divisor cup-length.

    Returns the certificate length and the certificate (None when even a
    single factor cannot be made nonzero).  The certificate re-multiplies
    exactly; exactness of the bound is a separate question for the oracle.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    T = tensor_power(ring, m, convention=convention)

    results: List[Tuple[TElement, List[SpecialZeroDivisor]]] = []
    if strategy in ("paper", "auto"):
        results.append(_greedy_multiply(T, _paper_stream(T, ring), skip_dead=False))
    if strategy in ("staircase", "auto"):
        results.append(_greedy_multiply(T, _staircase_stream(T, ring), skip_dead=True))
    if strategy == "greedy":
        results.append(_beam_search(T, ring, beam_width))

    product, used = max(results, key=lambda r: len(r[1]))
    if not used:
        return 0, None
    cert = Certificate(tensor_ring=T, factors=used, product=product, convention=convention)
    return len(used), cert
