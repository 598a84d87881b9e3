"""The quantum double of a finite group as an abstract algebra.

A basis element is a pair (g, h) standing for the product of the group
element g with the dual-basis projection onto h.  Elements are sparse
complex combinations of such pairs, and tensors of rank 2 or 3 are sparse
combinations of tuples of pairs.  Everything here is exact in the sense
that the structure constants are integers; floating point enters only as
the container for coefficients.

The multiplication rule moves a projection past a group element by
conjugation, the coproduct splits a projection over all factorizations of
its target, and the antipode inverts both ingredients.  The canonical
solution of the abstract Yang-Baxter equation is the sum over the group of
each element tensored with its dual projection.

The exhaustive axiom checks iterate over every basis element, or every
pair, so they are restricted to groups of order at most 12.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup
from .scalars import DROP_TOL

Pair = tuple[int, int]

_MAX_SYMBOLIC_ORDER = 12


@dataclass
class DoubleElement:
    group: FiniteGroup
    terms: dict[Pair, complex]


@dataclass
class DoubleTensor:
    group: FiniteGroup
    rank: int
    terms: dict[tuple[Pair, ...], complex]


def _clean(terms: dict, tol: float = DROP_TOL) -> dict:
    return {k: c for k, c in terms.items() if abs(c) > tol}


def basis(group: FiniteGroup, g: int, h: int) -> DoubleElement:
    return DoubleElement(group, {(g, h): 1.0})


def unit(group: FiniteGroup) -> DoubleElement:
    """The identity, a full sum of projections on the identity element."""
    return DoubleElement(group, {(0, h): 1.0 for h in range(group.order)})


def group_like(group: FiniteGroup, g: int) -> DoubleElement:
    """Embed a group element as the sum over all projections."""
    return DoubleElement(group, {(g, h): 1.0 for h in range(group.order)})


def dual_delta(group: FiniteGroup, h: int) -> DoubleElement:
    return basis(group, 0, h)


def add(a: DoubleElement, b: DoubleElement) -> DoubleElement:
    terms = dict(a.terms)
    for k, c in b.terms.items():
        terms[k] = terms.get(k, 0) + c
    return DoubleElement(a.group, _clean(terms))


def scale(a: DoubleElement, c: complex) -> DoubleElement:
    return DoubleElement(a.group, _clean({k: c * v for k, v in a.terms.items()}))


def _pair_product(group: FiniteGroup, p1: Pair, p2: Pair) -> Pair | None:
    """Product of two basis pairs, or None when the projections clash."""
    g1, h1 = p1
    g2, h2 = p2
    if h2 != group.conj(group.inv(g2), h1):
        return None
    return (group.mul(g1, g2), h2)


def multiply(a: DoubleElement, b: DoubleElement) -> DoubleElement:
    group = a.group
    terms: dict[Pair, complex] = {}
    for p1, c1 in a.terms.items():
        for p2, c2 in b.terms.items():
            p = _pair_product(group, p1, p2)
            if p is not None:
                terms[p] = terms.get(p, 0) + c1 * c2
    return DoubleElement(group, _clean(terms))


def counit(a: DoubleElement) -> complex:
    return sum((c for (g, h), c in a.terms.items() if h == 0), complex(0))


def antipode(a: DoubleElement) -> DoubleElement:
    group = a.group
    terms: dict[Pair, complex] = {}
    for (g, h), c in a.terms.items():
        p = (group.inv(g), group.conj(g, group.inv(h)))
        terms[p] = terms.get(p, 0) + c
    return DoubleElement(group, _clean(terms))


def coproduct(a: DoubleElement) -> DoubleTensor:
    """Split each projection target h over all factorizations h = k (k^{-1}h)."""
    group = a.group
    terms: dict[tuple[Pair, ...], complex] = {}
    for (g, h), c in a.terms.items():
        for k in range(group.order):
            key = ((g, group.mul(group.inv(k), h)), (g, k))
            terms[key] = terms.get(key, 0) + c
    return DoubleTensor(group, 2, _clean(terms))


def opposite_coproduct(a: DoubleElement) -> DoubleTensor:
    return swap_legs(coproduct(a), 0, 1)


def tensor_of(*factors: DoubleElement) -> DoubleTensor:
    group = factors[0].group
    terms: dict[tuple[Pair, ...], complex] = {}

    def rec(i: int, key: tuple[Pair, ...], coeff: complex) -> None:
        if i == len(factors):
            terms[key] = terms.get(key, 0) + coeff
            return
        for p, c in factors[i].terms.items():
            rec(i + 1, key + (p,), coeff * c)

    rec(0, (), 1.0)
    return DoubleTensor(group, len(factors), _clean(terms))


def tensor_add(a: DoubleTensor, b: DoubleTensor) -> DoubleTensor:
    terms = dict(a.terms)
    for k, c in b.terms.items():
        terms[k] = terms.get(k, 0) + c
    return DoubleTensor(a.group, a.rank, _clean(terms))


def tensor_scale(a: DoubleTensor, c: complex) -> DoubleTensor:
    return DoubleTensor(a.group, a.rank,
                        _clean({k: c * v for k, v in a.terms.items()}))


def tensor_multiply(a: DoubleTensor, b: DoubleTensor) -> DoubleTensor:
    """Legwise product of two tensors of equal rank."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch, {a.rank} vs {b.rank}")
    group = a.group
    terms: dict[tuple[Pair, ...], complex] = {}
    for key1, c1 in a.terms.items():
        for key2, c2 in b.terms.items():
            out = []
            for p1, p2 in zip(key1, key2):
                p = _pair_product(group, p1, p2)
                if p is None:
                    break
                out.append(p)
            else:
                key = tuple(out)
                terms[key] = terms.get(key, 0) + c1 * c2
    return DoubleTensor(group, a.rank, _clean(terms))


def tensor_equal(a: DoubleTensor, b: DoubleTensor, tol: float = DROP_TOL) -> bool:
    keys = set(a.terms) | set(b.terms)
    return all(abs(a.terms.get(k, 0) - b.terms.get(k, 0)) <= tol for k in keys)


def swap_legs(a: DoubleTensor, i: int, j: int) -> DoubleTensor:
    terms: dict[tuple[Pair, ...], complex] = {}
    for key, c in a.terms.items():
        lst = list(key)
        lst[i], lst[j] = lst[j], lst[i]
        terms[tuple(lst)] = terms.get(tuple(lst), 0) + c
    return DoubleTensor(a.group, a.rank, _clean(terms))


def embed_two_leg(a: DoubleTensor, legs: tuple[int, int], rank: int) -> DoubleTensor:
    """Place a rank-2 tensor on the given legs of a larger tensor, filling
    the remaining legs with the unit."""
    if a.rank != 2:
        raise ValueError("embedding expects a rank-2 tensor")
    group = a.group
    unit_pairs = [(0, h) for h in range(group.order)]
    others = [i for i in range(rank) if i not in legs]
    terms: dict[tuple[Pair, ...], complex] = {}

    def fill(key: list[Pair | None], i: int, coeff: complex) -> None:
        if i == len(others):
            terms[tuple(key)] = terms.get(tuple(key), 0) + coeff  # type: ignore[arg-type]
            return
        for p in unit_pairs:
            key[others[i]] = p
            fill(key, i + 1, coeff)
        key[others[i]] = None

    for (p1, p2), c in a.terms.items():
        key: list[Pair | None] = [None] * rank
        key[legs[0]] = p1
        key[legs[1]] = p2
        fill(key, 0, c)
    return DoubleTensor(group, rank, _clean(terms))


def apply_coproduct_to_leg(a: DoubleTensor, leg: int) -> DoubleTensor:
    """Replace one leg by its coproduct, producing a tensor of rank one more.

    The two new legs take the position of the old one, in order.
    """
    group = a.group
    terms: dict[tuple[Pair, ...], complex] = {}
    for key, c in a.terms.items():
        g, h = key[leg]
        for k in range(group.order):
            split = ((g, group.mul(group.inv(k), h)), (g, k))
            new_key = key[:leg] + split + key[leg + 1:]
            terms[new_key] = terms.get(new_key, 0) + c
    return DoubleTensor(group, a.rank + 1, _clean(terms))


def universal_r(group: FiniteGroup) -> DoubleTensor:
    """The canonical two-leg solution: sum of g tensor its dual projection."""
    if group.order > _MAX_SYMBOLIC_ORDER:
        raise ValueError(
            f"symbolic layer is limited to order {_MAX_SYMBOLIC_ORDER}, "
            f"{group.name} has order {group.order}")
    terms: dict[tuple[Pair, ...], complex] = {}
    for g in range(group.order):
        for h in range(group.order):
            terms[((g, h), (0, g))] = 1.0
    return DoubleTensor(group, 2, terms)


def check_hopf_axioms(group: FiniteGroup) -> dict[str, bool]:
    """Exhaustive basiswise verification of the Hopf algebra axioms.

    Returns a dict of named boolean outcomes.  Everything is checked over
    every basis element, and multiplicativity of the coproduct over every
    pair of basis elements.
    """
    if group.order > _MAX_SYMBOLIC_ORDER:
        raise ValueError(
            f"symbolic layer is limited to order {_MAX_SYMBOLIC_ORDER}, "
            f"{group.name} has order {group.order}")
    N = group.order
    one = unit(group)
    out = {
        "associative": True,
        "unital": True,
        "coassociative": True,
        "counit": True,
        "coproduct_multiplicative": True,
        "counit_multiplicative": True,
        "antipode": True,
    }

    basis_elems = [basis(group, g, h) for g in range(N) for h in range(N)]

    for a in basis_elems:
        da = coproduct(a)
        left = apply_coproduct_to_leg(da, 0)
        right = apply_coproduct_to_leg(da, 1)
        if not tensor_equal(left, right):
            out["coassociative"] = False

        # both counit contractions must give back the element
        for leg in (0, 1):
            collapsed: dict[Pair, complex] = {}
            for key, c in da.terms.items():
                w = c * counit(DoubleElement(group, {key[leg]: 1.0}))
                if abs(w) > DROP_TOL:
                    other = key[1 - leg]
                    collapsed[other] = collapsed.get(other, 0) + w
            if _clean(collapsed) != _clean(dict(a.terms)):
                out["counit"] = False

        # antipode: multiply the legs of (S x id) and (id x S) coproducts
        for which in ("left", "right"):
            acc: dict[Pair, complex] = {}
            for (p1, p2), c in da.terms.items():
                e1 = DoubleElement(group, {p1: 1.0})
                e2 = DoubleElement(group, {p2: 1.0})
                if which == "left":
                    prod = multiply(antipode(e1), e2)
                else:
                    prod = multiply(e1, antipode(e2))
                for p, v in prod.terms.items():
                    acc[p] = acc.get(p, 0) + c * v
            target = scale(one, counit(a))
            if _clean(acc) != _clean(dict(target.terms)):
                out["antipode"] = False

        if _clean(dict(multiply(one, a).terms)) != _clean(dict(a.terms)):
            out["unital"] = False
        if _clean(dict(multiply(a, one).terms)) != _clean(dict(a.terms)):
            out["unital"] = False

    for a in basis_elems:
        for b in basis_elems:
            ab = multiply(a, b)
            lhs = coproduct(ab)
            rhs = tensor_multiply(coproduct(a), coproduct(b))
            if not tensor_equal(lhs, rhs):
                out["coproduct_multiplicative"] = False
            if abs(counit(ab) - counit(a) * counit(b)) > DROP_TOL:
                out["counit_multiplicative"] = False

    # products of basis pairs have at most one term, so the full triple
    # loop over basis elements stays cheap
    pairs = [(g, h) for g in range(N) for h in range(N)]
    for p1 in pairs:
        for p2 in pairs:
            q = _pair_product(group, p1, p2)
            for p3 in pairs:
                left = None if q is None else _pair_product(group, q, p3)
                q23 = _pair_product(group, p2, p3)
                right = None if q23 is None else _pair_product(group, p1, q23)
                if left != right:
                    out["associative"] = False

    return out


def check_quasitriangular_axioms(group: FiniteGroup) -> dict[str, bool]:
    """Exhaustive verification that the canonical two-leg solution
    intertwines the coproduct with its opposite and satisfies both
    splitting rules, hence the abstract Yang-Baxter equation.
    """
    if group.order > _MAX_SYMBOLIC_ORDER:
        raise ValueError(
            f"symbolic layer is limited to order {_MAX_SYMBOLIC_ORDER}, "
            f"{group.name} has order {group.order}")
    N = group.order
    R = universal_r(group)
    out = {
        "intertwines_coproduct": True,
        "splits_left": True,
        "splits_right": True,
        "abstract_ybe": True,
    }

    for g in range(N):
        for h in range(N):
            a = basis(group, g, h)
            lhs = tensor_multiply(R, coproduct(a))
            rhs = tensor_multiply(opposite_coproduct(a), R)
            if not tensor_equal(lhs, rhs):
                out["intertwines_coproduct"] = False

    r13 = embed_two_leg(R, (0, 2), 3)
    r23 = embed_two_leg(R, (1, 2), 3)
    r12 = embed_two_leg(R, (0, 1), 3)

    if not tensor_equal(apply_coproduct_to_leg(R, 0),
                        tensor_multiply(r13, r23)):
        out["splits_left"] = False
    if not tensor_equal(apply_coproduct_to_leg(R, 1),
                        tensor_multiply(r13, r12)):
        out["splits_right"] = False

    lhs = tensor_multiply(tensor_multiply(r12, r13), r23)
    rhs = tensor_multiply(tensor_multiply(r23, r13), r12)
    if not tensor_equal(lhs, rhs):
        out["abstract_ybe"] = False

    return out
