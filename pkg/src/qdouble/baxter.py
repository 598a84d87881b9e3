"""Spectral-parameter solutions grown out of constant braid matrices.

A spectral family is a braid-form matrix whose entries are Laurent
polynomials in one variable.  Its composition law tells how arguments
combine in the braided Yang-Baxter equation: multiplicative families
satisfy

    B12(x) B23(xz) B12(z) = B23(z) B12(xz) B23(x)

and additive families the same with xz replaced by x + z.  Both cases are
checked exactly, coefficient by coefficient, by passing to polynomials in
two independent variables; a seeded numerical sampler is available as a
cross-check.

The eigenvalue route to such families starts from a constant braid with
exactly three distinct eigenvalues.  Each choice of a middle eigenvalue
m out of the triple (l1, m, l3) yields the candidate

    B(x) = (l1 + m + l3 + l1 l3 / m) x I - (x - 1) B + l1 l3 x (x - 1) B^{-1}

and the six orderings collapse to at most three genuinely different
candidates, which are deduplicated here up to an overall Laurent factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .scalars import (Laurent, Laurent2, laurent_add, laurent_eval,
                      laurent_from_json, laurent_is_zero, laurent_max_coeff,
                      laurent_mul, laurent_scale, laurent_sub,
                      laurent_to_json, laurent2_max_coeff, laurent2_mul,
                      laurent2_sub, root_of_unity, substitute_inverse,
                      to_bivariate, DROP_TOL)
from .ybe import build_r
from .reps import irrep_from_id

Entries = dict[tuple[int, int], Laurent]


class EigenvalueCountError(ValueError):
    """Raised when a constant braid does not have exactly three
    distinct eigenvalues, so the eigenvalue ansatz does not apply."""


@dataclass(eq=False)
class SpectralFamily:
    """A braid-form solution with Laurent polynomial entries."""

    name: str
    site_dim: int
    entries: Entries
    composition: str                      # "multiplicative" or "additive"
    variable: str                         # display name of the parameter
    constant_braid: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.composition not in ("multiplicative", "additive"):
            raise ValueError(f"unknown composition {self.composition!r}")


def evaluate(fam: SpectralFamily, t: complex) -> np.ndarray:
    d2 = fam.site_dim ** 2
    M = np.zeros((d2, d2), dtype=complex)
    for (r, c), p in fam.entries.items():
        M[r, c] = laurent_eval(p, t)
    return M


def _sum_expand(p: Laurent) -> Laurent2:
    """Expand p(x + z) into a polynomial in x and z.  Needs p polynomial."""
    out: Laurent2 = {}
    for k, c in p.items():
        if k < 0:
            raise ValueError("additive substitution needs polynomial entries")
        for i in range(k + 1):
            key = (i, k - i)
            out[key] = out.get(key, 0) + c * comb(k, i)
    return out


def _entry_bivariate(p: Laurent, which: str, composition: str) -> Laurent2:
    if which == "x":
        return to_bivariate(p, 1, 0)
    if which == "z":
        return to_bivariate(p, 0, 1)
    if which != "xz":
        raise ValueError(f"unknown argument tag {which!r}")
    if composition == "multiplicative":
        return to_bivariate(p, 1, 1)
    return _sum_expand(p)


def _embed_pair_indices(d: int, legs: tuple[int, int]):
    """Index maps sending a two-site entry to three-site entries."""
    a, b = legs
    others = [s for s in range(3) if s not in legs]
    free = others[0]
    weights = [d ** s for s in range(3)]

    def places(i1: int, i2: int, m: int) -> int:
        return i1 * weights[a] + i2 * weights[b] + m * weights[free]

    return places


def _three_site(entries: Entries, d: int, legs: tuple[int, int],
                which: str, composition: str) -> dict[tuple[int, int], Laurent2]:
    places = _embed_pair_indices(d, legs)
    out: dict[tuple[int, int], Laurent2] = {}
    for (r, c), p in entries.items():
        biv = _entry_bivariate(p, which, composition)
        r1, r2 = r % d, r // d
        c1, c2 = c % d, c // d
        for m in range(d):
            # distinct (r, c, m) always hit distinct positions
            out[(places(r1, r2, m), places(c1, c2, m))] = dict(biv)
    return out


def _sparse_mul(A: dict[tuple[int, int], Laurent2],
                B: dict[tuple[int, int], Laurent2]) -> dict[tuple[int, int], Laurent2]:
    by_row: dict[int, list[tuple[int, Laurent2]]] = {}
    for (r, c), p in B.items():
        by_row.setdefault(r, []).append((c, p))
    out: dict[tuple[int, int], Laurent2] = {}
    for (r, k), p in A.items():
        for c, q in by_row.get(k, []):
            prod = laurent2_mul(p, q)
            key = (r, c)
            if key in out:
                acc = out[key]
                for e, v in prod.items():
                    acc[e] = acc.get(e, 0) + v
            else:
                out[key] = dict(prod)
    return {k: {e: v for e, v in p.items() if abs(v) > DROP_TOL}
            for k, p in out.items()}


def braid_ybe_exact(fam: SpectralFamily) -> float:
    """Largest coefficient of the braided Yang-Baxter defect, exactly."""
    d = fam.site_dim
    b12_x = _three_site(fam.entries, d, (0, 1), "x", fam.composition)
    b12_z = _three_site(fam.entries, d, (0, 1), "z", fam.composition)
    b12_m = _three_site(fam.entries, d, (0, 1), "xz", fam.composition)
    b23_x = _three_site(fam.entries, d, (1, 2), "x", fam.composition)
    b23_z = _three_site(fam.entries, d, (1, 2), "z", fam.composition)
    b23_m = _three_site(fam.entries, d, (1, 2), "xz", fam.composition)

    lhs = _sparse_mul(_sparse_mul(b12_x, b23_m), b12_z)
    rhs = _sparse_mul(_sparse_mul(b23_z, b12_m), b23_x)

    worst = 0.0
    for key in set(lhs) | set(rhs):
        diff = laurent2_sub(lhs.get(key, {}), rhs.get(key, {}))
        worst = max(worst, laurent2_max_coeff(diff))
    return worst


def _compose(fam: SpectralFamily, u: complex, v: complex) -> complex:
    return u * v if fam.composition == "multiplicative" else u + v


def braid_ybe_numeric(fam: SpectralFamily, samples: int = 50,
                      seed: int = 0) -> float:
    """Sampled Yang-Baxter defect.  Arguments are drawn in the disk of
    radius 2, mapped through the exponential for multiplicative families
    so that composition corresponds to adding the raw draws."""
    rng = np.random.default_rng(seed)
    d = fam.site_dim
    eye = np.eye(d)
    worst = 0.0
    for _ in range(samples):
        radii = 2.0 * np.sqrt(rng.uniform(0, 1, size=2))
        phases = rng.uniform(0, 2 * np.pi, size=2)
        ur, vr = radii * np.exp(1j * phases)
        if fam.composition == "multiplicative":
            u, v = np.exp(ur), np.exp(vr)
        else:
            u, v = ur, vr
        bu = evaluate(fam, u)
        bv = evaluate(fam, v)
        bm = evaluate(fam, _compose(fam, u, v))
        lhs = np.kron(eye, bu) @ np.kron(bm, eye) @ np.kron(eye, bv)
        rhs = np.kron(bv, eye) @ np.kron(eye, bm) @ np.kron(bu, eye)
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


def _argument_inverse(p: Laurent, composition: str) -> Laurent:
    if composition == "multiplicative":
        return substitute_inverse(p)
    return {k: c * (-1.0) ** k for k, c in p.items()}


def unitarity_scalar(fam: SpectralFamily) -> tuple[Laurent, float]:
    """The scalar p with B(x) B(xbar) = p(x) I, xbar the composition
    inverse of x, together with the largest deviating coefficient."""
    d2 = fam.site_dim ** 2
    flipped = {(r, c): _argument_inverse(p, fam.composition)
               for (r, c), p in fam.entries.items()}
    by_row: dict[int, list[tuple[int, Laurent]]] = {}
    for (r, c), p in flipped.items():
        by_row.setdefault(r, []).append((c, p))
    prod: dict[tuple[int, int], Laurent] = {}
    for (r, k), p in fam.entries.items():
        for c, q in by_row.get(k, []):
            key = (r, c)
            prod[key] = laurent_add(prod.get(key, {}), laurent_mul(p, q))
    scalar = prod.get((0, 0), {})
    worst = 0.0
    for r in range(d2):
        for c in range(d2):
            want = scalar if r == c else {}
            worst = max(worst,
                        laurent_max_coeff(laurent_sub(prod.get((r, c), {}), want)))
    return scalar, worst


@dataclass(eq=False)
class AnsatzCandidate:
    """One outcome of the eigenvalue ansatz."""

    middle: complex
    ordering: tuple[complex, complex, complex]
    f: Laurent
    g: Laurent
    h: Laurent
    family: SpectralFamily


def _braid_inverse(B: np.ndarray) -> np.ndarray:
    inv = np.linalg.inv(B)
    adjoint = B.conj().T
    if np.abs(B @ adjoint - np.eye(B.shape[0])).max() < 1e-10:
        # unitary constant braid, so the adjoint must agree with the inverse
        if np.abs(inv - adjoint).max() > 1e-9:
            raise ArithmeticError("inconsistent inverse of a unitary braid")
    return inv


def family_from_coefficients(B: np.ndarray, f: Laurent, g: Laurent,
                             h: Laurent, name: str, composition: str,
                             variable: str, meta: dict | None = None) -> SpectralFamily:
    """Expand f I + g B + h B^{-1} into an entrywise Laurent matrix."""
    d2 = B.shape[0]
    d = int(round(d2 ** 0.5))
    Binv = _braid_inverse(B)
    entries: Entries = {}
    for r in range(d2):
        for c in range(d2):
            p: Laurent = {}
            if r == c:
                p = laurent_add(p, f)
            if abs(B[r, c]) > DROP_TOL:
                p = laurent_add(p, laurent_scale(g, B[r, c]))
            if abs(Binv[r, c]) > DROP_TOL:
                p = laurent_add(p, laurent_scale(h, Binv[r, c]))
            if p:
                entries[(r, c)] = p
    return SpectralFamily(name=name, site_dim=d, entries=entries,
                          composition=composition, variable=variable,
                          constant_braid=B.copy(), meta=meta or {})


def proportional_entries(E1: Entries, E2: Entries, tol: float = 1e-9) -> bool:
    """Whether two Laurent matrices differ by an overall Laurent factor.

    Uses cross multiplication against a reference entry, which is exact
    over the fraction field.
    """
    keys = sorted(set(E1) | set(E2))
    if not keys:
        return True
    ref = keys[0]
    p_ref, q_ref = E1.get(ref, {}), E2.get(ref, {})
    if laurent_is_zero(p_ref, tol) != laurent_is_zero(q_ref, tol):
        return False
    for k in keys:
        lhs = laurent_mul(p_ref, E2.get(k, {}))
        rhs = laurent_mul(q_ref, E1.get(k, {}))
        if laurent_max_coeff(laurent_sub(lhs, rhs)) > tol:
            return False
    return True


def eigenvalue_candidates(B: np.ndarray, name: str = "candidate",
                          cluster_tol: float = 1e-6) -> list[AnsatzCandidate]:
    """All genuinely different families the three-eigenvalue ansatz
    produces for a constant braid.

    Raises EigenvalueCountError unless the braid has exactly three
    distinct eigenvalues.  The six orderings are generated and collapsed
    up to overall Laurent factors, leaving at most three candidates, each
    labelled by the middle eigenvalue of its ordering.
    """
    from itertools import permutations as _perms

    from .ybe import eigen_analysis

    clusters = eigen_analysis(B, cluster_tol)
    if len(clusters) != 3:
        raise EigenvalueCountError(
            f"the ansatz needs exactly 3 distinct eigenvalues, found "
            f"{len(clusters)}")
    values = [v for v, _ in clusters]

    out: list[AnsatzCandidate] = []
    for order in _perms(values):
        l1, mid, l3 = order
        c0 = l1 + mid + l3 + l1 * l3 / mid
        f: Laurent = {1: c0} if abs(c0) > DROP_TOL else {}
        g: Laurent = {1: -1.0, 0: 1.0}
        h: Laurent = {2: l1 * l3, 1: -l1 * l3}
        tag = f"{mid.real:.4g}{mid.imag:+.4g}j"
        fam = family_from_coefficients(
            B, f, g, h, f"{name}[mid={tag}]", "multiplicative", "x",
            meta={"middle_eigenvalue": mid})
        if any(proportional_entries(fam.entries, prev.family.entries)
               for prev in out):
            continue
        out.append(AnsatzCandidate(middle=mid, ordering=order,
                                   f=f, g=g, h=h, family=fam))
    return out


def six_vertex_solution(n: int, j: int) -> SpectralFamily:
    """The diagonal-braid family of the two-dimensional irreps.

    Corners carry w^{2j}/x - w^{-2j} x, the inner diagonal the constant
    w^{2j} - w^{-2j}, and the middle antidiagonal 1/x - x, with w the
    primitive n-th root of unity.  The values j = 0 and, for even n,
    j = n/2 make the underlying braid a scalar multiple of the swap and
    are rejected.
    """
    j = j % n
    if j == 0 or (n % 2 == 0 and j == n // 2):
        raise ValueError(
            f"j = {j} makes the braid trivial for n = {n}; "
            "no three-eigenvalue family exists")
    w2 = root_of_unity(n, 2 * j)
    corner: Laurent = {-1: w2, 1: -w2.conjugate()}
    inner: Laurent = {0: w2 - w2.conjugate()}
    middle: Laurent = {-1: 1.0, 1: -1.0}
    entries: Entries = {(0, 0): dict(corner), (3, 3): dict(corner),
                        (1, 2): dict(middle), (2, 1): dict(middle)}
    if laurent_max_coeff(inner) > DROP_TOL:
        entries[(1, 1)] = dict(inner)
        entries[(2, 2)] = dict(inner)
    wj = root_of_unity(n, j)
    braid = np.array([[wj, 0, 0, 0],
                      [0, 0, wj.conjugate(), 0],
                      [0, wj.conjugate(), 0, 0],
                      [0, 0, 0, wj]])
    return SpectralFamily(name=f"sixvertex(n={n},j={j})", site_dim=2,
                          entries=entries, composition="multiplicative",
                          variable="x", constant_braid=braid,
                          meta={"n": n, "j": j})


_THREE_DIM_CYCLES = ((1, 5), (2, 7), (3, 2), (5, 6), (6, 1), (7, 3))
# positions (row, column), zero based, where the three-dimensional braid
# of the reflection-class irrep has its off-diagonal entries; the inverse
# braid has them transposed


def twenty_one_vertex_solution() -> SpectralFamily:
    """The three-dimensional family with quadratic corner entries.

    Corners (the three diagonal fixed points of the braid) carry
    x^2 - x + 1, the remaining diagonal x, the braid positions 1 - x and
    the inverse-braid positions x(x - 1).
    """
    corner: Laurent = {2: 1.0, 1: -1.0, 0: 1.0}
    entries: Entries = {}
    for p in (0, 4, 8):
        entries[(p, p)] = dict(corner)
    for p in (1, 2, 3, 5, 6, 7):
        entries[(p, p)] = {1: 1.0}
    for (r, c) in _THREE_DIM_CYCLES:
        entries[(r, c)] = {0: 1.0, 1: -1.0}
        entries[(c, r)] = {2: 1.0, 1: -1.0}
    braid = np.zeros((9, 9), dtype=complex)
    for p in (0, 4, 8):
        braid[p, p] = 1.0
    for (r, c) in _THREE_DIM_CYCLES:
        braid[r, c] = 1.0
    return SpectralFamily(name="21vertex", site_dim=3, entries=entries,
                          composition="multiplicative", variable="x",
                          constant_braid=braid, meta={})


_KLEIN_DIAG = (0, 4, 8)
_KLEIN_PLUS = ((1, 3), (5, 7), (6, 2))
_KLEIN_MINUS = ((3, 1), (2, 6), (7, 5))
# zero-based positions of the Klein-class braid of the alternating-group
# double: the WLOG sign normalization has +1 on the PLUS positions and -1
# on the MINUS positions, identity signs on the diagonal trio


def _klein_wlog_braid() -> np.ndarray:
    M = np.zeros((9, 9), dtype=complex)
    for p in _KLEIN_DIAG:
        M[p, p] = 1.0
    for (r, c) in _KLEIN_PLUS:
        M[r, c] = 1.0
    for (r, c) in _KLEIN_MINUS:
        M[r, c] = -1.0
    return M


def a4_hecke_solution(b: int = 1) -> SpectralFamily:
    """Linear additive family on an involutive Klein-class braid.

    The braid of the label (a=0, b) squares to the identity and satisfies
    the braid relation, so identity plus u times the braid solves the
    additive equation.
    """
    rep = irrep_from_id(f"alternating:4/(12)(34)/a0b{b}")
    B = build_r(rep).braid
    entries: Entries = {}
    for r in range(9):
        for c in range(9):
            p: Laurent = {}
            if r == c:
                p[0] = 1.0
            if abs(B[r, c]) > DROP_TOL:
                p[1] = p.get(1, 0) + B[r, c]
            if p:
                entries[(r, c)] = p
    return SpectralFamily(name=f"a4-hecke(b={b})", site_dim=3,
                          entries=entries, composition="additive",
                          variable="u", constant_braid=B,
                          meta={"a": 0, "b": b})


def a4_exp_solution() -> SpectralFamily:
    """Diagonal family on the sign-normalized a=1 Klein-class braid.

    The corner entries are the exponential of the additive parameter, so
    the family is stored multiplicatively in x = exp(u).
    """
    entries: Entries = {}
    for p in _KLEIN_DIAG:
        entries[(p, p)] = {1: 1.0}
    for p in range(9):
        if p not in _KLEIN_DIAG:
            entries[(p, p)] = {0: 1.0}
    return SpectralFamily(name="a4-exp", site_dim=3, entries=entries,
                          composition="multiplicative", variable="x",
                          constant_braid=_klein_wlog_braid(),
                          meta={"a": 1, "x_means": "exp(u)"})


def a4_twist_solution() -> SpectralFamily:
    """Linear additive family on the sign-normalized a=1 Klein-class braid,
    with imaginary twist entries off the diagonal."""
    entries: Entries = {}
    for p in _KLEIN_DIAG:
        entries[(p, p)] = {0: 1.0, 1: 1.0}
    for p in range(9):
        if p not in _KLEIN_DIAG:
            entries[(p, p)] = {0: 1.0}
    for (r, c) in _KLEIN_PLUS:
        entries[(r, c)] = {1: 1j}
    for (r, c) in _KLEIN_MINUS:
        entries[(r, c)] = {1: -1j}
    return SpectralFamily(name="a4-twist", site_dim=3, entries=entries,
                          composition="additive", variable="u",
                          constant_braid=_klein_wlog_braid(),
                          meta={"a": 1})


def a4_solutions(a: int, b: int) -> list[SpectralFamily]:
    """Spectral families for the Klein-class irrep with signs (a, b).

    The involutive braids (a = 0) carry the linear family on their own
    matrix.  The order-four braids (a = 1) carry the diagonal exponential
    family and the imaginary twist, both presented on the common sign
    normalization of that braid.
    """
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError(f"sign labels must be 0 or 1, got a={a} b={b}")
    if a == 0:
        return [a4_hecke_solution(b)]
    return [a4_exp_solution(), a4_twist_solution()]


def two_dim_functional_residuals(f: Laurent, g: Laurent, h: Laurent,
                                 wj: complex) -> dict[str, float]:
    """Exact residuals of the two functional relations tying the diagonal
    entry A = f + wj g + h / wj and antidiagonal B = g / wj + wj h of the
    two-dimensional family."""
    A = laurent_add(laurent_add(f, laurent_scale(g, wj)),
                    laurent_scale(h, 1 / wj))
    Bc = laurent_add(laurent_scale(g, 1 / wj), laurent_scale(h, wj))

    def at(p: Laurent, which: str) -> Laurent2:
        return _entry_bivariate(p, which, "multiplicative")

    def mul3(p: Laurent2, q: Laurent2, r: Laurent2) -> Laurent2:
        return laurent2_mul(laurent2_mul(p, q), r)

    def add(p: Laurent2, q: Laurent2) -> Laurent2:
        out = dict(p)
        for k, v in q.items():
            out[k] = out.get(k, 0) + v
        return out

    lhs1 = mul3(at(A, "z"), at(f, "xz"), at(A, "x"))
    rhs1 = add(mul3(at(f, "x"), at(A, "xz"), at(f, "z")),
               mul3(at(Bc, "x"), at(f, "xz"), at(Bc, "z")))
    res1 = laurent2_max_coeff(laurent2_sub(lhs1, rhs1))

    lhs2 = mul3(at(A, "z"), at(Bc, "xz"), at(f, "x"))
    rhs2 = add(mul3(at(f, "x"), at(A, "xz"), at(Bc, "z")),
               mul3(at(Bc, "x"), at(f, "xz"), at(f, "z")))
    res2 = laurent2_max_coeff(laurent2_sub(lhs2, rhs2))

    return {"diagonal": res1, "mixed": res2}


def klein_functional_residuals(a_fn: Laurent, f_fn: Laurent, b_fn: Laurent,
                               composition: str = "additive") -> dict[str, float]:
    """Exact residuals of the three relations constraining the corner
    entry a, the free diagonal f and the twist b of the Klein-class
    functional form."""
    def at(p: Laurent, which: str) -> Laurent2:
        return _entry_bivariate(p, which, composition)

    def mul(*ps: Laurent2) -> Laurent2:
        out = ps[0]
        for p in ps[1:]:
            out = laurent2_mul(out, p)
        return out

    def add(p: Laurent2, q: Laurent2) -> Laurent2:
        out = dict(p)
        for k, v in q.items():
            out[k] = out.get(k, 0) + v
        return out

    au, av, am = at(a_fn, "x"), at(a_fn, "z"), at(a_fn, "xz")
    fu, fv, fm = at(f_fn, "x"), at(f_fn, "z"), at(f_fn, "xz")
    bu, bv, bm = at(b_fn, "x"), at(b_fn, "z"), at(b_fn, "xz")

    res_b = laurent2_max_coeff(laurent2_sub(
        mul(bm, fu, fv), mul(fm, add(mul(bu, fv), mul(bv, fu)))))
    res_a1 = laurent2_max_coeff(laurent2_sub(
        mul(au, bm, fv), add(mul(bv, fu, fm), mul(am, bu, fv))))
    res_a2 = laurent2_max_coeff(laurent2_sub(
        mul(am, fu, fv), mul(fm, add(mul(au, av), mul(bu, bv)))))
    return {"twist": res_b, "corner_mixed": res_a1, "corner": res_a2}


def leading_matrix(fam: SpectralFamily, direction: str) -> tuple[np.ndarray, int]:
    """Coefficient matrix at the extreme exponent of the family.

    direction "zero" picks the smallest exponent appearing anywhere, the
    behaviour as the variable goes to zero; "infinity" picks the largest.
    The returned exponent is that extreme power.
    """
    exps = [e for p in fam.entries.values() for e in p]
    if not exps:
        raise ValueError("empty family")
    if direction == "zero":
        k = min(exps)
    elif direction == "infinity":
        k = max(exps)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    d2 = fam.site_dim ** 2
    M = np.zeros((d2, d2), dtype=complex)
    for (r, c), p in fam.entries.items():
        M[r, c] = p.get(k, 0)
    return M, k


def proportionality(M: np.ndarray, B: np.ndarray) -> tuple[complex, float]:
    """Least-squares scale s minimizing |M - s B|, and the relative
    residual max|M - s B| / max|M|."""
    denom = float(np.sum(np.abs(B) ** 2))
    if denom == 0:
        raise ValueError("cannot compare against a zero matrix")
    s = complex(np.sum(B.conj() * M) / denom)
    top = float(np.abs(M).max())
    if top == 0:
        return s, 0.0
    return s, float(np.abs(M - s * B).max()) / top


def family_to_json(fam: SpectralFamily) -> dict:
    entries = [[r, c, laurent_to_json(p)]
               for (r, c), p in sorted(fam.entries.items())]
    out = {
        "name": fam.name,
        "site_dim": fam.site_dim,
        "composition": fam.composition,
        "variable": fam.variable,
        "entries": entries,
    }
    if fam.constant_braid is not None:
        from .ybe import matrix_to_json
        out["constant_braid"] = matrix_to_json(fam.constant_braid)
    return out


def family_from_json(obj: dict) -> SpectralFamily:
    entries: Entries = {}
    for r, c, p in obj["entries"]:
        entries[(int(r), int(c))] = laurent_from_json(p)
    braid = None
    if "constant_braid" in obj:
        from .ybe import matrix_from_json
        braid = matrix_from_json(obj["constant_braid"])
    return SpectralFamily(name=obj["name"], site_dim=int(obj["site_dim"]),
                          entries=entries, composition=obj["composition"],
                          variable=obj["variable"], constant_braid=braid)


def builtin_family(name: str, n: int | None = None,
                   j: int | None = None, b: int = 1) -> SpectralFamily:
    """Families addressable by name: sixvertex (needs n and j), 21vertex,
    a4-hecke (optional b), a4-exp, a4-twist."""
    if name == "sixvertex":
        if n is None or j is None:
            raise ValueError("sixvertex needs both n and j")
        return six_vertex_solution(n, j)
    if name == "21vertex":
        return twenty_one_vertex_solution()
    if name == "a4-hecke":
        return a4_hecke_solution(b)
    if name == "a4-exp":
        return a4_exp_solution()
    if name == "a4-twist":
        return a4_twist_solution()
    raise ValueError(f"unknown builtin family {name!r}")
