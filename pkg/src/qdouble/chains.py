"""Spin-chain Hamiltonians extracted from regular spectral families.

A family that equals a scalar multiple of the identity at its regular
point (argument 1 for multiplicative composition, 0 for additive) defines
a two-site Hamiltonian density: the derivative of the family, optionally
premultiplied by a scalar Laurent prefactor, evaluated at that point.
Summing the density over nearest-neighbour bonds of a periodic chain
gives the Hamiltonian, whose commutation with the global double action
and with the transfer matrices built from the same family is what makes
the chain integrable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .baxter import SpectralFamily, evaluate
from .doubles import DoubleTensor, apply_coproduct_to_leg
from .reps import DoubleIrrep
from .scalars import (Laurent, laurent_derivative, laurent_eval, laurent_mul)
from .ybe import kron2, rep_tensor, swap_matrix

_MAX_CHAIN_DIM = 1024


class RegularityError(ValueError):
    """Raised when a family is not a scalar at its regular point."""


@dataclass(eq=False)
class TwoSiteHamiltonian:
    family_name: str
    site_dim: int
    matrix: np.ndarray
    regularity_constant: complex
    prefactor: Laurent


def regular_point(fam: SpectralFamily) -> complex:
    return 1.0 if fam.composition == "multiplicative" else 0.0


def two_site_hamiltonian(fam: SpectralFamily,
                         prefactor: Laurent | None = None,
                         tol: float = 1e-9) -> TwoSiteHamiltonian:
    """Derivative of prefactor times the family at the regular point.

    The family must reduce to a nonzero scalar there.  The prefactor is a
    Laurent polynomial in the same variable and defaults to 1; for
    additive families it must be a plain polynomial since the regular
    point is the origin.
    """
    x0 = regular_point(fam)
    at_reg = evaluate(fam, x0)
    d2 = fam.site_dim ** 2
    const = complex(np.trace(at_reg)) / d2
    if abs(const) <= tol or np.abs(at_reg - const * np.eye(d2)).max() > tol:
        raise RegularityError(
            f"{fam.name} is not a scalar at its regular point")
    pref: Laurent = {0: 1.0} if prefactor is None else prefactor
    if fam.composition == "additive" and any(e < 0 for e in pref):
        raise ValueError("additive families need a polynomial prefactor")
    h = np.zeros((d2, d2), dtype=complex)
    for (r, c), p in fam.entries.items():
        h[r, c] = laurent_eval(laurent_derivative(laurent_mul(pref, p)), x0)
    return TwoSiteHamiltonian(family_name=fam.name, site_dim=fam.site_dim,
                              matrix=h, regularity_constant=const,
                              prefactor=pref)


def permutation_form_h() -> np.ndarray:
    """Two-site density written as a signed sum of matrix-unit products
    over the six permutations of three letters."""
    E = [[np.zeros((3, 3), dtype=complex) for _ in range(3)] for _ in range(3)]
    for r in range(3):
        for c in range(3):
            E[r][c][r, c] = 1.0
    h = np.zeros((9, 9), dtype=complex)
    for gamma in permutations(range(3)):
        first = E[gamma[0]][gamma[1]]
        second = E[gamma[1]][gamma[2]]
        h += 1j * (kron2(first, second) - kron2(second, first))
    return h


def spin_ladder_form_h() -> np.ndarray:
    """The same density in terms of spin-one ladder operators.

    Uses the ladder normalization with unit entries; the weight-one
    angular momentum matrices differ from these by factors of sqrt 2.
    """
    sz = np.diag([1.0, 0.0, -1.0]).astype(complex)
    sp = np.zeros((3, 3), dtype=complex)
    sp[0, 1] = sp[1, 2] = 1.0
    sm = sp.T.copy()
    zp = sz @ sp + sp @ sz
    zm = sz @ sm + sm @ sz
    terms = [
        (-1.0, sp @ sp, zm),
        (+1.0, zm, sp @ sp),
        (+1.0, sm @ sm, zp),
        (-1.0, zp, sm @ sm),
        (+1.0, sp @ sz, sz @ sp),
        (-1.0, sz @ sp, sp @ sz),
        (+1.0, sm @ sz, sz @ sm),
        (-1.0, sz @ sm, sm @ sz),
    ]
    acc = np.zeros((9, 9), dtype=complex)
    for coeff, left, right in terms:
        acc += coeff * kron2(left, right)
    return 1j * acc


def embed_pair(M: np.ndarray, d: int, sites: int, a: int, b: int) -> np.ndarray:
    """Place a two-site operator on legs a and b of a chain.

    The first tensor slot of M (the fast index) lands on leg a.  Leg k of
    the chain carries weight d^k in the composite index.
    """
    if a == b or not (0 <= a < sites and 0 <= b < sites):
        raise ValueError(f"bad leg pair ({a}, {b}) for {sites} sites")
    dim = d ** sites
    out = np.zeros((dim, dim), dtype=complex)
    others = [s for s in range(sites) if s not in (a, b)]
    rows, cols = np.nonzero(np.abs(M) > 0)
    offsets = [sum(m * d ** s for m, s in zip(cfg, others))
               for cfg in product(range(d), repeat=len(others))]
    for r, c in zip(rows, cols):
        i1, i2 = r % d, r // d
        j1, j2 = c % d, c // d
        base_r = i1 * d ** a + i2 * d ** b
        base_c = j1 * d ** a + j2 * d ** b
        v = M[r, c]
        for off in offsets:
            out[base_r + off, base_c + off] += v
    return out


def chain_hamiltonian(h: np.ndarray, d: int, length: int,
                      closed: bool = True) -> np.ndarray:
    """Sum of the density over nearest-neighbour bonds, with the wrap
    bond from the last site back to the first when closed."""
    if length < 2:
        raise ValueError("a chain needs at least two sites")
    if d ** length > _MAX_CHAIN_DIM:
        raise ValueError(
            f"chain dimension {d ** length} exceeds the supported "
            f"{_MAX_CHAIN_DIM}")
    H = np.zeros((d ** length, d ** length), dtype=complex)
    for p in range(length - 1):
        H += embed_pair(h, d, length, p, p + 1)
    if closed:
        H += embed_pair(h, d, length, length - 1, 0)
    return H


def global_action(rep: DoubleIrrep, g: int, h: int, sites: int) -> np.ndarray:
    """Matrix of the iterated coproduct of a basis element on a chain."""
    T = DoubleTensor(rep.group, 1, {((g, h),): 1.0})
    for _ in range(sites - 1):
        T = apply_coproduct_to_leg(T, 0)
    return rep_tensor(rep, T)


def global_symmetry_residual(rep: DoubleIrrep, H: np.ndarray,
                             sites: int) -> float:
    """Largest commutator entry of H with the represented iterated
    coproduct, over every basis element of the double."""
    worst = 0.0
    for g in range(rep.group.order):
        for h in range(rep.group.order):
            D = global_action(rep, g, h, sites)
            worst = max(worst, float(np.abs(H @ D - D @ H).max()))
    return worst


def transfer_matrix(fam: SpectralFamily, length: int, t: complex) -> np.ndarray:
    """Trace over the auxiliary space of the product of R matrices down
    the chain, evaluated at the given argument.

    The R matrix is the swap composed with the braid-form family.  The
    auxiliary leg is the slowest index during the build and is traced
    out at the end.
    """
    d = fam.site_dim
    if d ** (length + 1) > _MAX_CHAIN_DIM * d:
        raise ValueError(f"transfer build for {length} sites is too large")
    R = swap_matrix(d) @ evaluate(fam, t)
    aux = length
    M = np.eye(d ** (length + 1), dtype=complex)
    for j in range(length - 1, -1, -1):
        M = M if j == length - 1 else M
        M = M @ embed_pair(R, d, length + 1, aux, j) if j == length - 1 \
            else M @ embed_pair(R, d, length + 1, aux, j)
    # the loop above multiplies R_{a,length-1} down to R_{a,0} in order
    dim = d ** length
    T = np.zeros((dim, dim), dtype=complex)
    for m in range(d):
        T += M[m * dim:(m + 1) * dim, m * dim:(m + 1) * dim]
    return T


def hermiticity_residual(M: np.ndarray) -> float:
    return float(np.abs(M - M.conj().T).max())
