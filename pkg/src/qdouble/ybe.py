"""Constant R-matrices of double irreps and their defining checks.

Tensor products are ordered with the first factor varying fastest: the
composite index of (i1, i2) is i1 + d * i2.  All printed matrices in this
package and its tests follow that convention, as do the three-site
embeddings used by the Yang-Baxter checks, where the composite index of
(i1, i2, i3) is i1 + d * i2 + d^2 * i3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .doubles import (DoubleElement, DoubleTensor, apply_coproduct_to_leg,
                      basis, coproduct, opposite_coproduct, universal_r)
from .reps import DoubleIrrep
from .scalars import DROP_TOL


def kron2(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Tensor product with the first factor varying fastest."""
    return np.kron(B, A)


def kron3(A: np.ndarray, B: np.ndarray, C: np.ndarray) -> np.ndarray:
    return np.kron(C, np.kron(B, A))


def swap_matrix(d: int) -> np.ndarray:
    P = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            P[i + d * j, j + d * i] = 1.0
    return P


def on_legs_12(M: np.ndarray, d: int) -> np.ndarray:
    """Embed a two-site operator on the first two of three sites."""
    return np.kron(np.eye(d), M)


def on_legs_23(M: np.ndarray, d: int) -> np.ndarray:
    return np.kron(M, np.eye(d))


def on_legs_13(M: np.ndarray, d: int) -> np.ndarray:
    S = np.kron(np.eye(d), swap_matrix(d))
    return S @ np.kron(M, np.eye(d)) @ S


@dataclass(frozen=True, eq=False)
class ConstantRMatrix:
    """A constant solution R with its braided companion P R."""

    irrep_id: str
    site_dim: int
    matrix: np.ndarray
    braid: np.ndarray


def build_r(rep: DoubleIrrep) -> ConstantRMatrix:
    """Sum of pi(g) tensor pi_dual(g) over the class of the irrep."""
    d = rep.dim
    R = np.zeros((d * d, d * d), dtype=complex)
    for g in rep.class_members:
        R += kron2(rep.pi[g], rep.pi_dual[g])
    return ConstantRMatrix(irrep_id=rep.irrep_id, site_dim=d, matrix=R,
                           braid=swap_matrix(d) @ R)


def check_constant_ybe(R: np.ndarray, d: int) -> float:
    """Largest entry of R12 R13 R23 - R23 R13 R12 on three sites."""
    r12 = on_legs_12(R, d)
    r13 = on_legs_13(R, d)
    r23 = on_legs_23(R, d)
    delta = r12 @ r13 @ r23 - r23 @ r13 @ r12
    return float(np.abs(delta).max())


def check_braid_relation(B: np.ndarray, d: int) -> float:
    """Largest entry of B12 B23 B12 - B23 B12 B23 on three sites."""
    b12 = on_legs_12(B, d)
    b23 = on_legs_23(B, d)
    delta = b12 @ b23 @ b12 - b23 @ b12 @ b23
    return float(np.abs(delta).max())


def rep_element(rep: DoubleIrrep, a: DoubleElement) -> np.ndarray:
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for (g, h), c in a.terms.items():
        out += c * (rep.pi[g] @ rep.pi_dual[h])
    return out


def rep_tensor(rep: DoubleIrrep, T: DoubleTensor) -> np.ndarray:
    """Matrix of a tensor of any rank in the given irrep, legs ordered
    with the first varying fastest."""
    d = rep.dim
    size = d ** T.rank
    out = np.zeros((size, size), dtype=complex)
    cache: dict[tuple[int, int], np.ndarray] = {}

    def rho(p):
        if p not in cache:
            cache[p] = rep.pi[p[0]] @ rep.pi_dual[p[1]]
        return cache[p]

    for key, c in T.terms.items():
        acc = rho(key[0])
        for p in key[1:]:
            acc = np.kron(rho(p), acc)
        out += c * acc
    return out


def check_quasi_triangularity(rep: DoubleIrrep) -> dict[str, float]:
    """Residuals of the three canonical-solution laws in the irrep.

    The first law intertwines the coproduct with its opposite through R,
    checked on every basis element of the double.  The other two expand
    the coproduct applied to one leg of R into products of embedded
    copies.
    """
    group = rep.group
    N = group.order
    R2 = build_r(rep).matrix
    d = rep.dim

    inter = 0.0
    for g in range(N):
        for h in range(N):
            a = basis(group, g, h)
            lhs = R2 @ rep_tensor(rep, coproduct(a))
            rhs = rep_tensor(rep, opposite_coproduct(a)) @ R2
            inter = max(inter, float(np.abs(lhs - rhs).max()))

    Runi = universal_r(group)
    r12 = on_legs_12(R2, d)
    r13 = on_legs_13(R2, d)
    r23 = on_legs_23(R2, d)

    left = rep_tensor(rep, apply_coproduct_to_leg(Runi, 0))
    right = rep_tensor(rep, apply_coproduct_to_leg(Runi, 1))
    split_left = float(np.abs(left - r13 @ r23).max())
    split_right = float(np.abs(right - r13 @ r12).max())

    return {
        "intertwine": inter,
        "split_left": split_left,
        "split_right": split_right,
    }


def check_symmetry(rep: DoubleIrrep, M: np.ndarray) -> float:
    """Largest commutator entry of M with the represented coproduct,
    over every basis element of the double."""
    group = rep.group
    worst = 0.0
    for g in range(group.order):
        for h in range(group.order):
            D = rep_tensor(rep, coproduct(basis(group, g, h)))
            worst = max(worst, float(np.abs(M @ D - D @ M).max()))
    return worst


def eigen_analysis(M: np.ndarray, cluster_tol: float = 1e-6) -> list[tuple[complex, int]]:
    """Eigenvalues grouped into clusters of the given radius.

    Returns (value, multiplicity) pairs with the value averaged over its
    cluster, sorted by phase and then modulus.
    """
    vals = list(np.linalg.eigvals(M))
    clusters: list[tuple[complex, int]] = []
    used = [False] * len(vals)
    for i, v in enumerate(vals):
        if used[i]:
            continue
        members = [v]
        used[i] = True
        for j in range(i + 1, len(vals)):
            if not used[j] and abs(vals[j] - v) <= cluster_tol:
                members.append(vals[j])
                used[j] = True
        mean = sum(members) / len(members)
        clusters.append((mean, len(members)))

    def angle(v: complex) -> float:
        a = float(np.angle(v))
        if a < -1e-12:
            a += 2 * np.pi
        return a

    clusters.sort(key=lambda vc: (angle(vc[0]), abs(vc[0])))
    return clusters


def matrix_to_json(M: np.ndarray, tol: float = DROP_TOL) -> dict:
    """Sparse row-major listing {"dim": d, "entries": [[r, c, re, im], ...]}."""
    d = M.shape[0]
    entries = []
    for r in range(d):
        for c in range(M.shape[1]):
            v = complex(M[r, c])
            if abs(v) > tol:
                entries.append([r, c, v.real, v.imag])
    return {"dim": d, "entries": entries}


def matrix_from_json(obj: dict) -> np.ndarray:
    d = int(obj["dim"])
    M = np.zeros((d, d), dtype=complex)
    for r, c, re, im in obj["entries"]:
        M[int(r), int(c)] = complex(re, im)
    return M
