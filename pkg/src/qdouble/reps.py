"""Irreducible representations of the quantum doubles.

An irrep is labelled by a conjugacy class of the group together with an
irrep of the centralizer of the class representative.  The centralizer
irrep is spread over the class by conjugation: the representation space
carries one copy of the base space per class member, a group element g
permutes the copies following conjugation and acts inside each copy
through a centralizer element extracted with the stored coset
representatives, and the dual projection on h acts as the identity on the
copy at h and as zero elsewhere.

Centralizers of the supported groups are the full group for central
classes, cyclic or Klein four-groups otherwise, except for the class of
double transpositions in the symmetric group on four points whose
centralizer is the dihedral group of order 8.  For that class only the
four one-dimensional base characters are provided, so the irrep list of
that double is deliberately incomplete; every other listing is complete
and the squared dimensions add up to the square of the group order.

Irrep identifiers have the form ``<group>/<class>/<base>``, where the
class part may name any member of the class and is canonicalised to the
representative's label.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .groups import ConjugacyData, FiniteGroup, conjugacy_data, group_from_name
from .scalars import root_of_unity


class UnsupportedCentralizerError(ValueError):
    """Raised when no base irreps are available for a centralizer."""


@dataclass(frozen=True, eq=False)
class BaseIrrep:
    """An irrep of a subgroup, with matrices keyed by ambient element index."""

    label: str
    subgroup: tuple[int, ...]
    dim: int
    matrices: dict[int, np.ndarray]


@dataclass(frozen=True, eq=False)
class DoubleIrrep:
    """An induced irrep of a quantum double.

    pi[g] is the matrix of the group element g and pi_dual[h] the matrix of
    the dual projection on h, which vanishes unless h lies in the class.
    The copy of the base space attached to class member s occupies the
    block of coordinates position(s) * block_dim onward, with class members
    in ascending element order.
    """

    group: FiniteGroup
    irrep_id: str
    class_index: int
    class_members: tuple[int, ...]
    base_label: str
    block_dim: int
    dim: int
    pi: tuple[np.ndarray, ...]
    pi_dual: tuple[np.ndarray, ...]


def _subgroup_is_abelian(group: FiniteGroup, sub: tuple[int, ...]) -> bool:
    return all(group.mul(a, b) == group.mul(b, a) for a in sub for b in sub)


def _cyclic_generator(group: FiniteGroup, sub: tuple[int, ...]) -> int | None:
    """Smallest element generating the whole subgroup, if one exists."""
    for z in sub:
        if z and group.element_order(z) == len(sub):
            return z
    return None


def cyclic_characters(group: FiniteGroup, sub: tuple[int, ...]) -> list[BaseIrrep]:
    """Characters of a cyclic subgroup, labelled j0, j1, ...

    The character with label jJ sends the smallest generator to the J-th
    power of the primitive root of unity of the subgroup order, so labels
    are stable across classes sharing a centralizer.
    """
    m = len(sub)
    gen = _cyclic_generator(group, sub) if m > 1 else 0
    if m > 1 and gen is None:
        raise UnsupportedCentralizerError(
            f"subgroup of order {m} in {group.name} is not cyclic")
    power_of = {}
    x, p = 0, 0
    while True:
        power_of[x] = p
        x = group.mul(x, gen) if m > 1 else 0
        p += 1
        if x == 0:
            break
    out = []
    for j in range(m):
        mats = {z: np.array([[root_of_unity(m, j * power_of[z])]])
                for z in sub}
        out.append(BaseIrrep(f"j{j}", sub, 1, mats))
    return out


def klein_characters(group: FiniteGroup, sub: tuple[int, ...]) -> list[BaseIrrep]:
    """The four characters of a Klein four-group, labelled a0b0 .. a1b1.

    The a sign is carried by the smallest non-identity element and the b
    sign by the next smallest.
    """
    if len(sub) != 4 or any(group.element_order(z) > 2 for z in sub):
        raise UnsupportedCentralizerError(
            f"expected a Klein four-group in {group.name}")
    e, g1, g2, g3 = sub
    if e != 0 or group.mul(g1, g2) != g3:
        raise UnsupportedCentralizerError(
            f"unexpected Klein four-group layout in {group.name}")
    out = []
    for a in range(2):
        for b in range(2):
            vals = {e: 1.0, g1: (-1.0) ** a, g2: (-1.0) ** b,
                    g3: (-1.0) ** (a + b)}
            mats = {z: np.array([[v]], dtype=complex) for z, v in vals.items()}
            out.append(BaseIrrep(f"a{a}b{b}", sub, 1, mats))
    return out


def dihedral_base_irreps(group: FiniteGroup) -> list[BaseIrrep]:
    """Irreps of a full dihedral group, used for its central classes.

    One-dimensionals first, then the two-dimensionals mK sending the
    rotation generator to diag of the K-th power of the primitive root and
    its conjugate.
    """
    if group.kind != "dihedral":
        raise ValueError(f"expected a dihedral group, got {group.name}")
    n = group.n
    sub = tuple(range(2 * n))
    out = []
    if n % 2:
        for b in range(2):
            mats = {i + n * j: np.array([[(-1.0 + 0j) ** (b * j)]])
                    for i in range(n) for j in range(2)}
            out.append(BaseIrrep(f"b{b}", sub, 1, mats))
    else:
        for a in range(2):
            for b in range(2):
                mats = {i + n * j:
                        np.array([[(-1.0 + 0j) ** (a * i + b * j)]])
                        for i in range(n) for j in range(2)}
                out.append(BaseIrrep(f"a{a}b{b}", sub, 1, mats))
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for k in range(1, top + 1):
        mats = {}
        for i in range(n):
            w = root_of_unity(n, k * i)
            mats[i] = np.array([[w, 0], [0, w.conjugate()]])
            mats[i + n] = np.array([[0, w], [w.conjugate(), 0]])
        out.append(BaseIrrep(f"m{k}", sub, 2, mats))
    return out


def _onelines(group: FiniteGroup) -> list[tuple[int, ...]]:
    if group.kind == "symmetric":
        return sorted(permutations(range(group.n)))
    if group.kind == "alternating":
        def sign(p):
            return (-1) ** sum(1 for a in range(len(p))
                               for b in range(a + 1, len(p)) if p[a] > p[b])
        return sorted(p for p in permutations(range(group.n)) if sign(p) == 1)
    raise ValueError(f"{group.name} has no stored permutation action")


def _standard_matrix(p: tuple[int, ...]) -> np.ndarray:
    """Standard representation of a permutation on the difference basis
    e_i - e_last, with integer entries."""
    n = len(p)
    M = np.zeros((n - 1, n - 1), dtype=complex)

    def put(col: int, point: int, sign: float) -> None:
        if point != n - 1:
            M[point, col] += sign

    for i in range(n - 1):
        put(i, p[i], 1.0)
        put(i, p[n - 1], -1.0)
    return M


def alternating4_class_e_irreps(group: FiniteGroup) -> list[BaseIrrep]:
    """The four irreps of the alternating group on four points.

    Three characters factor through the quotient by the Klein subgroup,
    labelled w0, w1, w2 by the power of the cube root of unity assigned to
    the coset of the smallest three-cycle.  The last is the standard
    three-dimensional representation.
    """
    sub = tuple(range(group.order))
    klein = tuple(g for g in sub if g == 0 or group.element_order(g) == 2)
    x = next(g for g in sub if g not in klein)
    coset = {}
    for g in sub:
        for c in range(3):
            if group.mul(group.power(group.inv(x), c), g) in klein:
                coset[g] = c
                break
    out = []
    for m in range(3):
        mats = {g: np.array([[root_of_unity(3, m * coset[g])]]) for g in sub}
        out.append(BaseIrrep(f"w{m}", sub, 1, mats))
    lines = _onelines(group)
    out.append(BaseIrrep("std", sub, 3,
                         {g: _standard_matrix(lines[g]) for g in sub}))
    return out


def symmetric4_class_e_irreps(group: FiniteGroup) -> list[BaseIrrep]:
    """The five irreps of the symmetric group on four points."""
    sub = tuple(range(group.order))
    lines = _onelines(group)

    def sign(p):
        return (-1.0) ** sum(1 for a in range(len(p))
                             for b in range(a + 1, len(p)) if p[a] > p[b])

    out = [
        BaseIrrep("triv", sub, 1, {g: np.eye(1, dtype=complex) for g in sub}),
        BaseIrrep("sgn", sub, 1,
                  {g: np.array([[sign(lines[g])]], dtype=complex)
                   for g in sub}),
    ]

    # conjugation permutes the three double transpositions; the resulting
    # quotient map gives the two-dimensional irrep through the standard
    # representation of the symmetric group on three points
    invs = sorted(g for g in sub if group.element_order(g) == 2
                  and group.labels[g].count("(") == 2)
    mats2 = {}
    for g in sub:
        perm = tuple(invs.index(group.conj(g, s)) for s in invs)
        mats2[g] = _standard_matrix(perm)
    out.append(BaseIrrep("two", sub, 2, mats2))

    std = {g: _standard_matrix(lines[g]) for g in sub}
    out.append(BaseIrrep("std", sub, 3, std))
    out.append(BaseIrrep("sgnstd", sub, 3,
                         {g: sign(lines[g]) * std[g] for g in sub}))
    return out


def dihedral8_one_dims(group: FiniteGroup, sub: tuple[int, ...],
                       r: int, s: int) -> list[BaseIrrep]:
    """One-dimensional characters of an order-8 dihedral centralizer,
    generated by a designated four-cycle r and involution s."""
    table = {}
    x = 0
    for i in range(4):
        table[x] = (i, 0)
        table[group.mul(x, s)] = (i, 1)
        x = group.mul(x, r)
    if set(table) != set(sub):
        raise UnsupportedCentralizerError(
            f"designated generators do not span the centralizer in {group.name}")
    out = []
    for a in range(2):
        for b in range(2):
            mats = {z: np.array([[(-1.0 + 0j) ** (i * b + j * a)]])
                    for z, (i, j) in table.items()}
            out.append(BaseIrrep(f"a{a}b{b}", sub, 1, mats))
    return out


def centralizer_irreps(group: FiniteGroup, conj: ConjugacyData,
                       k: int) -> list[BaseIrrep]:
    """Base irreps for class k.  See the module docstring for coverage."""
    sub = conj.centralizers[k]
    if len(sub) == group.order:
        if group.kind == "dihedral":
            return dihedral_base_irreps(group)
        if group.kind == "alternating":
            return alternating4_class_e_irreps(group)
        if group.kind == "symmetric":
            return symmetric4_class_e_irreps(group)
        raise UnsupportedCentralizerError(
            f"no base irreps for the full group {group.name}")
    if _subgroup_is_abelian(group, sub):
        if _cyclic_generator(group, sub) is not None or len(sub) == 1:
            return cyclic_characters(group, sub)
        if len(sub) == 4:
            return klein_characters(group, sub)
        raise UnsupportedCentralizerError(
            f"abelian centralizer of order {len(sub)} in {group.name} "
            "is neither cyclic nor Klein")
    if group.name == "symmetric:4" and len(sub) == 8:
        r = group.index_of("(1324)")
        s = group.index_of("(12)")
        return dihedral8_one_dims(group, sub, r, s)
    raise UnsupportedCentralizerError(
        f"centralizer of order {len(sub)} for class "
        f"{conj.class_labels[k]} of {group.name}")


def induce(group: FiniteGroup, conj: ConjugacyData, k: int,
           base: BaseIrrep) -> DoubleIrrep:
    """Spread a centralizer irrep over its conjugacy class."""
    cls = conj.classes[k]
    al = conj.alphas[k]
    cent = set(conj.centralizers[k])
    m = base.dim
    dim = len(cls) * m
    pos = {s: p for p, s in enumerate(cls)}

    pi = []
    for g in range(group.order):
        M = np.zeros((dim, dim), dtype=complex)
        for p, s in enumerate(cls):
            t = group.conj(g, s)
            q = pos[t]
            z = group.mul(group.inv(al[q]), group.mul(g, al[p]))
            if z not in cent:
                raise RuntimeError(
                    f"coset data of {group.name} class {conj.class_labels[k]} "
                    "is inconsistent")
            M[q * m:(q + 1) * m, p * m:(p + 1) * m] = base.matrices[z]
        pi.append(M)

    pi_dual = []
    for h in range(group.order):
        D = np.zeros((dim, dim), dtype=complex)
        if h in pos:
            p = pos[h]
            D[p * m:(p + 1) * m, p * m:(p + 1) * m] = np.eye(m)
        pi_dual.append(D)

    irrep_id = f"{group.name}/{conj.class_labels[k]}/{base.label}"
    return DoubleIrrep(group=group, irrep_id=irrep_id, class_index=k,
                       class_members=cls, base_label=base.label,
                       block_dim=m, dim=dim,
                       pi=tuple(pi), pi_dual=tuple(pi_dual))


def all_double_irreps(group: FiniteGroup,
                      conj: ConjugacyData | None = None) -> list[DoubleIrrep]:
    if conj is None:
        conj = conjugacy_data(group)
    out = []
    for k in range(conj.num_classes):
        for base in centralizer_irreps(group, conj, k):
            out.append(induce(group, conj, k, base))
    return out


def census(group: FiniteGroup) -> dict:
    """Counts and squared dimensions of the implemented irreps.

    The listing for symmetric:4 is known to be partial, which the
    ``complete`` flag records; everywhere else the squared dimensions add
    up to the squared group order.
    """
    reps = all_double_irreps(group)
    return {
        "group": group.name,
        "count": len(reps),
        "dims": [r.dim for r in reps],
        "sum_dim_sq": int(sum(r.dim ** 2 for r in reps)),
        "complete": group.name != "symmetric:4",
    }


def irrep_from_id(irrep_id: str) -> DoubleIrrep:
    """Build the irrep named by ``<group>/<class>/<base>``.

    The class may be named by any of its members; the returned irrep
    carries the canonical identifier.
    """
    parts = irrep_id.split("/")
    if len(parts) != 3:
        raise ValueError(f"malformed irrep id {irrep_id!r}")
    gname, clabel, blabel = parts
    group = group_from_name(gname)
    conj = conjugacy_data(group)
    k = conj.locate(clabel)
    for base in centralizer_irreps(group, conj, k):
        if base.label == blabel:
            return induce(group, conj, k, base)
    raise ValueError(
        f"no base irrep {blabel!r} for class {conj.class_labels[k]!r} "
        f"of {gname}")


def verify_irrep(rep: DoubleIrrep, tol: float = 1e-9) -> dict:
    """Residuals of the defining relations, checked exhaustively.

    Returns homomorphism, dual projection and compatibility residuals
    together with the dimension of the commutant, which is 1 exactly for
    an irreducible representation.
    """
    group = rep.group
    N = group.order
    hom = 0.0
    for g1 in range(N):
        for g2 in range(N):
            delta = rep.pi[g1] @ rep.pi[g2] - rep.pi[group.mul(g1, g2)]
            hom = max(hom, float(np.abs(delta).max()))

    total = sum(rep.pi_dual[h] for h in range(N))
    dual = float(np.abs(total - np.eye(rep.dim)).max())
    for h1 in range(N):
        for h2 in range(N):
            prod = rep.pi_dual[h1] @ rep.pi_dual[h2]
            want = rep.pi_dual[h1] if h1 == h2 else 0
            dual = max(dual, float(np.abs(prod - want).max()))

    compat = 0.0
    for g in range(N):
        inv = rep.pi[group.inv(g)]
        for h in range(N):
            delta = rep.pi[g] @ rep.pi_dual[h] @ inv \
                - rep.pi_dual[group.conj(g, h)]
            compat = max(compat, float(np.abs(delta).max()))

    return {
        "homomorphism": hom,
        "dual_projections": dual,
        "compatibility": compat,
        "commutant_dim": commutant_dimension(rep),
        "passed": max(hom, dual, compat) <= tol,
    }


def commutant_dimension(rep: DoubleIrrep, cutoff: float = 1e-8) -> int:
    """Dimension of the space of matrices commuting with the whole image."""
    mats = [rep.pi[g] for g in rep.group.generators]
    mats += [rep.pi_dual[h] for h in rep.class_members]
    eye = np.eye(rep.dim)
    rows = [np.kron(A, eye) - np.kron(eye, A.T) for A in mats]
    sing = np.linalg.svd(np.vstack(rows), compute_uv=False)
    return int(np.sum(sing < cutoff))


def direct_sum(r1: DoubleIrrep, r2: DoubleIrrep) -> DoubleIrrep:
    """Block sum of two irreps, useful as a reducible control case."""
    if r1.group is not r2.group and r1.group.name != r2.group.name:
        raise ValueError("direct sum needs a common group")
    dim = r1.dim + r2.dim

    def block(A, B):
        M = np.zeros((dim, dim), dtype=complex)
        M[:r1.dim, :r1.dim] = A
        M[r1.dim:, r1.dim:] = B
        return M

    members = tuple(sorted(set(r1.class_members) | set(r2.class_members)))
    return DoubleIrrep(
        group=r1.group,
        irrep_id=f"{r1.irrep_id}+{r2.irrep_id}",
        class_index=r1.class_index,
        class_members=members,
        base_label=f"{r1.base_label}+{r2.base_label}",
        block_dim=r1.block_dim,
        dim=dim,
        pi=tuple(block(a, b) for a, b in zip(r1.pi, r2.pi)),
        pi_dual=tuple(block(a, b) for a, b in zip(r1.pi_dual, r2.pi_dual)),
    )


def character_vector(rep: DoubleIrrep) -> np.ndarray:
    """Trace of pi(g) pi_dual(h) over all pairs, flattened."""
    N = rep.group.order
    out = np.zeros(N * N, dtype=complex)
    for g in range(N):
        for h in range(N):
            out[g * N + h] = np.trace(rep.pi[g] @ rep.pi_dual[h])
    return out
