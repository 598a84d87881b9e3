"""Multiplication tables and conjugacy data for the supported groups.

Elements of a group of order N are the integers 0..N-1, with 0 always the
identity.  Dihedral groups order their elements as the n rotations followed
by the n reflections.  Permutation groups order theirs by the lexicographic
rank of the one-line form, which puts the identity first.

Conjugacy classes are listed by ascending smallest member, and the class
representative is that smallest member.  For every class member s a coset
representative alpha_s is stored with alpha_s g_k alpha_s^{-1} = s, where
g_k is the class representative; alpha is the identity on g_k itself.  The
generic choice is the smallest conjugating element, with a few pinned
exceptions that keep the induced matrices in the forms used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import numpy as np


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group presented by its full multiplication table."""

    name: str
    kind: str
    n: int
    mul_table: np.ndarray
    inverse: np.ndarray
    labels: tuple[str, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.mul_table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, s: int) -> int:
        """Return g s g^{-1}."""
        return self.mul(self.mul(g, s), self.inv(g))

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(g), -k)
        out = 0
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element {label!r} in {self.name}") from None


def _finish_table(name: str, kind: str, n: int, mul: np.ndarray,
                  labels: list[str], generators: tuple[int, ...]) -> FiniteGroup:
    order = mul.shape[0]
    inverse = np.zeros(order, dtype=int)
    for a in range(order):
        hits = np.nonzero(mul[a] == 0)[0]
        if len(hits) != 1:
            raise ValueError(f"element {a} of {name} has no unique inverse")
        inverse[a] = hits[0]
    mul.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(name=name, kind=kind, n=n, mul_table=mul,
                       inverse=inverse, labels=tuple(labels),
                       generators=generators)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n, generated by a rotation r of order n and
    a reflection t.  Element i + n*j stands for r^i t^j.
    """
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    order = 2 * n
    mul = np.zeros((order, order), dtype=int)
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    # r^i t fold: t r^i = r^{-i} t
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    j = (j1 + j2) % 2
                    mul[i1 + n * j1, i2 + n * j2] = i + n * j
    labels = []
    for i in range(n):
        labels.append("e" if i == 0 else ("s" if i == 1 else f"s{i}"))
    for i in range(n):
        labels.append("t" if i == 0 else ("st" if i == 1 else f"s{i}t"))
    return _finish_table(f"dihedral:{n}", "dihedral", n, mul, labels, (1, n))


def _perm_sign(p: tuple[int, ...]) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p))
              if p[a] > p[b])
    return -1 if inv % 2 else 1


def cycle_label(p: tuple[int, ...]) -> str:
    """Cycle notation with 1-based points and fixed points omitted."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + "".join(str(q + 1) for q in cyc) + ")")
    return "".join(parts) if parts else "e"


def _from_permutations(perms: list[tuple[int, ...]], name: str, kind: str,
                       n: int, gen_perms: list[tuple[int, ...]]) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    mul = np.zeros((order, order), dtype=int)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            mul[a, b] = index[tuple(pa[pb[x]] for x in range(n))]
    labels = [cycle_label(p) for p in perms]
    gens = tuple(index[g] for g in gen_perms)
    return _finish_table(name, kind, n, mul, labels, gens)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n points, composition acting right to left."""
    if not 2 <= n <= 5:
        raise ValueError(f"symmetric group supported for 2 <= n <= 5, got {n}")
    perms = sorted(permutations(range(n)))
    swap = tuple([1, 0] + list(range(2, n)))
    cyc = tuple(list(range(1, n)) + [0])
    return _from_permutations(perms, f"symmetric:{n}", "symmetric", n,
                              [swap, cyc])


def alternating4() -> FiniteGroup:
    perms = sorted(p for p in permutations(range(4)) if _perm_sign(p) == 1)
    three = (1, 2, 0, 3)       # the 3-cycle moving 1 -> 2 -> 3
    double = (1, 0, 3, 2)      # (12)(34)
    return _from_permutations(perms, "alternating:4", "alternating", 4,
                              [three, double])


# Coset representatives that are pinned rather than chosen minimally.  Both
# entries concern the class of (12)(34): the induced matrices downstream
# assume these particular conjugators for the other two double
# transpositions.  Keys are (group name, class member label).
_ALPHA_OVERRIDES: dict[tuple[str, str], str] = {
    ("alternating:4", "(13)(24)"): "(132)",
    ("alternating:4", "(14)(23)"): "(123)",
    ("symmetric:4", "(13)(24)"): "(14)",
    ("symmetric:4", "(14)(23)"): "(13)",
}


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    """Conjugacy classes of a group with centralizers and coset data.

    classes[k] lists the members of class k in ascending element order, and
    classes[k][0] is the class representative.  centralizers[k] is the
    centralizer of that representative.  alphas[k][p] conjugates the
    representative to classes[k][p].
    """

    group: FiniteGroup
    classes: tuple[tuple[int, ...], ...]
    class_labels: tuple[str, ...]
    centralizers: tuple[tuple[int, ...], ...]
    alphas: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def representative(self, k: int) -> int:
        return self.classes[k][0]

    def locate(self, label: str) -> int:
        """Class index of the element carrying the given label."""
        return self.class_of[self.group.index_of(label)]

    def position(self, k: int, s: int) -> int:
        return self.classes[k].index(s)


def conjugacy_data(group: FiniteGroup) -> ConjugacyData:
    order = group.order
    class_of = [-1] * order
    classes: list[tuple[int, ...]] = []
    for g in range(order):
        if class_of[g] >= 0:
            continue
        orbit = sorted({group.conj(x, g) for x in range(order)})
        k = len(classes)
        for s in orbit:
            class_of[s] = k
        classes.append(tuple(orbit))

    centralizers = []
    alphas = []
    for cls in classes:
        rep = cls[0]
        cent = tuple(x for x in range(order) if group.conj(x, rep) == rep)
        centralizers.append(cent)
        al = []
        for s in cls:
            key = (group.name, group.labels[s])
            if key in _ALPHA_OVERRIDES:
                a = group.index_of(_ALPHA_OVERRIDES[key])
            else:
                a = min(x for x in range(order) if group.conj(x, rep) == s)
            if group.conj(a, rep) != s:
                raise ValueError(
                    f"pinned coset representative for {key} does not "
                    f"conjugate {group.labels[rep]} to {group.labels[s]}")
            al.append(a)
        alphas.append(tuple(al))

    return ConjugacyData(
        group=group,
        classes=tuple(classes),
        class_labels=tuple(group.labels[c[0]] for c in classes),
        centralizers=tuple(centralizers),
        alphas=tuple(alphas),
        class_of=tuple(class_of),
    )


def check_coset_decomposition(conj: ConjugacyData, k: int) -> bool:
    """Exhaustively verify the coset facts the induction rests on.

    The cosets alpha_s Z_k must partition the group, and for every g and
    every class member s the combination alpha_t^{-1} g alpha_s must land
    in Z_k for t = g s g^{-1} and for no other class member t.
    """
    group = conj.group
    cls = conj.classes[k]
    cent = set(conj.centralizers[k])
    al = conj.alphas[k]

    covered: set[int] = set()
    for a in al:
        coset = {group.mul(a, z) for z in cent}
        if covered & coset:
            return False
        covered |= coset
    if covered != set(range(group.order)):
        return False

    pos = {s: p for p, s in enumerate(cls)}
    for g in range(group.order):
        for p, s in enumerate(cls):
            t = group.conj(g, s)
            if t not in pos:
                return False
            hits = [q for q, tq in enumerate(cls)
                    if group.mul(group.inv(al[q]), group.mul(g, al[p])) in cent]
            if hits != [pos[t]]:
                return False
    return True


def centralizer(group: FiniteGroup, g: int) -> tuple[int, ...]:
    return tuple(x for x in range(group.order) if group.conj(x, g) == g)


def generated_subgroup(group: FiniteGroup, gens: tuple[int, ...]) -> set[int]:
    out = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.mul(x, g)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return out


def group_from_name(name: str) -> FiniteGroup:
    """Parse names like ``dihedral:6``, ``alternating:4`` or ``symmetric:4``."""
    kind, _, arg = name.partition(":")
    if kind == "dihedral":
        return dihedral(int(arg))
    if kind == "alternating":
        if arg != "4":
            raise ValueError("only alternating:4 is supported")
        return alternating4()
    if kind == "symmetric":
        if arg != "4":
            raise ValueError("only symmetric:4 is supported")
        return symmetric(4)
    raise ValueError(f"unknown group name {name!r}")
