"""Scratch oracle: check the core constructions against hand-derived
expected matrices before freezing them into tests.  Not part of the
package."""
import numpy as np

from qdouble.groups import (alternating4, conjugacy_data, dihedral, symmetric,
                            check_coset_decomposition)
from qdouble.reps import all_double_irreps, census, irrep_from_id, verify_irrep
from qdouble.ybe import build_r, check_constant_ybe, eigen_analysis

w = np.exp(2j * np.pi / 6)

def show(tag, ok):
    print(("PASS " if ok else "FAIL ") + tag)

# --- dihedral alphas match the generic-minimum claim
for n in (3, 4, 5, 6, 7, 8):
    G = dihedral(n)
    conj = conjugacy_data(G)
    for k in range(conj.num_classes):
        assert check_coset_decomposition(conj, k), (n, k)
    # expected coset reps for reflection classes
    if n % 2:
        kt = conj.locate("t")
        cls = conj.classes[kt]
        al = conj.alphas[kt]
        exp = {n + i: (((n + 1) // 2) * i) % n for i in range(n)}
        got = {s: al[p] for p, s in enumerate(cls)}
        show(f"D{n} odd reflection alphas", got == exp)
    else:
        kt = conj.locate("t")
        cls = conj.classes[kt]
        al = conj.alphas[kt]
        exp = {n + 2 * i: i for i in range(n // 2)}
        got = {s: al[p] for p, s in enumerate(cls)}
        show(f"D{n} even t-class alphas", got == exp)
        ks = conj.locate("st")
        cls = conj.classes[ks]
        al = conj.alphas[ks]
        exp = {n + 2 * i + 1: i for i in range(n // 2)}
        got = {s: al[p] for p, s in enumerate(cls)}
        show(f"D{n} even st-class alphas", got == exp)
    # rotation classes: alpha for s^{-k} should be t (index n)
    for k in range(conj.num_classes):
        cls = conj.classes[k]
        if len(cls) == 2 and cls[0] < n:
            al = conj.alphas[k]
            show(f"D{n} rotation class {conj.class_labels[k]} alphas",
                 al == (0, n))

# --- census
for n in (3, 4, 5, 6, 7, 8):
    G = dihedral(n)
    c = census(G)
    if n % 2:
        expect = 2 + 2 * n + (n * n - 1) // 2
    else:
        expect = 8 + 8 * (n // 2) + (n + 2) * (n // 2 - 1)
    show(f"D{n} census count {c['count']} (expect {expect}) sum {c['sum_dim_sq']}",
         c["count"] == expect and c["sum_dim_sq"] == 4 * n * n)

cA = census(alternating4())
show(f"A4 census {cA['count']} sum {cA['sum_dim_sq']}",
     cA["count"] == 14 and cA["sum_dim_sq"] == 144)
cS = census(symmetric(4))
show(f"S4 census {cS['count']} sum {cS['sum_dim_sq']}",
     cS["count"] == 20 and cS["sum_dim_sq"] == 540)

# --- D(D_3) odd reflection example
for b, sign in (("j0", 1.0), ("j1", -1.0)):
    rep = irrep_from_id(f"dihedral:3/t/{b}")
    A = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)
    B = sign * np.array([[1, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex)
    oks = np.abs(rep.pi[1] - A).max() < 1e-12
    okt = np.abs(rep.pi[3] - B).max() < 1e-12
    dual = np.abs(rep.pi_dual[3] - np.diag([1, 0, 0])).max() < 1e-12
    show(f"D(D_3) reflection example {b}", oks and okt and dual)

# --- D(D_6) tau-class example
for a in (0, 1):
    for b in (0, 1):
        rep = irrep_from_id(f"dihedral:6/t/a{a}b{b}")
        sa = (-1.0) ** a
        sb = (-1.0) ** b
        S = np.array([[0, 0, sa], [1, 0, 0], [0, 1, 0]], dtype=complex)
        T = sb * np.array([[1, 0, 0], [0, 0, sa], [0, sa, 0]], dtype=complex)
        ok = (np.abs(rep.pi[1] - S).max() < 1e-12
              and np.abs(rep.pi[6] - T).max() < 1e-12)
        show(f"D(D_6) t-class example a{a}b{b}", ok)
        rep2 = irrep_from_id(f"dihedral:6/st/a{a}b{b}")
        T2 = (-1.0) ** (a + b) * np.array(
            [[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)
        ok2 = (np.abs(rep2.pi[1] - S).max() < 1e-12
               and np.abs(rep2.pi[6] - T2).max() < 1e-12)
        show(f"D(D_6) st-class example a{a}b{b}", ok2)

# --- the 4x4 diagonal braid from rotation classes (n=6, class s, char j)
G6 = dihedral(6)
for j in range(6):
    rep = irrep_from_id(f"dihedral:6/s/j{j}")
    R = build_r(rep).matrix
    expect = np.diag([w ** j, w ** -j, w ** -j, w ** j])
    show(f"2d diagonal R j={j}", np.abs(R - expect).max() < 1e-12)
    P = np.zeros((4, 4))
    for i in range(2):
        for k in range(2):
            P[i + 2 * k, k + 2 * i] = 1
    Rb = P @ R
    expb = np.array([[w ** j, 0, 0, 0],
                     [0, 0, w ** -j, 0],
                     [0, w ** -j, 0, 0],
                     [0, 0, 0, w ** j]])
    show(f"2d braid j={j}", np.abs(Rb - expb).max() < 1e-12)

# --- the 9x9 braid of the t-class (a=0,b=0) and its spectrum
rep = irrep_from_id("dihedral:6/t/a0b0")
Rm = build_r(rep)
expected = np.zeros((9, 9), dtype=complex)
for (r, c) in [(1, 1), (2, 6), (3, 8), (4, 3), (5, 5), (6, 7), (7, 2), (8, 4), (9, 9)]:
    expected[r - 1, c - 1] = 1.0
show("3d braid a0b0", np.abs(Rm.braid - expected).max() < 1e-12)
spec = eigen_analysis(Rm.braid)
w3 = np.exp(2j * np.pi / 3)
want = [(1.0, 5), (w3, 2), (w3 ** 2, 2)]
ok = len(spec) == 3 and all(abs(v - wv) < 1e-9 and m == wm
                            for (v, m), (wv, wm) in zip(spec, want))
show(f"3d braid spectrum {[(np.round(v,3), m) for v, m in spec]}", ok)

# general (a,b): compare with the signed pattern
for a in (0, 1):
    for b in (0, 1):
        repg = irrep_from_id(f"dihedral:6/t/a{a}b{b}")
        Rg = build_r(repg).braid
        patt = np.zeros((9, 9), dtype=complex)
        for (r, c) in [(1, 1), (2, 6), (5, 5), (8, 4), (9, 9)]:
            patt[r - 1, c - 1] = 1.0
        for (r, c) in [(3, 8), (4, 3), (6, 7), (7, 2)]:
            patt[r - 1, c - 1] = (-1.0) ** a
        patt *= (-1.0) ** b
        show(f"3d braid a{a}b{b} signed pattern",
             np.abs(Rg - patt).max() < 1e-12)

# D(D_3) 3-dim irreps give the same two R matrices
for b3, ab6 in (("j0", "a0b0"), ("j1", "a0b1")):
    r3 = build_r(irrep_from_id(f"dihedral:3/t/{b3}")).matrix
    r6 = build_r(irrep_from_id(f"dihedral:6/t/{ab6}")).matrix
    show(f"D(D_3) {b3} same R as D(D_6) {ab6}", np.abs(r3 - r6).max() < 1e-12)

# --- A_4 Klein-class matrices and R
GA = alternating4()
conjA = conjugacy_data(GA)
kk = conjA.locate("(12)(34)")
print("A4 classes:", conjA.class_labels)
print("A4 klein class:", [GA.labels[s] for s in conjA.classes[kk]])
print("A4 klein alphas:", [GA.labels[a] for a in conjA.alphas[kk]])
for a in (0, 1):
    for b in (0, 1):
        rep = irrep_from_id(f"alternating:4/(12)(34)/a{a}b{b}")
        g1 = GA.index_of("(12)(34)")
        g2 = GA.index_of("(13)(24)")
        g3 = GA.index_of("(14)(23)")
        sa, sb = (-1.0) ** a, (-1.0) ** b
        exp1 = np.diag([sa, sa * sb, sb])
        exp2 = np.diag([sb, sa, sa * sb])
        exp3 = np.diag([sa * sb, sb, sa])
        ok = (np.abs(rep.pi[g1] - exp1).max() < 1e-12
              and np.abs(rep.pi[g2] - exp2).max() < 1e-12
              and np.abs(rep.pi[g3] - exp3).max() < 1e-12)
        show(f"A4 klein pi a{a}b{b}", ok)
        R = build_r(rep).matrix
        expR = np.diag([sa, sa * sb, sb, sb, sa, sa * sb, sa * sb, sb, sa])
        show(f"A4 R a{a}b{b}", np.abs(R - expR).max() < 1e-12)
        Rb = build_r(rep).braid
        patt = np.zeros((9, 9), dtype=complex)
        for (r, c) in [(1, 1), (5, 5), (9, 9)]:
            patt[r - 1, c - 1] = sa
        for (r, c) in [(2, 4), (6, 8), (7, 3)]:
            patt[r - 1, c - 1] = sb
        for (r, c) in [(3, 7), (4, 2), (8, 6)]:
            patt[r - 1, c - 1] = sa * sb
        show(f"A4 braid a{a}b{b}", np.abs(Rb - patt).max() < 1e-12)
        spec = eigen_analysis(Rb)
        print("   spectrum:", [(np.round(v, 3), m) for v, m in spec])

# --- S_4 Klein-class R
GS = symmetric(4)
conjS = conjugacy_data(GS)
print("S4 classes:", conjS.class_labels)
for a in (0, 1):
    for b in (0, 1):
        rep = irrep_from_id(f"symmetric:4/(12)(34)/a{a}b{b}")
        s = (-1.0) ** (a + b)
        expR = np.diag([1, s, s, s, 1, s, s, s, 1])
        R = build_r(rep).matrix
        show(f"S4 R a{a}b{b}", np.abs(R - expR).max() < 1e-12)

# --- constant YBE across every implemented irrep
for G in [dihedral(3), dihedral(4), dihedral(5), dihedral(6), dihedral(7),
          dihedral(8), alternating4(), symmetric(4)]:
    worst = 0.0
    worst_v = None
    for rep in all_double_irreps(G):
        Rm = build_r(rep)
        resid = check_constant_ybe(Rm.matrix, rep.dim)
        v = verify_irrep(rep)
        worst = max(worst, resid, v["homomorphism"], v["dual_projections"],
                    v["compatibility"])
        if v["commutant_dim"] != 1:
            worst_v = rep.irrep_id
    show(f"{G.name} all irreps: ybe+verify worst {worst:.2e}, commutants ok",
         worst < 1e-9 and worst_v is None)
