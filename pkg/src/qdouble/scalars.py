"""Scalar arithmetic shared by every other module.

Two kinds of scalars appear in this package.  Plain complex numbers carry
the entries of constant matrices.  Laurent polynomials carry the entries of
spectral-parameter matrices, and are stored sparsely as dicts mapping an
integer exponent to a complex coefficient.  The zero polynomial is the
empty dict.  A handful of checks need polynomials in two independent
variables; those use dicts keyed by exponent pairs.

All dict-valued functions return cleaned dicts: coefficients whose modulus
falls below ``DROP_TOL`` are removed, so structural zeros never accumulate.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

# Coefficients smaller than this in modulus are treated as exact zeros when
# cleaning polynomial dicts.  It sits well below every comparison tolerance
# used elsewhere, so cleaning never masks a genuine failure.
DROP_TOL = 1e-12

Laurent = dict[int, complex]
Laurent2 = dict[tuple[int, int], complex]


@dataclass(frozen=True)
class Tolerances:
    """Comparison thresholds used by the verification routines.

    entry_tol bounds the modulus of a residual matrix entry.  eig_cluster_tol
    is the coarser radius used when grouping numerically computed eigenvalues
    into multiplicity clusters.
    """

    entry_tol: float = 1e-9
    eig_cluster_tol: float = 1e-6


DEFAULT_TOL = Tolerances()


def root_of_unity(n: int, k: int = 1) -> complex:
    """Return exp(2 pi i k / n)."""
    if n <= 0:
        raise ValueError(f"order must be positive, got {n}")
    return cmath.exp(2j * cmath.pi * k / n)


def clean(p: Laurent) -> Laurent:
    """Drop coefficients with modulus below DROP_TOL."""
    return {e: c for e, c in p.items() if abs(c) > DROP_TOL}


def laurent_add(p: Laurent, q: Laurent) -> Laurent:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return clean(out)


def laurent_scale(p: Laurent, c: complex) -> Laurent:
    return clean({e: c * v for e, v in p.items()})


def laurent_sub(p: Laurent, q: Laurent) -> Laurent:
    return laurent_add(p, laurent_scale(q, -1))


def laurent_mul(p: Laurent, q: Laurent) -> Laurent:
    out: Laurent = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return clean(out)


def laurent_eval(p: Laurent, x: complex) -> complex:
    return sum((c * x**e for e, c in p.items()), complex(0))


def laurent_derivative(p: Laurent) -> Laurent:
    """Formal derivative d/dx, valid for negative exponents as well."""
    return clean({e - 1: e * c for e, c in p.items() if e != 0})


def substitute_inverse(p: Laurent) -> Laurent:
    """Replace the variable by its reciprocal, negating every exponent."""
    return {-e: c for e, c in p.items()}


def laurent_max_coeff(p: Laurent) -> float:
    return max((abs(c) for c in p.values()), default=0.0)


def laurent_is_zero(p: Laurent, tol: float = DROP_TOL) -> bool:
    return laurent_max_coeff(p) <= tol


def monomial(e: int, c: complex = 1.0) -> Laurent:
    return clean({e: complex(c)})


# Two-variable helpers.  These exist so spectral Yang-Baxter checks can be
# done coefficientwise instead of by sampling.  Exponent pairs are (ex, ez)
# for the two independent variables.


def clean2(p: Laurent2) -> Laurent2:
    return {e: c for e, c in p.items() if abs(c) > DROP_TOL}


def laurent2_add(p: Laurent2, q: Laurent2) -> Laurent2:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return clean2(out)


def laurent2_scale(p: Laurent2, c: complex) -> Laurent2:
    return clean2({e: c * v for e, v in p.items()})


def laurent2_sub(p: Laurent2, q: Laurent2) -> Laurent2:
    return laurent2_add(p, laurent2_scale(q, -1))


def laurent2_mul(p: Laurent2, q: Laurent2) -> Laurent2:
    out: Laurent2 = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return clean2(out)


def laurent2_max_coeff(p: Laurent2) -> float:
    return max((abs(c) for c in p.values()), default=0.0)


def to_bivariate(p: Laurent, ex: int, ez: int) -> Laurent2:
    """Substitute x -> x^ex z^ez into a one-variable polynomial.

    With (1, 0) this injects a polynomial in the first variable, with
    (0, 1) the second, and (1, 1) performs the substitution x -> xz used
    when checking multiplicative spectral relations.
    """
    return {(e * ex, e * ez): c for e, c in p.items()}


def laurent_to_json(p: Laurent) -> dict:
    """Serialise as {"terms": [[exponent, real, imag], ...]}, ascending."""
    terms = [[e, p[e].real, p[e].imag] for e in sorted(p)]
    return {"terms": terms}


def laurent_from_json(obj: dict) -> Laurent:
    out: Laurent = {}
    for e, re, im in obj["terms"]:
        out[int(e)] = complex(re, im)
    return clean(out)
