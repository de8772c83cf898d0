"""Symmetric powers of C^{n+1} in the multi-index monomial basis.

Conventions used throughout the package:

* A degree-m element of S^m(C^{n+1}) is a finitely supported coefficient map
  over multi-indices: tuples ``alpha`` of n+1 nonnegative integers summing
  to m, ordered lexicographically.  The monomial ``e^alpha`` stands for
  ``e_1^a1 ... e_{n+1}^a_{n+1}`` with the binomial normalization
  ``(u+v)^j = sum_i C(j,i) u^i v^{j-i}``, i.e. a monomial is the *average*
  of the tensor words it symmetrizes.

* The Lie algebra acts by derivation:
  ``rho(X) e^alpha = sum_i alpha_i sum_j X[j][i] e^(alpha - d_i + d_j)``.

* Dual elements live on the dual monomial basis ``eps^alpha`` normalized by
  ``eps^alpha(e^beta) = delta``; the dual action is
  ``(rho'(X) lam)(w) = -lam(rho(X) w)``, realized on coordinates as the
  negated transpose of the primal action.

* The grade of a monomial is ``degree - (last exponent)``: grade k picks the
  summand S^k(C^n) * e_{n+1}^{m-k}.  Grades are orthogonal for the inner
  product ``<e^alpha, e^alpha> = alpha!``, which makes rho(X) Hermitian for
  X in p and skew-Hermitian for X in k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from . import sun1
from .exactfield import GaussianRational, ONE, ZERO, gq
from .linalg import ExactMatrix

MultiIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[MultiIndex, ...]:
    """All exponent tuples of the given length and total degree, lex order."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        alpha = [0] * nvars
        for c in combo:
            alpha[c] += 1
        out.append(tuple(alpha))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[MultiIndex, int]:
    return {alpha: i for i, alpha in enumerate(monomials(nvars, degree))}


@lru_cache(maxsize=None)
def graded_monomials(n: int, m: int, k: int) -> tuple[MultiIndex, ...]:
    """Degree-m monomials of grade k: last exponent pinned to m - k."""
    if k < 0 or k > m:
        raise ValueError(f"grade {k} out of range for degree {m}")
    return tuple(mu + (m - k,) for mu in monomials(n, k))


def grade_of(alpha: MultiIndex, degree: int) -> int:
    return degree - alpha[-1]


def _factorial_weight(alpha: MultiIndex) -> int:
    w = 1
    for a in alpha:
        w *= math.factorial(a)
    return w


def _as_scalar(x) -> GaussianRational:
    return x if type(x) is GaussianRational else gq(x)


class _CoeffPoly:
    """Shared coefficient-map machinery for primal and dual tensors."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: dict | None = None):
        self.n = n
        self.degree = degree
        self.coeffs: dict[MultiIndex, GaussianRational] = {}
        if coeffs:
            for alpha, c in coeffs.items():
                c = _as_scalar(c)
                if not c:
                    continue
                if len(alpha) != n + 1 or sum(alpha) != degree:
                    raise ValueError(f"bad multi-index {alpha} for degree {degree}")
                self.coeffs[tuple(alpha)] = c

    @classmethod
    def zero(cls, n: int, degree: int):
        return cls(n, degree)

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff=1):
        alpha = tuple(alpha)
        return cls(len(alpha) - 1, sum(alpha), {alpha: _as_scalar(coeff)})

    def _like(self, coeffs: dict, degree: int | None = None):
        out = type(self).__new__(type(self))
        out.n = self.n
        out.degree = self.degree if degree is None else degree
        out.coeffs = {a: c for a, c in coeffs.items() if c}
        return out

    def _check_compatible(self, other):
        if type(self) is not type(other):
            raise TypeError("cannot mix primal and dual tensors")
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("degree/dimension mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            s = out.get(a)
            out[a] = c if s is None else s + c
        return self._like(out)

    def __sub__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            s = out.get(a)
            out[a] = -c if s is None else s - c
        return self._like(out)

    def __neg__(self):
        return self._like({a: -c for a, c in self.coeffs.items()})

    def scale(self, s):
        s = _as_scalar(s)
        if not s:
            return self._like({})
        return self._like({a: s * c for a, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.degree,
                     tuple(sorted(self.coeffs.items(), key=lambda t: t[0]))))

    def support_grades(self) -> set[int]:
        return {grade_of(a, self.degree) for a in self.coeffs}

    def coefficient(self, alpha: Sequence[int]) -> GaussianRational:
        return self.coeffs.get(tuple(alpha), ZERO)

    def to_vector(self, basis_index: dict[MultiIndex, int]) -> list[GaussianRational]:
        v = [ZERO] * len(basis_index)
        for a, c in self.coeffs.items():
            v[basis_index[a]] = c
        return v

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for a in sorted(self.coeffs):
            mono = "*".join(
                f"e{i + 1}^{k}" if k > 1 else f"e{i + 1}"
                for i, k in enumerate(a)
                if k
            ) or "1"
            parts.append(f"({self.coeffs[a]})*{mono}")
        return " + ".join(parts)


class SymTensor(_CoeffPoly):
    """Element of S^m(C^{n+1}) over the monomial basis."""


class DualSymTensor(_CoeffPoly):
    """Element of S^m(C^{n+1})' over the dual monomial basis."""


# -- grading, calculus on exponents ---------------------------------------


def project_grade(w: _CoeffPoly, k: int) -> _CoeffPoly:
    """Orthogonal projection onto grade k (last exponent = degree - k)."""
    if k < 0 or k > w.degree:
        raise ValueError(f"grade {k} out of range for degree {w.degree}")
    keep = w.degree - k
    return w._like({a: c for a, c in w.coeffs.items() if a[-1] == keep})


def derivative(w: _CoeffPoly, var: int) -> _CoeffPoly:
    """Formal partial derivative in coordinate ``var`` (0-based)."""
    out: dict[MultiIndex, GaussianRational] = {}
    for a, c in w.coeffs.items():
        k = a[var]
        if not k:
            continue
        b = a[:var] + (k - 1,) + a[var + 1 :]
        add = c * k
        s = out.get(b)
        out[b] = add if s is None else s + add
    return w._like(out, degree=w.degree - 1)


def multiply_var(w: _CoeffPoly, var: int) -> _CoeffPoly:
    """Multiplication by coordinate ``var`` (exponent bump, no factor)."""
    out = {}
    for a, c in w.coeffs.items():
        b = a[:var] + (a[var] + 1,) + a[var + 1 :]
        out[b] = c
    return w._like(out, degree=w.degree + 1)


def shift_down(w: _CoeffPoly, var: int) -> _CoeffPoly:
    """Exponent shift alpha -> alpha - d_var with no combinatorial factor."""
    out = {}
    for a, c in w.coeffs.items():
        if a[var]:
            out[a[:var] + (a[var] - 1,) + a[var + 1 :]] = c
    return w._like(out, degree=w.degree - 1)


def raise_weighted(w: _CoeffPoly, var: int) -> _CoeffPoly:
    """The transpose of ``derivative``: alpha -> alpha + d_var weighted by
    the new exponent."""
    out = {}
    for a, c in w.coeffs.items():
        b = a[:var] + (a[var] + 1,) + a[var + 1 :]
        out[b] = c * b[var]
    return w._like(out, degree=w.degree + 1)


# -- pairings --------------------------------------------------------------


def inner(w1: SymTensor, w2: SymTensor) -> GaussianRational:
    """<e^a, e^a> = a!; monomials orthogonal; conjugate-linear in w2."""
    if not isinstance(w1, SymTensor) or not isinstance(w2, SymTensor):
        raise TypeError("inner product is defined on primal tensors")
    if w1.n != w2.n or w1.degree != w2.degree:
        raise ValueError("degree/dimension mismatch")
    s = ZERO
    small, big = (w1.coeffs, w2.coeffs) if len(w1.coeffs) <= len(w2.coeffs) else (w2.coeffs, w1.coeffs)
    for a, _ in small.items():
        c1 = w1.coeffs.get(a)
        c2 = w2.coeffs.get(a)
        if c1 and c2:
            s = s + c1 * c2.conjugate() * _factorial_weight(a)
    return s


def pair(lam: DualSymTensor, w: SymTensor) -> GaussianRational:
    """Canonical bilinear pairing: dual monomials hit matching monomials."""
    if not isinstance(lam, DualSymTensor) or not isinstance(w, SymTensor):
        raise TypeError("pair() takes a dual tensor and a primal tensor")
    if lam.n != w.n or lam.degree != w.degree:
        raise ValueError("degree mismatch")
    s = ZERO
    for a, c in lam.coeffs.items():
        d = w.coeffs.get(a)
        if d:
            s = s + c * d
    return s


def power_of_vector(vec: Sequence, m: int) -> SymTensor:
    """(sum_i v_i e_i)^m expanded with multinomial coefficients."""
    v = [_as_scalar(x) for x in vec]
    n = len(v) - 1
    out = {}
    for alpha in monomials(n + 1, m):
        c = gq(math.factorial(m))
        ok = True
        for vi, ai in zip(v, alpha):
            if ai == 0:
                continue
            if not vi:
                ok = False
                break
            c = c * (vi ** ai) / math.factorial(ai)
        if ok and c:
            out[alpha] = c
    return SymTensor(n, m, out)


# -- Lie algebra and group actions -----------------------------------------


def _matrix_of(X) -> ExactMatrix:
    return X.matrix if isinstance(X, sun1.LieElement) else X


def _nonzero_entries(M: ExactMatrix) -> list[tuple[int, int, GaussianRational]]:
    out = []
    for j in range(M.rows):
        for i in range(M.cols):
            x = M.at(j, i)
            if x:
                out.append((j, i, x))
    return out


def rho_apply(X, w: _CoeffPoly) -> _CoeffPoly:
    """Apply the Lie algebra element X to w (derivation action; dual action
    on dual tensors).  Preserves the total degree."""
    M = _matrix_of(X)
    if M.rows != w.n + 1:
        raise ValueError("matrix size does not match tensor dimension")
    entries = _nonzero_entries(M)
    out: dict[MultiIndex, GaussianRational] = {}
    if isinstance(w, DualSymTensor):
        # (rho'(X) lam)(v) = -lam(rho(X) v): negated transpose on coordinates.
        for a, c in w.coeffs.items():
            for j, i, x in entries:
                if not a[j]:
                    continue
                b = list(a)
                b[j] -= 1
                b[i] += 1
                b = tuple(b)
                add = c * x * (-b[i])
                s = out.get(b)
                out[b] = add if s is None else s + add
    else:
        for a, c in w.coeffs.items():
            for j, i, x in entries:
                ai = a[i]
                if not ai:
                    continue
                if i == j:
                    b = a
                else:
                    b = list(a)
                    b[i] -= 1
                    b[j] += 1
                    b = tuple(b)
                add = c * x * ai
                s = out.get(b)
                out[b] = add if s is None else s + add
    return w._like(out)


def rho_matrix(X, n: int, m: int, dual: bool = False) -> ExactMatrix:
    """Matrix of the action on S^m (or its dual) in the lex monomial basis."""
    basis = monomials(n + 1, m)
    index = monomial_index(n + 1, m)
    d = len(basis)
    cls = DualSymTensor if dual else SymTensor
    cols = []
    for alpha in basis:
        img = rho_apply(X, cls.monomial(alpha))
        cols.append(img)
    rows = [[ZERO] * d for _ in range(d)]
    for cidx, img in enumerate(cols):
        for a, c in img.coeffs.items():
            rows[index[a]][cidx] = c
    return ExactMatrix(rows)


def rho_matrix_restricted(
    X,
    in_basis: Sequence[MultiIndex],
    out_basis: Sequence[MultiIndex],
    dual: bool = False,
) -> ExactMatrix:
    """Matrix of the action from span(in_basis) into span(out_basis).

    Raises if some image falls outside the target span (a grading bug).
    """
    out_index = {a: i for i, a in enumerate(out_basis)}
    cls = DualSymTensor if dual else SymTensor
    rows = [[ZERO] * len(in_basis) for _ in range(len(out_basis))]
    for cidx, alpha in enumerate(in_basis):
        img = rho_apply(X, cls.monomial(alpha))
        for a, c in img.coeffs.items():
            if a not in out_index:
                raise ValueError(f"image monomial {a} outside the target basis")
            rows[out_index[a]][cidx] = c
    return ExactMatrix(rows)


def _poly_mul(d1: dict, d2: dict) -> dict:
    out: dict[MultiIndex, GaussianRational] = {}
    for a1, c1 in d1.items():
        for a2, c2 in d2.items():
            b = tuple(x + y for x, y in zip(a1, a2))
            add = c1 * c2
            s = out.get(b)
            out[b] = add if s is None else s + add
    return {a: c for a, c in out.items() if c}


def substitute(g: ExactMatrix, w: SymTensor) -> SymTensor:
    """Multiplicative substitution e_i -> g e_i, expanded in monomials."""
    nvars = w.n + 1
    if g.rows != nvars:
        raise ValueError("matrix size does not match tensor dimension")
    images = []
    for i in range(nvars):
        col = {}
        for j in range(nvars):
            x = g.at(j, i)
            if x:
                key = tuple(1 if t == j else 0 for t in range(nvars))
                col[key] = x
        images.append(col)
    unit = {tuple([0] * nvars): ONE}
    powers: dict[tuple[int, int], dict] = {}

    def image_power(i: int, e: int) -> dict:
        if e == 0:
            return unit
        got = powers.get((i, e))
        if got is None:
            got = _poly_mul(image_power(i, e - 1), images[i])
            powers[(i, e)] = got
        return got

    out: dict[MultiIndex, GaussianRational] = {}
    for a, c in w.coeffs.items():
        term = unit
        for i, e in enumerate(a):
            if e:
                term = _poly_mul(term, image_power(i, e))
        for b, x in term.items():
            add = c * x
            s = out.get(b)
            out[b] = add if s is None else s + add
    return SymTensor(w.n, w.degree, out)


def group_matrix(g: ExactMatrix, n: int, m: int) -> ExactMatrix:
    """Matrix of the substitution action of g on S^m(C^{n+1})."""
    basis = monomials(n + 1, m)
    index = monomial_index(n + 1, m)
    rows = [[ZERO] * len(basis) for _ in range(len(basis))]
    for cidx, alpha in enumerate(basis):
        img = substitute(g, SymTensor.monomial(alpha))
        for a, c in img.coeffs.items():
            rows[index[a]][cidx] = c
    return ExactMatrix(rows)


def k_group_action(A: ExactMatrix, w: _CoeffPoly) -> _CoeffPoly:
    """Action of the embedded unitary diag(A, det(A)^{-1}) on w.

    Primal tensors transform by substitution; dual tensors by
    (g . lam)(v) = lam(g^{-1} v).
    """
    g = sun1.embed_k(A)
    if isinstance(w, SymTensor):
        return substitute(g, w)
    n, m = w.n, w.degree
    Minv = group_matrix(sun1.group_inverse(g), n, m)
    basis = monomials(n + 1, m)
    index = monomial_index(n + 1, m)
    vec = w.to_vector(index)
    out = {}
    for bidx, beta in enumerate(basis):
        s = ZERO
        for aidx, alpha in enumerate(basis):
            c = vec[aidx]
            if c:
                x = Minv.at(aidx, bidx)
                if x:
                    s = s + c * x
        if s:
            out[beta] = s
    return DualSymTensor(n, m, out)


@dataclass(frozen=True)
class RepContext:
    """A verification case: the symmetric power S^m of C^{n+1} or its dual."""

    n: int
    m: int
    dual: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @property
    def dim_w(self) -> int:
        return math.comb(self.n + self.m, self.m)

    @property
    def expected_kernel_dim(self) -> int:
        """dim S^{m+1}(C^n), the symmetric-component dimension."""
        return math.comb(self.n + self.m, self.m + 1)

    @property
    def value_class(self):
        return DualSymTensor if self.dual else SymTensor

    def basis(self) -> tuple[MultiIndex, ...]:
        return monomials(self.n + 1, self.m)

    def basis_index(self) -> dict[MultiIndex, int]:
        return monomial_index(self.n + 1, self.m)

    def zero_value(self) -> _CoeffPoly:
        return self.value_class.zero(self.n, self.m)
