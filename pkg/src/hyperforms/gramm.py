"""Skew decomposition of hypercubic tensors and Gramm forms of vector tuples.

Permuting the slots of a d-tensor acts on each orbit of index multisets; the
discrete Fourier transform along an orbit (with respect to a primitive
d!-th root of unity and the lexicographic ordinal of each arrangement)
splits the tensor space into d! projector images.  Gramm forms pair a
d-linear form with an m-tuple of vectors and take the hyperdeterminant of
the resulting m^d tensor, carrying a fractional exponent that is never
evaluated: comparisons cross-power the bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, UnsupportedFormatError
from .hyperdet import hyperdet
from .poly import MultiPoly
from .scalars import as_fraction, scalar_pow, zeta
from .tensor import Tensor


@dataclass(frozen=True)
class Orbit:
    multiset: tuple[int, ...]
    arrangements: tuple[tuple[int, ...], ...]  # ascending lexicographic

    @property
    def size(self) -> int:
        return len(self.arrangements)


class OrbitTable:
    """All index multisets of {0..dim-1}^d with their ordered arrangements."""

    def __init__(self, d: int, dim: int):
        if not 2 <= d <= 4:
            raise DomainError(f"orbit tables support 2 <= d <= 4, got {d}")
        if not 1 <= dim <= 4:
            raise DomainError(f"orbit tables support dim <= 4, got {dim}")
        self.d = d
        self.dim = dim
        self.orbits: list[Orbit] = []
        self.ordinal: dict[tuple[int, ...], tuple[int, int]] = {}
        for ms in itertools.combinations_with_replacement(range(dim), d):
            arrs = tuple(sorted(set(itertools.permutations(ms))))
            self.orbits.append(Orbit(ms, arrs))
            oi = len(self.orbits) - 1
            for j, arr in enumerate(arrs):
                self.ordinal[arr] = (oi, j)
        assert sum(o.size for o in self.orbits) == dim ** d

    def admissible(self, k: int, orbit: Orbit) -> bool:
        """Whether the orbit supports a nonzero eps^k-skew component:
        the weight eps^(k*s) must equal 1, i.e. d! divides k*s."""
        return (k * orbit.size) % factorial(self.d) == 0


def orbit_ord(d: int, dim: int) -> OrbitTable:
    return OrbitTable(d, dim)


def _hypercubic_dims(t: Tensor) -> tuple[int, int]:
    dims = set(t.shape)
    if len(dims) != 1:
        raise DomainError(f"tensor is not hypercubic: shape {t.shape}")
    return t.ndim, dims.pop()


def project_k(t: Tensor, k: int) -> Tensor:
    """Projection onto the eps^k-skew component.

    On each admissible orbit this is the orbit DFT: the output over the
    arrangement with ordinal j is eps^(k*j) times the averaged
    eps^(-k*j')-weighted input; inadmissible orbits are annihilated.
    """
    d, dim = _hypercubic_dims(t)
    fact = factorial(d)
    if not 0 <= k < fact:
        raise DomainError(f"component index must satisfy 0 <= k < {fact}, got {k}")
    table = OrbitTable(d, dim)
    eps = zeta(fact)
    entries = [MultiPoly.zero(t.vars)] * len(t.entries)
    for orbit in table.orbits:
        if not table.admissible(k, orbit):
            continue
        s = orbit.size
        base = MultiPoly.zero(t.vars)
        for j, arr in enumerate(orbit.arrangements):
            base = base + t[arr] * scalar_pow(eps, (-k * j) % fact)
        base = base / Fraction(s)
        for j, arr in enumerate(orbit.arrangements):
            entries[t.flat_index(arr)] = base * scalar_pow(eps, (k * j) % fact)
    return Tensor(t.shape, entries, t.vars)


def projector_trace(d: int, dim: int, k: int) -> Fraction:
    """Exact trace of the eps^k projector on the dim^d tensor space.

    The projectors are idempotent, so the trace equals the rank.  Computed
    honestly by projecting every basis tensor and reading off the diagonal
    coefficient.
    """
    shape = (dim,) * d
    total = Fraction(0)
    unit = Tensor.zeros(shape)
    for idx in unit.indices():
        basis = Tensor.from_function(
            shape, lambda i, idx=idx: MultiPoly.constant(1 if i == idx else 0))
        diag = project_k(basis, k)[idx].as_scalar()
        if not isinstance(diag, Fraction):
            raise ArithmeticError("projector diagonal must be rational")
        total += diag
    return total


# -- Gramm forms -----------------------------------------------------------------


def gramm_tensor(form: Tensor, vectors) -> Tensor:
    """Pair a d-linear form with an m-tuple: entry (i_1, ..., i_d) is the
    full contraction of the form against the selected vectors."""
    d, dim = _hypercubic_dims(form)
    vecs = [[as_fraction(c) for c in v] for v in vectors]
    if any(len(v) != dim for v in vecs):
        raise DomainError(f"vectors must have dimension {dim}")
    m = len(vecs)
    if m < 1:
        raise DomainError("need at least one vector")
    entries = []
    for sel in itertools.product(range(m), repeat=d):
        acc = MultiPoly.zero(form.vars)
        for jdx in form.indices():
            coeff = Fraction(1)
            for slot, j in enumerate(jdx):
                coeff *= vecs[sel[slot]][j]
            if coeff:
                acc = acc + form[jdx] * coeff
        entries.append(acc)
    return Tensor((m,) * d, entries, form.vars)


@dataclass(frozen=True)
class GrammValue:
    """A hyperdeterminant base together with the fractional power m/(d*deg D).

    The root is never extracted; equality of two values is decided by
    cross-powering the bases to a common integral exponent.
    """

    base: MultiPoly
    exponent: Fraction

    def same_value(self, other: "GrammValue") -> bool:
        p, q = self.exponent.numerator, self.exponent.denominator
        r, s = other.exponent.numerator, other.exponent.denominator
        return self.base ** (p * s) == other.base ** (r * q)

    def __repr__(self) -> str:
        return f"GrammValue(base={self.base}, exponent={self.exponent})"


def _gramm_disc_degree(d: int, m: int) -> int:
    if d == 2 and 1 <= m <= 6:
        return m
    if d == 3 and m == 2:
        return 4
    raise UnsupportedFormatError(
        f"Gramm form unsupported for {m} vectors under a {d}-linear form")


def gramm_form(form: Tensor, vectors) -> GrammValue:
    """Hyperdeterminant of the Gramm tensor with its homogenising exponent.

    Fewer vectors than slots gives the identically-zero form, recorded as a
    zero base without computing a hyperdeterminant.
    """
    d, _ = _hypercubic_dims(form)
    vecs = list(vectors)
    m = len(vecs)
    deg = _gramm_disc_degree(d, m)
    exponent = Fraction(m, d * deg)
    if m < d:
        return GrammValue(MultiPoly.zero(form.vars), exponent)
    return GrammValue(hyperdet(gramm_tensor(form, vecs)), exponent)


def skew_gramm(form: Tensor, vectors, k: int) -> GrammValue:
    """Gramm form of the eps^k-skew part of the Gramm tensor."""
    d, _ = _hypercubic_dims(form)
    vecs = list(vectors)
    m = len(vecs)
    deg = _gramm_disc_degree(d, m)
    exponent = Fraction(m, d * deg)
    return GrammValue(hyperdet(project_k(gramm_tensor(form, vecs), k)), exponent)
