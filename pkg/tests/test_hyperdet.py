import random
from fractions import Fraction

import pytest

from hyperforms.errors import DomainError, UnsupportedFormatError
from hyperforms.hyperdet import (
    Format,
    binary_form_disc,
    cayley_hyperdet_222,
    classify_format,
    det_square,
    hyperdet,
    ternary_quadratic_disc,
)
from hyperforms.parser import parse_poly
from hyperforms.poly import MultiPoly
from hyperforms.tensor import Tensor

XY = ("x", "y")


def P(text, variables=XY):
    return parse_poly(text, variables)


def const_tensor(shape, values):
    return Tensor(shape, [MultiPoly.constant(v) for v in values])


def rand_tensor(rng, shape, bound=9):
    size = 1
    for n in shape:
        size *= n
    return const_tensor(shape, [rng.randint(-bound, bound) for _ in range(size)])


# -- format classification ----------------------------------------------------------


def test_classification():
    assert classify_format((3, 3)) is Format.SQUARE
    assert classify_format((2, 2, 2)) is Format.SUPPORTED
    assert classify_format((2, 3, 2)) is Format.SUPPORTED
    assert classify_format((3, 2, 2)) is Format.SUPPORTED
    assert classify_format((2, 2, 2, 2)) is Format.SUPPORTED
    assert classify_format((4, 2)) is Format.NONEXISTENT
    assert classify_format((2, 2, 4)) is Format.NONEXISTENT
    assert classify_format((3, 3, 3)) is Format.ADMISSIBLE_UNIMPLEMENTED
    assert classify_format((2, 2, 2, 2, 2)) is Format.ADMISSIBLE_UNIMPLEMENTED


def test_nonexistent_raises_domain_error():
    with pytest.raises(DomainError, match="does not exist"):
        hyperdet(Tensor.zeros((4, 2)))


def test_unimplemented_raises_unsupported():
    with pytest.raises(UnsupportedFormatError, match="unsupported"):
        hyperdet(Tensor.zeros((3, 3, 3)))


# -- square determinants ---------------------------------------------------------------


def test_det_identity():
    assert det_square(const_tensor((2, 2), [1, 0, 0, 1])) == 1


def test_det_symbolic_matches_cofactor_oracle():
    x, y = P("x"), P("y")
    t = Tensor((2, 2), [x, y, y, x])
    # oracle: cofactor expansion by hand
    assert det_square(t) == x * x - y * y == P("x^2 - y^2")


def test_det_equal_rows_vanishes():
    t = Tensor((2, 2), [P("x"), P("y"), P("x"), P("y")])
    assert det_square(t).is_zero()


def test_det_multilinear_in_rows():
    rng = random.Random(3)
    for _ in range(5):
        rows = [[Fraction(rng.randint(-9, 9)) for _ in range(3)] for _ in range(3)]
        lam = Fraction(rng.randint(1, 5))
        t1 = const_tensor((3, 3), [c for row in rows for c in row])
        scaled = [list(rows[0]), list(rows[1]), [lam * c for c in rows[2]]]
        t2 = const_tensor((3, 3), [c for row in scaled for c in row])
        assert det_square(t2) == lam * det_square(t1)


def test_det_bareiss_matches_cofactor_for_4x4():
    # oracle: Laplace expansion along the first row
    rng = random.Random(11)
    vals = [[Fraction(rng.randint(-9, 9)) for _ in range(4)] for _ in range(4)]

    def laplace(m):
        if len(m) == 1:
            return m[0][0]
        total = Fraction(0)
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * laplace(minor)
            total += term if j % 2 == 0 else -term
        return total

    t = const_tensor((4, 4), [c for row in vals for c in row])
    assert det_square(t).as_scalar() == laplace(vals)


def test_det_rejects_nonsquare_and_large():
    with pytest.raises(DomainError):
        det_square(Tensor.zeros((2, 3)))
    with pytest.raises(DomainError):
        det_square(Tensor.zeros((7, 7)))


# -- binary form discriminant -------------------------------------------------------------


def test_disc_quadratic():
    # oracle: Sylvester resultant of (2x, -2y) with the sign convention
    assert binary_form_disc(P("x^2 - y^2")) == 4


def test_disc_depressed_cubic():
    # matches -4p^3 - 27q^2 at p = 0, q = 1
    assert binary_form_disc(P("x^3 + y^3")) == -27


def test_disc_repeated_root_vanishes():
    assert binary_form_disc(P("(x - y)^2*(x + y)")).is_zero()


def test_disc_matches_classic_quadratic_formula():
    f = parse_poly("a*x^2 + b*x*y + c*y^2", ("a", "b", "c", "x", "y"))
    assert binary_form_disc(f) == parse_poly("b^2 - 4*a*c", ("a", "b", "c", "x", "y"))


def test_disc_random_repeated_roots_vanish():
    rng = random.Random(21)
    for _ in range(15):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        if a == 0 and b == 0:
            continue
        lin = a * P("x") + b * P("y")
        rest = MultiPoly(XY, {(1, 0): rng.randint(-9, 9), (0, 1): rng.randint(-9, 9)})
        f = lin * lin * (rest if not rest.is_zero() else P("x"))
        assert binary_form_disc(f).is_zero()


def test_quartic_disc_matches_invariant_closed_form():
    # independent oracle: disc = (4 I^3 - J^2) / 27 with the classical
    # degree-2 and degree-3 invariants in plain coefficients
    rng = random.Random(47)
    for _ in range(15):
        a, b, c, d, e = (Fraction(rng.randint(-9, 9)) for _ in range(5))
        f = MultiPoly(XY, {(4, 0): a, (3, 1): b, (2, 2): c, (1, 3): d, (0, 4): e})
        if f.is_zero():
            continue
        inv2 = 12 * a * e - 3 * b * d + c * c
        inv3 = (72 * a * c * e + 9 * b * c * d
                - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3)
        assert binary_form_disc(f).as_scalar() == (4 * inv2 ** 3 - inv3 ** 2) / 27


def test_disc_degree_in_coefficients():
    # disc of a degree-d form has degree 2(d-1) in the coefficients
    cv3 = ("c30", "c21", "c12", "c03")
    cubic = parse_poly(
        "c30*x^3 + c21*x^2*y + c12*x*y^2 + c03*y^3", cv3 + XY)
    assert binary_form_disc(cubic).homogeneous_degree_in(cv3) == 4
    cv4 = ("c40", "c31", "c22", "c13", "c04")
    quartic = parse_poly(
        "c40*x^4 + c31*x^3*y + c22*x^2*y^2 + c13*x*y^3 + c04*y^4", cv4 + XY)
    assert binary_form_disc(quartic).homogeneous_degree_in(cv4) == 6


def test_disc_degree_and_homogeneity_errors():
    with pytest.raises(DomainError):
        binary_form_disc(P("x"))
    with pytest.raises(DomainError):
        binary_form_disc(P("x^2 + x"))


# -- ternary quadratic discriminant -----------------------------------------------------------


U3 = ("u0", "u1", "u2")


def test_ternary_diagonal():
    assert ternary_quadratic_disc(parse_poly("u0^2 + u1^2 + u2^2", U3), U3) == 8


def test_ternary_degenerate_conic():
    assert ternary_quadratic_disc(parse_poly("u0*u1", U3), U3).is_zero()


def test_ternary_mixed():
    assert ternary_quadratic_disc(parse_poly("u0^2 + u1*u2", U3), U3) == -2


def test_ternary_wrong_degree():
    with pytest.raises(DomainError):
        ternary_quadratic_disc(parse_poly("u0^3", U3), U3)


# -- hyperdeterminants ----------------------------------------------------------------------


def test_hyperdet_diagonal_222():
    vals = [0] * 8
    vals[0] = vals[7] = 1
    assert hyperdet(const_tensor((2, 2, 2), vals)) == 1


def test_hyperdet_all_ones_222():
    assert hyperdet(const_tensor((2, 2, 2), [1] * 8)).is_zero()


def test_schlaefli_matches_closed_form_on_100_random():
    rng = random.Random(0)
    for _ in range(100):
        t = rand_tensor(rng, (2, 2, 2))
        assert hyperdet(t) == cayley_hyperdet_222(t)


def test_hyperdet_degrees_with_symbolic_entries():
    # fully generic entries stay feasible for the three-axis formats
    for shape, want in (((2, 2, 2), 4), ((2, 2, 3), 6)):
        size = 1
        for n in shape:
            size *= n
        names = tuple(f"a{i}" for i in range(size))
        t = Tensor(shape, [parse_poly(nm, names) for nm in names])
        h = hyperdet(t)
        assert h.homogeneous_degree_in(names) == want


def test_hyperdet_2222_homogeneous_of_degree_24():
    # the generic expansion is astronomically large, so certify the degree
    # by exact scaling: entries a*lam give lam^24 times the numeric value
    rng = random.Random(29)
    lam = parse_poly("lam", ("lam",))
    for _ in range(3):
        t = rand_tensor(rng, (2, 2, 2, 2), bound=4)
        value = hyperdet(t)
        scaled = t.map_entries(lambda p: p * lam)
        got = hyperdet(scaled)
        assert got == value * lam ** 24
        if not value.is_zero():
            assert got.homogeneous_degree_in(("lam",)) == 24


def test_slicewise_gl_invariance_222():
    rng = random.Random(17)
    for _ in range(10):
        t = rand_tensor(rng, (2, 2, 2))
        g = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
        detg = Fraction(g[0][0] * g[1][1] - g[0][1] * g[1][0])
        for axis in range(3):
            assert hyperdet(t.apply_gl(axis, g)) == detg ** 2 * hyperdet(t)


def test_scaling_one_axis_scales_by_lambda_4():
    rng = random.Random(19)
    t = rand_tensor(rng, (2, 2, 2))
    lam = Fraction(3)
    g = [[lam, 0], [0, lam]]
    assert hyperdet(t.apply_gl(1, g)) == lam ** 4 * hyperdet(t)


def test_hyperdet_223_axis_placements_agree():
    rng = random.Random(23)
    for _ in range(10):
        t = rand_tensor(rng, (2, 2, 3))
        h = hyperdet(t)
        assert hyperdet(t.transpose((0, 2, 1))) == h
        assert hyperdet(t.transpose((2, 0, 1))) == h


def test_hyperdet_2222_known_diagonal():
    # diagonal 2x2x2x2 tensor: pencil hyperdet is the binary quartic
    # disc-chain value, checked against an independent hand computation
    vals = [0] * 16
    vals[0] = 1   # (0,0,0,0)
    vals[15] = 1  # (1,1,1,1)
    t = const_tensor((2, 2, 2, 2), vals)
    # pencil T(u): diag entries u0 at 000, u1 at 111 -> hyperdet = u0^2 u1^2
    # (Cayley closed form), then disc of the formal quartic u0^2 u1^2:
    # partials (2u0u1^2, 2u0^2u1), Res = 16 * Res(u0 u1^2, u0^2 u1) = 0
    assert hyperdet(t).is_zero()


def test_hyperdet_square_dispatch():
    t = const_tensor((3, 3), [2, 0, 0, 0, 3, 0, 0, 0, 4])
    assert hyperdet(t) == 24
