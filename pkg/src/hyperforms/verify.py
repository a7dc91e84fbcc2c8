"""Seeded verification suites that reproduce the package's identities and
pin every convention constant as an exact rational.

Each suite draws integer coefficients uniformly from [-R, R] (default R = 9),
resampling degenerate instances up to 1000 times, and checks its identities
exactly.  A ratio constant is recorded only when it is identical across all
trials; the first disagreement demotes the identity to a failure carrying
both witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classical import apolar_quartic, hankel_quartic, sylvester_resultant, wronskian3
from .errors import DomainError
from .gramm import gramm_form, project_k, projector_trace
from .hyperdet import binary_form_disc, cayley_hyperdet_222, hyperdet
from .parser import parse_poly
from .poly import MultiPoly
from .polarisation import hyperhessian, hyperresultant
from .scalars import zeta
from .tensor import Tensor

XY = ("x", "y")


def factored_constant(q: Fraction) -> str:
    """Render a rational as sign*2^a*3^b*(p/q) with p, q coprime to 6."""
    if q == 0:
        return "0"
    sign = "-" if q < 0 else "+"
    num, den = abs(q).numerator, abs(q).denominator
    a = b = 0
    while num % 2 == 0:
        num //= 2
        a += 1
    while num % 3 == 0:
        num //= 3
        b += 1
    while den % 2 == 0:
        den //= 2
        a -= 1
    while den % 3 == 0:
        den //= 3
        b -= 1
    return f"{sign}2^{a}*3^{b}*({num}/{den})"


def is_23_smooth(q: Fraction) -> bool:
    return factored_constant(q).endswith("(1/1)")


@dataclass
class IdentityRecord:
    id: str
    trials: int
    passed: bool
    constant: Fraction | None = None
    nominal: str | None = None
    counterexample: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "trials": self.trials,
            "pass": self.passed,
            "constant": None if self.constant is None else factored_constant(self.constant),
            "nominal": self.nominal,
            "counterexample": self.counterexample,
        }


@dataclass
class VerifyReport:
    suite: str
    seed: int
    coeff_range: int
    identities: list[IdentityRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.identities)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "seed": self.seed,
            "range": self.coeff_range,
            "pass": self.passed,
            "identities": [r.to_json_dict() for r in self.identities],
        }

    def format_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed}, range {self.coeff_range})"]
        for r in self.identities:
            status = "PASS" if r.passed else "FAIL"
            extra = ""
            if r.constant is not None:
                extra += f" constant {factored_constant(r.constant)}"
            if r.nominal is not None:
                extra += f" (nominal {r.nominal})"
            lines.append(f"  [{status}] {r.id}: {r.trials} trials{extra}")
            if r.counterexample:
                lines.append(f"         counterexample: {r.counterexample}")
        return "\n".join(lines)


class _ConstantPin:
    """Calibrates a ratio on the first trial, then asserts it on the rest."""

    def __init__(self):
        self.value: Fraction | None = None
        self.witness: str | None = None

    def check(self, value: Fraction, witness: str) -> str | None:
        if self.value is None:
            self.value = value
            self.witness = witness
            return None
        if value != self.value:
            return f"{self.witness} -> {self.value}; {witness} -> {value}"
        return None


def _sample(rng, make, accept, what: str):
    for _ in range(1000):
        v = make()
        if accept(v):
            return v
    raise DomainError(f"rejection sampling exhausted 1000 attempts for {what}")


def _reject_degenerate(draw, what: str):
    """Resample until ``draw`` returns a non-None instance, capped at 1000."""
    for _ in range(1000):
        v = draw()
        if v is not None:
            return v
    raise DomainError(f"rejection sampling exhausted 1000 attempts for {what}")


def _random_form(rng, degree: int, bound: int) -> MultiPoly:
    def make():
        return MultiPoly(
            XY,
            {(degree - i, i): Fraction(rng.randint(-bound, bound))
             for i in range(degree + 1)})
    return _sample(rng, make, lambda f: not f.is_zero(), f"degree-{degree} form")


def _random_tensor(rng, shape, bound: int) -> Tensor:
    size = 1
    for n in shape:
        size *= n
    return Tensor(shape, [MultiPoly.constant(rng.randint(-bound, bound))
                          for _ in range(size)])


def _random_matrix(rng, n: int, bound: int, invertible: bool = True):
    def make():
        return [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
    if not invertible:
        return make()
    return _sample(rng, make, lambda g: bool(_det_scalar(g)), f"invertible {n}x{n} matrix")


def _det_scalar(g) -> Fraction:
    n = len(g)
    if n == 1:
        return g[0][0]
    if n == 2:
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in g[1:]]
        term = g[0][j] * _det_scalar(minor)
        total += term if j % 2 == 0 else -term
    return total


def _scalar(p) -> Fraction:
    return p.as_scalar()


# -- suites -------------------------------------------------------------------


def suite_prop21(rng, trials, bound):
    pin = _ConstantPin()
    rec = IdentityRecord("hyperresultant-vs-resultant", trials, True)
    for _ in range(trials):
        def draw():
            f = _random_form(rng, 2, bound)
            g = _random_form(rng, 2, bound)
            res = _scalar(sylvester_resultant(f, g))
            return (f, g, res) if res else None
        f, g, res = _reject_degenerate(draw, "coprime quadratic pair")
        ratio = _scalar(hyperresultant([f, g], XY)) / res
        bad = pin.check(ratio, f"(f1={f}, f2={g})")
        if bad:
            rec.passed = False
            rec.counterexample = bad
            break
    rec.constant = pin.value if rec.passed else None
    return [rec]


def suite_wronskian(rng, trials, bound):
    pin = _ConstantPin()
    ratio_rec = IdentityRecord("wronskian-square-ratio", trials, True)
    for _ in range(trials):
        def draw():
            fs = [_random_form(rng, 2, bound) for _ in range(3)]
            w = wronskian3(*fs).as_scalar()
            return (fs, w) if w else None
        fs, w = _reject_degenerate(draw, "independent quadratic triple")
        r3 = _scalar(hyperresultant(fs, XY))
        bad = pin.check(r3 / w ** 2, f"(f1={fs[0]}, f2={fs[1]}, f3={fs[2]})")
        if bad:
            ratio_rec.passed = False
            ratio_rec.counterexample = bad
            break
    ratio_rec.constant = pin.value if ratio_rec.passed else None

    dep_trials = max(trials, 20)
    dep_rec = IdentityRecord("dependent-triple-vanish", dep_trials, True)
    for _ in range(dep_trials):
        f1 = _random_form(rng, 2, bound)
        f2 = _random_form(rng, 2, bound)
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        f3 = a * f1 + b * f2
        if f3.is_zero():
            f3 = f1
        r3 = hyperresultant([f1, f2, f3], XY)
        if not r3.is_zero():
            dep_rec.passed = False
            dep_rec.counterexample = f"(f1={f1}, f2={f2}, f3={f3}) -> {r3}"
            break
    return [ratio_rec, dep_rec]


def suite_prop11(rng, trials, bound):
    pin = _ConstantPin()
    rec = IdentityRecord("cubic-hyperhessian-vs-disc", trials, True)
    for _ in range(trials):
        def draw():
            f = _random_form(rng, 3, bound)
            disc = _scalar(binary_form_disc(f))
            return (f, disc) if disc else None
        f, disc = _reject_degenerate(draw, "nondegenerate cubic")
        ratio = _scalar(hyperhessian(f, (1, 1, 1), XY)) / disc
        bad = pin.check(ratio, f"(f={f})")
        if bad:
            rec.passed = False
            rec.counterexample = bad
            break
    rec.constant = pin.value if rec.passed else None
    return [rec]


_QUARTIC_VARS = ("c40", "c31", "c22", "c13", "c04", "x", "y")
_QUARTIC = "c40*x^4 + c31*x^3*y + c22*x^2*y^2 + c13*x*y^3 + c04*y^4"


def suite_prop12(rng, trials, bound):
    rec = IdentityRecord("symbolic-quartic-divisibility", 1, True)
    f = parse_poly(_QUARTIC, _QUARTIC_VARS)
    hh = hyperhessian(f, (1, 1, 1, 1), XY)
    disc = binary_form_disc(f)
    quot = hh.exact_div(disc)
    if quot is None or quot * disc != hh:
        rec.passed = False
        rec.counterexample = "hyperhessian not divisible by the symbolic discriminant"
    return [rec]


def suite_prop24(rng, trials, bound):
    rec = IdentityRecord("shared-root-hyperresultant-vanish", trials, True)
    for _ in range(trials):
        line = _random_form(rng, 1, bound)
        f = line * _random_form(rng, 2, bound)
        g = line * _random_form(rng, 2, bound)
        r2 = hyperresultant([f, g], XY)
        if not r2.is_zero():
            rec.passed = False
            rec.counterexample = f"(f={f}, g={g}) -> {r2}"
            break
    return [rec]


def suite_prop41(rng, trials, bound):
    pin1, pin2 = _ConstantPin(), _ConstantPin()
    rec1 = IdentityRecord("disc-of-iterated-hessian", trials, True, nominal="2^36*3^6")
    rec2 = IdentityRecord("resultant-with-iterated-hessian", trials, True, nominal="2^24*3^12")
    for _ in range(trials):
        def draw():
            f = _random_form(rng, 4, bound)
            disc = _scalar(binary_form_disc(f))
            hank = _scalar(hankel_quartic(f))
            apol = _scalar(apolar_quartic(f))
            return (f, disc, hank, apol) if disc and hank and apol else None
        f, disc, hank, apol = _reject_degenerate(draw, "generic quartic")
        f111 = hyperhessian(f, (1, 1, 1), XY)
        k1 = _scalar(binary_form_disc(f111, XY, degree=4)) / (disc * hank ** 6)
        k2 = _scalar(sylvester_resultant(f, f111)) / (disc ** 2 * apol ** 4)
        for rec, pin, k in ((rec1, pin1, k1), (rec2, pin2, k2)):
            if not rec.passed:
                continue
            bad = pin.check(k, f"(f={f})")
            if bad:
                rec.passed = False
                rec.counterexample = bad
        if not (rec1.passed or rec2.passed):
            break
    for rec, pin in ((rec1, pin1), (rec2, pin2)):
        if rec.passed:
            rec.constant = pin.value
            if not is_23_smooth(pin.value):
                rec.passed = False
                rec.counterexample = f"constant {pin.value} has prime factors beyond 2 and 3"
    return [rec1, rec2]


def suite_hankel22(rng, trials, bound):
    rec = IdentityRecord("polarised-pair-hessian-vs-hankel", 1, True)
    f = parse_poly(_QUARTIC, _QUARTIC_VARS)
    h22 = hyperhessian(f, (2, 2), XY)
    hank = hankel_quartic(f)
    quot = h22.exact_div(hank)
    if quot is None:
        rec.passed = False
        rec.counterexample = "ratio is not a polynomial"
    else:
        try:
            rec.constant = quot.as_scalar()
        except DomainError:
            rec.passed = False
            rec.counterexample = f"ratio is not constant: {quot}"
    return [rec]


def suite_skew(rng, trials, bound):
    dims = (10, 1, 7, 1, 7, 1)
    complete = IdentityRecord("skew-projection-completeness", trials, True)
    ortho = IdentityRecord("skew-projector-orthogonality", trials, True)
    ranks = IdentityRecord("skew-projector-ranks", 1, True)
    shape = (3, 3, 3)
    for _ in range(trials):
        t = _random_tensor(rng, shape, bound)
        parts = [project_k(t, k) for k in range(6)]
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        if complete.passed and total != t:
            complete.passed = False
            complete.counterexample = f"sum of projections differs on {t.to_json()}"
        for k in range(6):
            for j in range(6):
                double = project_k(parts[j], k)
                expect = parts[k] if k == j else Tensor.zeros(shape, t.vars)
                if double != expect:
                    ortho.passed = False
                    ortho.counterexample = f"p_{k} o p_{j} misbehaves on {t.to_json()}"
                    break
            if not ortho.passed:
                break
        if not (complete.passed or ortho.passed):
            break
    traces = tuple(projector_trace(3, 3, k) for k in range(6))
    if traces != tuple(Fraction(d) for d in dims):
        ranks.passed = False
        ranks.counterexample = f"traces {traces} != {dims}"
    return [complete, ortho, ranks]


def suite_glscale(rng, trials, bound):
    triple = IdentityRecord("triple-slot-action-scaling", trials, True)
    gram = IdentityRecord("gramm-base-scaling", trials, True)
    for _ in range(trials):
        a = _random_tensor(rng, (2, 2, 2), bound)
        g = _random_matrix(rng, 2, bound)
        acted = a.apply_gl(0, g).apply_gl(1, g).apply_gl(2, g)
        if hyperdet(acted) != _det_scalar(g) ** 6 * hyperdet(a):
            triple.passed = False
            triple.counterexample = f"tensor {a.to_json()}, g={g}"
            break
    for _ in range(trials):
        form = _random_tensor(rng, (3, 3), bound)
        vecs = [[Fraction(rng.randint(-bound, bound)) for _ in range(3)] for _ in range(3)]
        g = _random_matrix(rng, 3, bound)
        mixed = [[sum(g[i][j] * vecs[j][c] for j in range(3)) for c in range(3)]
                 for i in range(3)]
        base = gramm_form(form, vecs).base
        mixed_base = gramm_form(form, mixed).base
        if mixed_base != _det_scalar(g) ** 2 * base:
            gram.passed = False
            gram.counterexample = f"form {form.to_json()}, g={g}"
            break
    return [triple, gram]


def suite_dependent(rng, trials, bound):
    d2 = IdentityRecord("bilinear-dependent-tuple-vanish", 3 * trials, True)
    d3 = IdentityRecord("trilinear-dependent-pair-vanish", trials, True)
    for m in (2, 3, 4):
        for _ in range(trials):
            dim = m
            form = _random_tensor(rng, (dim, dim), bound)
            vecs = [[Fraction(rng.randint(-bound, bound)) for _ in range(dim)]
                    for _ in range(m - 1)]
            weights = [Fraction(rng.randint(-bound, bound)) for _ in range(m - 1)]
            dep = [sum(w * v[c] for w, v in zip(weights, vecs)) for c in range(dim)]
            where = rng.randrange(m)
            tup = vecs[:where] + [dep] + vecs[where:]
            base = gramm_form(form, tup).base
            if not base.is_zero():
                d2.passed = False
                d2.counterexample = f"m={m}, form {form.to_json()}, tuple {tup}"
                break
        if not d2.passed:
            break
    for _ in range(trials):
        form = _random_tensor(rng, (2, 2, 2), bound)
        u = [Fraction(rng.randint(-bound, bound)) for _ in range(2)]
        lam = Fraction(rng.randint(-bound, bound))
        base = gramm_form(form, [u, [lam * c for c in u]]).base
        if not base.is_zero():
            d3.passed = False
            d3.counterexample = f"form {form.to_json()}, u={u}, lambda={lam}"
            break
    return [d2, d3]


def suite_oracle(rng, trials, bound):
    closed = IdentityRecord("schlaefli-vs-closed-form", trials, True)
    axes = IdentityRecord("axis-permutation-2x2x3", trials, True)
    for _ in range(trials):
        t = _random_tensor(rng, (2, 2, 2), bound)
        if hyperdet(t) != cayley_hyperdet_222(t):
            closed.passed = False
            closed.counterexample = t.to_json()
            break
    for _ in range(trials):
        t = _random_tensor(rng, (2, 2, 3), bound)
        h = hyperdet(t)
        if (hyperdet(t.transpose((0, 2, 1))) != h
                or hyperdet(t.transpose((2, 0, 1))) != h):
            axes.passed = False
            axes.counterexample = t.to_json()
            break
    return [closed, axes]


_PARSER_VAR_POOL = ("x", "y", "z", "a", "b", "c")


def suite_parser(rng, trials, bound):
    rec = IdentityRecord("print-parse-roundtrip", trials, True)
    for _ in range(trials):
        nvars = rng.randint(1, 3)
        variables = tuple(rng.sample(_PARSER_VAR_POOL, nvars))
        terms = {}
        for _ in range(rng.randint(0, 6)):
            exps = tuple(rng.randint(0, 5) for _ in range(nvars))
            coeff = Fraction(rng.randint(-bound * 11, bound * 11), rng.randint(1, 9))
            if rng.random() < 0.2:
                coeff = coeff * zeta(6) ** rng.randint(1, 5)
            if coeff:
                terms[exps] = terms.get(exps, Fraction(0)) + coeff
        p = MultiPoly(variables, terms)
        text = str(p)
        back = parse_poly(text, variables)
        if back != p or str(back) != text:
            rec.passed = False
            rec.counterexample = text
            break
    return [rec]


SUITES = {
    "prop21": (suite_prop21, 50),
    "wronskian": (suite_wronskian, 50),
    "prop11": (suite_prop11, 50),
    "prop12": (suite_prop12, 1),
    "prop24": (suite_prop24, 20),
    "prop41": (suite_prop41, 20),
    "hankel22": (suite_hankel22, 1),
    "skew": (suite_skew, 5),
    "glscale": (suite_glscale, 50),
    "dependent": (suite_dependent, 20),
    "oracle": (suite_oracle, 100),
    "parser": (suite_parser, 1000),
}


def run_suite(name: str, seed: int = 0, trials: int | None = None,
              coeff_range: int = 9) -> VerifyReport:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, default_trials = SUITES[name]
    rng = random.Random(seed)
    report = VerifyReport(name, seed, coeff_range)
    report.identities = fn(rng, trials if trials is not None else default_trials,
                           coeff_range)
    return report


def run_all(seed: int = 0, trials: int | None = None,
            coeff_range: int = 9) -> list[VerifyReport]:
    return [run_suite(name, seed, trials, coeff_range) for name in SUITES]
