"""Exact Wiener-polynomial arithmetic and root localization.

Coefficients are arbitrary-precision integers throughout (pair counts reach
C(n,2) scale, and the asymptotic sweeps push n to 10^6).  Evaluation converts
to floating point only through a compensated Horner scheme; rational and
Gaussian-rational evaluation stays exact.

Root finding is tiered.  Degrees one and two are solved in closed form over
the rationals / quadratic surds, because the uniqueness claims downstream
need "modulus equals bound" decided exactly.  Higher degrees go through a
square-free decomposition (exact integer gcds) followed by Aberth-Ehrlich
simultaneous iteration with a Newton polish, so multiple roots never degrade
into clusters.  Purely imaginary roots are detected exactly: split the
polynomial into even and odd parts, take the integer gcd, and isolate its
negative real roots with Sturm sequences.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .graph_core import DistanceDistribution

RESIDUAL_THRESHOLD = 1e-9
ABERTH_SWEEP_BUDGET = 500
ABERTH_STEP_TOLERANCE = 1e-13
STURM_REFINE_WIDTH = Fraction(1, 1 << 40)

Number = Union[int, float, complex, Fraction]


class RootFindingError(RuntimeError):
    """Iteration budget exhausted; carries the partial roots and residuals."""

    def __init__(self, message: str, partial_roots: Sequence[complex],
                 residuals: Sequence[float]):
        super().__init__(message)
        self.partial_roots = tuple(partial_roots)
        self.residuals = tuple(residuals)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WienerPolynomial:
    """Coefficients d_1..d_D of the distance generating polynomial; no constant term."""

    d: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.d or any(x < 1 for x in self.d):
            raise ValueError("all pair counts must be positive integers")

    @property
    def degree(self) -> int:
        return len(self.d)

    def coefficients(self) -> tuple[int, ...]:
        """Dense coefficient list starting at the (zero) constant term."""
        return (0,) + self.d


@dataclass(frozen=True)
class ReducedPolynomial:
    """The Wiener polynomial divided by x; its roots are the nonzero Wiener roots."""

    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.c or any(x < 1 for x in self.c):
            raise ValueError("all coefficients must be positive integers")

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def coefficients(self) -> tuple[int, ...]:
        return self.c


@dataclass(frozen=True)
class Annulus:
    """Exact-rational annulus r <= |z| <= R containing all roots."""

    r: Fraction
    R: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.r <= self.R:
            raise ValueError("need 0 < r <= R")

    def contains(self, z: complex, tol: float = 1e-8) -> bool:
        return float(self.r) - tol <= abs(z) <= float(self.R) + tol


@dataclass(frozen=True)
class ComplexRoot:
    """One root: float approximation, relative residual, optional exact form."""

    re: float
    im: float
    residual: float
    exact_form: str | None = None

    @property
    def exact(self) -> bool:
        return self.exact_form is not None

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    @property
    def modulus(self) -> float:
        return abs(self.z)

    def to_json_dict(self) -> dict:
        return {
            "re": self.re,
            "im": self.im,
            "residual": self.residual,
            "exact": self.exact_form,
        }


@dataclass(frozen=True)
class PurelyImaginaryRoot:
    """A conjugate pair +-bi on the imaginary axis, b > 0.

    When the squared value is rational, `radicand` holds b^2 exactly (so the
    root is the radical sqrt(radicand)); otherwise `t_interval` certifies the
    negative real number t = -b^2 to width 2^-40.
    """

    b: float
    radicand: Fraction | None = None
    t_interval: tuple[Fraction, Fraction] | None = None

    @property
    def exact(self) -> bool:
        return self.radicand is not None

    @property
    def b_rational(self) -> Fraction | None:
        """b as an exact rational when the radicand is a perfect square."""
        if self.radicand is None:
            return None
        num, den = self.radicand.numerator, self.radicand.denominator
        sn, sd = math.isqrt(num), math.isqrt(den)
        if sn * sn == num and sd * sd == den:
            return Fraction(sn, sd)
        return None


class GaussianValue(NamedTuple):
    """Exact value a + bi with rational parts."""

    re: Fraction
    im: Fraction

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)


# ---------------------------------------------------------------------------
# Construction and evaluation
# ---------------------------------------------------------------------------


def wiener_polynomial(dd: DistanceDistribution) -> WienerPolynomial:
    """Wiener polynomial of a distance distribution: coefficient i is d_i."""
    return WienerPolynomial(tuple(dd.d))


def reduce(w: WienerPolynomial) -> ReducedPolynomial:
    """Divide out the guaranteed root at zero."""
    return ReducedPolynomial(w.d)


def _coeffs(p: WienerPolynomial | ReducedPolynomial) -> tuple[int, ...]:
    if isinstance(p, WienerPolynomial):
        return p.coefficients()
    if isinstance(p, ReducedPolynomial):
        return p.coefficients()
    raise TypeError(f"expected a Wiener or reduced polynomial, got {type(p)!r}")


_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _comp_horner(coeffs: Sequence[int], z: complex) -> complex:
    """Compensated Horner evaluation at a complex point, real integer coefficients.

    Error-free transforms capture the rounding error of every multiply and
    add; the error polynomial is accumulated to first order alongside the
    main recurrence, giving results accurate as if computed in doubled
    precision.
    """
    x, y = z.real, z.imag
    sr, si = float(coeffs[-1]), 0.0
    er, ei = 0.0, 0.0
    for k in range(len(coeffs) - 2, -1, -1):
        p1, d1 = _two_prod(sr, x)
        p2, d2 = _two_prod(si, y)
        p3, d3 = _two_prod(sr, y)
        p4, d4 = _two_prod(si, x)
        tr, f1 = _two_sum(p1, -p2)
        ti, f2 = _two_sum(p3, p4)
        nr, g1 = _two_sum(tr, float(coeffs[k]))
        ner = er * x - ei * y + (d1 - d2 + f1 + g1)
        nei = er * y + ei * x + (d3 + d4 + f2)
        sr, si, er, ei = nr, ti, ner, nei
    return complex(sr + er, si + ei)


def _horner(coeffs: Sequence[float], z: complex) -> complex:
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


def evaluate(p: WienerPolynomial | ReducedPolynomial, z: Number):
    """Evaluate at z: exact for rational inputs, compensated Horner for floats."""
    coeffs = _coeffs(p)
    if isinstance(z, complex):
        return _comp_horner(coeffs, z)
    if isinstance(z, float):
        return _comp_horner(coeffs, complex(z, 0.0)).real
    if isinstance(z, (int, Fraction)):
        acc = Fraction(0)
        q = Fraction(z)
        for k in range(len(coeffs) - 1, -1, -1):
            acc = acc * q + coeffs[k]
        return acc
    raise TypeError(f"cannot evaluate at {type(z)!r}")


def evaluate_gaussian(p: WienerPolynomial | ReducedPolynomial,
                      re: int | Fraction, im: int | Fraction) -> GaussianValue:
    """Exact evaluation at the Gaussian rational re + im*i; no rounding anywhere."""
    coeffs = _coeffs(p)
    a, b = Fraction(re), Fraction(im)
    vr, vi = Fraction(0), Fraction(0)
    for k in range(len(coeffs) - 1, -1, -1):
        vr, vi = vr * a - vi * b + coeffs[k], vr * b + vi * a
    return GaussianValue(vr, vi)


def wiener_index(w: WienerPolynomial) -> int:
    """Sum of all pairwise distances: the derivative at one."""
    return sum(i * di for i, di in enumerate(w.d, start=1))


def enestrom_kakeya(p: ReducedPolynomial) -> Annulus:
    """Exact root annulus for positive coefficients: extreme consecutive ratios."""
    c = p.c
    if len(c) < 2:
        raise ValueError("degree-0 polynomials (complete graphs) have no annulus")
    ratios = [Fraction(c[i], c[i + 1]) for i in range(len(c) - 1)]
    return Annulus(min(ratios), max(ratios))


# ---------------------------------------------------------------------------
# Integer / rational polynomial utilities (dense, low degree first)
# ---------------------------------------------------------------------------


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _deriv(c: Sequence) -> list:
    return [k * c[k] for k in range(1, len(c))]


def _content(c: Sequence[int]) -> int:
    g = 0
    for x in c:
        g = math.gcd(g, abs(x))
    return g or 1


def _primitive(c: Sequence[int]) -> list[int]:
    """Divide by the (positive) content; signs are preserved."""
    g = _content(c)
    return [x // g for x in c]


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        q = r[-1] / lead
        shift = len(r) - 1 - db
        for i in range(db):
            r[shift + i] -= q * b[i]
        r.pop()
        _trim(r)
    return r


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = list(a)
    db, lead = len(b) - 1, b[-1]
    quot = [Fraction(0)] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        q = r[-1] / lead
        shift = len(r) - 1 - db
        quot[shift] = q
        for i in range(db):
            r[shift + i] -= q * b[i]
        r.pop()
        _trim(r)
    return _trim(quot), r


def _frac_div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    quot, rem = _frac_divmod(a, b)
    if rem:
        raise ArithmeticError("polynomial division was expected to be exact")
    return quot


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    fa, fb = _trim(list(a)), _trim(list(b))
    while fb:
        fa, fb = fb, _frac_rem(fa, fb)
    if not fa:
        return []
    lead = fa[-1]
    return [x / lead for x in fa]


def _int_from_frac(c: Sequence[Fraction]) -> list[int]:
    """Scale by a positive rational to primitive integers; signs preserved."""
    if not c:
        return []
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    return _primitive(ints)


def _int_poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive integer gcd with positive leading coefficient."""
    g = _frac_gcd([Fraction(x) for x in _trim(list(a))],
                  [Fraction(x) for x in _trim(list(b))])
    out = _int_from_frac(g)
    if out and out[-1] < 0:
        out = [-x for x in out]
    return out


_GCD_PRIMES = (2305843009213693951, 2147483647, 1000000007)


def _gcd_degree_mod(a: Sequence[int], b: Sequence[int], q: int) -> int | None:
    """Degree of gcd(a, b) over GF(q), or None if a leading coefficient drops."""
    if a[-1] % q == 0 or b[-1] % q == 0:
        return None
    fa = _trim([x % q for x in a])
    fb = _trim([x % q for x in b])
    while fb:
        inv = pow(fb[-1], -1, q)
        r = list(fa)
        db = len(fb) - 1
        while r and len(r) - 1 >= db:
            factor = r[-1] * inv % q
            shift = len(r) - 1 - db
            for i in range(db):
                r[shift + i] = (r[shift + i] - factor * fb[i]) % q
            r.pop()
            _trim(r)
        fa, fb = fb, r
    return len(fa) - 1 if fa else 0


def _certified_square_free(c: Sequence[int]) -> bool:
    """True only with a sound modular certificate gcd(c, c') = 1."""
    dc = _trim(_deriv(c))
    if not dc:
        return False
    for q in _GCD_PRIMES:
        d = _gcd_degree_mod(c, dc, q)
        if d is not None:
            return d == 0
    return False


def _square_free_decomposition(c: Sequence[int]) -> list[tuple[list[int], int]]:
    """Yun decomposition into primitive square-free factors with multiplicities."""
    work = _trim(list(c))
    if len(work) <= 1:
        return []
    if _certified_square_free(work):
        return [(_primitive(work), 1)]
    f = [Fraction(x) for x in work]
    fp = _deriv(f)
    a = _frac_gcd(f, fp)
    if len(a) <= 1:
        return [(_primitive(work), 1)]
    b = _frac_div_exact(f, a)
    d = _trim([x - y for x, y in
               _zip_pad(_frac_div_exact(fp, a), _deriv(b))])
    out: list[tuple[list[int], int]] = []
    i = 1
    while len(b) > 1:
        g = _frac_gcd(b, d) if d else [x / b[-1] for x in b]
        if len(g) > 1:
            out.append((_int_from_frac(g), i))
        b = _frac_div_exact(b, g)
        d = _trim([x - y for x, y in
                   _zip_pad(_frac_div_exact(d, g) if d else [], _deriv(b))])
        i += 1
    return out


def _zip_pad(a: Iterable[Fraction], b: Iterable[Fraction]):
    la, lb = list(a), list(b)
    n = max(len(la), len(lb))
    la += [Fraction(0)] * (n - len(la))
    lb += [Fraction(0)] * (n - len(lb))
    return zip(la, lb)


# ---------------------------------------------------------------------------
# Sturm sequences: exact real-root counting and isolation
# ---------------------------------------------------------------------------


def _sturm_chain(c: Sequence[int]) -> list[list[int]]:
    """Sturm chain of a square-free integer polynomial (primitive, sign-safe)."""
    chain = [_primitive(_trim(list(c)))]
    dc = _trim(_deriv(chain[0]))
    if not dc:
        return chain
    chain.append(_primitive(dc))
    while len(chain[-1]) > 1:
        rem = _frac_rem([Fraction(x) for x in chain[-2]],
                        [Fraction(x) for x in chain[-1]])
        if not rem:
            break
        chain.append(_int_from_frac([-x for x in rem]))
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _eval_frac(c: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for k in range(len(c) - 1, -1, -1):
        acc = acc * x + c[k]
    return acc


def _variations(signs: Iterable[int]) -> int:
    seq = [s for s in signs if s]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def _variations_at(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    return _variations(_sign(_eval_frac(p, x)) for p in chain)


def _variations_at_inf(chain: Sequence[Sequence[int]], positive: bool) -> int:
    signs = []
    for p in chain:
        s = _sign(p[-1])
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _count_real_roots(c: Sequence[int]) -> int:
    """Number of distinct real roots of a square-free integer polynomial."""
    c = _trim(list(c))
    if len(c) <= 1:
        return 0
    chain = _sturm_chain(c)
    return _variations_at_inf(chain, False) - _variations_at_inf(chain, True)


def _cauchy_bound(c: Sequence[int]) -> Fraction:
    lead = abs(c[-1])
    top = max(abs(x) for x in c[:-1]) if len(c) > 1 else 0
    return 1 + Fraction(top, lead)


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in [lo, hi] (Stern-Brocot walk)."""
    if lo == hi:
        return lo
    n = math.ceil(lo)
    if n <= hi:
        return Fraction(n)
    a = math.floor(lo)
    return a + 1 / _simplest_in(1 / (hi - a), 1 / (lo - a))


IsolatedRoot = Union[Fraction, tuple[Fraction, Fraction]]


def _isolate_real_roots(c: Sequence[int]) -> list[IsolatedRoot]:
    """All real roots of a square-free integer polynomial.

    Rational roots come back exactly (as Fractions); irrational roots come
    back as certified open intervals of width at most 2^-40 with non-root
    dyadic endpoints.  A dyadic subdivision point that happens to be a root
    is divided out and the isolation restarts on the quotient.
    """
    rationals: list[Fraction] = []
    work = _primitive(_trim(list(c)))
    if len(work) > 1 and work[0] == 0:
        rationals.append(Fraction(0))
        work = work[1:]
    while len(work) > 1:
        chain = _sturm_chain(work)
        bound = _cauchy_bound(work)
        restart = False
        stack = [(-bound, bound)]
        brackets: list[tuple[Fraction, Fraction]] = []
        while stack:
            a, b = stack.pop()
            k = _variations_at(chain, a) - _variations_at(chain, b)
            if k == 0:
                continue
            if k == 1:
                brackets.append((a, b))
                continue
            mid = (a + b) / 2
            if _eval_frac(work, mid) == 0:
                rationals.append(mid)
                work = _int_from_frac(
                    _frac_div_exact([Fraction(x) for x in work],
                                    [-mid, Fraction(1)]))
                restart = True
                break
            stack.append((a, mid))
            stack.append((mid, b))
        if restart:
            continue
        out: list[IsolatedRoot] = list(rationals)
        for a, b in brackets:
            out.append(_refine_bracket(work, a, b))
        return sorted(out, key=_isolated_value)
    return sorted(rationals, key=_isolated_value)


def _refine_bracket(c: Sequence[int], a: Fraction, b: Fraction) -> IsolatedRoot:
    """Shrink a one-root bracket to width 2^-40 or an exact rational hit."""
    sa = _sign(_eval_frac(c, a))
    while b - a > STURM_REFINE_WIDTH or (a < 0 < b):
        mid = (a + b) / 2
        sm = _sign(_eval_frac(c, mid))
        if sm == 0:
            return mid
        if sm == sa:
            a = mid
        else:
            b = mid
    candidate = _simplest_in(a, b)
    if _eval_frac(c, candidate) == 0:
        return candidate
    return (a, b)


def _isolated_value(r: IsolatedRoot) -> Fraction:
    return r if isinstance(r, Fraction) else (r[0] + r[1]) / 2


def all_roots_real(p: ReducedPolynomial) -> bool:
    """Exact test: every complex root lies on the real line."""
    total = 0
    for factor, mult in _square_free_decomposition(p.c):
        total += mult * _count_real_roots(factor)
    return total == p.degree


def all_roots_rational(p: ReducedPolynomial) -> bool:
    """Exact test: every root is rational (hence real)."""
    for factor, _ in _square_free_decomposition(p.c):
        deg = len(factor) - 1
        found = _isolate_real_roots(factor)
        if len(found) != deg or any(not isinstance(r, Fraction) for r in found):
            return False
    return True


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------


def _aberth_ehrlich(coeffs: Sequence[float], *, sweeps: int = ABERTH_SWEEP_BUDGET,
                    tol: float = ABERTH_STEP_TOLERANCE) -> list[complex]:
    """Simultaneous iteration for all roots of a float-coefficient polynomial.

    Initial guesses sit on a circle of radius (|c_0|/|c_deg|)^(1/deg) with an
    angular offset so no guess starts on the real axis.  Raises
    RootFindingError when some update still moves after the sweep budget.
    """
    deg = len(coeffs) - 1
    dcoeffs = [k * coeffs[k] for k in range(1, deg + 1)]
    radius = (abs(coeffs[0]) / abs(coeffs[deg])) ** (1.0 / deg)
    offset = math.pi / (2 * deg)
    z = [radius * cmath.exp(1j * (2 * math.pi * k / deg + offset))
         for k in range(deg)]
    for _ in range(sweeps):
        converged = True
        for i in range(deg):
            zi = z[i]
            p = _horner(coeffs, zi)
            if p == 0:
                continue
            dp = _horner(dcoeffs, zi)
            if dp == 0:
                z[i] = zi * 1.0000001 + 1e-12
                converged = False
                continue
            w = p / dp
            s = 0j
            for j in range(deg):
                if j != i:
                    diff = zi - z[j]
                    if diff == 0:
                        diff = 1e-300
                    s += 1 / diff
            denom = 1 - w * s
            step = w if denom == 0 else w / denom
            z[i] = zi - step
            if abs(step) > tol * (1 + abs(z[i])):
                converged = False
        if converged:
            return z
    residuals = [abs(_horner(coeffs, zi)) for zi in z]
    raise RootFindingError(
        f"Aberth-Ehrlich did not converge within {sweeps} sweeps", z, residuals)


def _newton_polish(coeffs: Sequence[float], z: complex, steps: int = 3) -> complex:
    dcoeffs = [k * coeffs[k] for k in range(1, len(coeffs))]
    for _ in range(steps):
        dp = _horner(dcoeffs, z)
        if dp == 0:
            break
        z = z - _horner(coeffs, z) / dp
    return z


def _factor_square(n: int) -> tuple[int, int]:
    """Write |n| = s^2 * r with r square-free over small primes; returns (s, r)."""
    n = abs(n)
    s = math.isqrt(n)
    if s * s == n:
        return s, 1
    s, r = 1, n
    p = 2
    while p * p <= r and p < 1000:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, r


def _surd_form(num: int, sq: int, rad: int, den: int, plus: bool, imag: bool) -> str:
    """Readable exact form (num +- sq*sqrt(rad)[*i]) / den, gcd-reduced."""
    g = math.gcd(math.gcd(abs(num), abs(sq)), abs(den))
    num, sq, den = num // g, sq // g, den // g
    if den < 0:
        num, sq, den = -num, -sq, -den
    root = f"sqrt({rad})" + ("*i" if imag else "")
    root = root if sq == 1 else f"{sq}*{root}"
    sign = "+" if plus else "-"
    body = f"{num} {sign} {root}" if num else (root if plus else f"-{root}")
    return body if den == 1 else f"({body})/{den}"


def _closed_form_roots(fac: Sequence[int]) -> list[tuple[complex, str]]:
    """Exact roots of a degree-1 or degree-2 integer polynomial."""
    deg = len(fac) - 1
    if deg == 1:
        r = Fraction(-fac[0], fac[1])
        return [(complex(float(r), 0.0), str(r))]
    c0, c1, c2 = fac
    disc = c1 * c1 - 4 * c0 * c2
    if disc >= 0:
        s = math.isqrt(disc)
        if s * s == disc:
            r1 = Fraction(-c1 + s, 2 * c2)
            r2 = Fraction(-c1 - s, 2 * c2)
            return [(complex(float(r1), 0.0), str(r1)),
                    (complex(float(r2), 0.0), str(r2))]
        sq, rad = _factor_square(disc)
        root = math.sqrt(disc)
        return [
            (complex((-c1 + root) / (2 * c2), 0.0),
             _surd_form(-c1, sq, rad, 2 * c2, True, False)),
            (complex((-c1 - root) / (2 * c2), 0.0),
             _surd_form(-c1, sq, rad, 2 * c2, False, False)),
        ]
    sq, rad = _factor_square(-disc)
    re = -c1 / (2 * c2)
    im = math.sqrt(-disc) / (2 * c2)
    return [
        (complex(re, im), _surd_form(-c1, sq, rad, 2 * c2, True, True)),
        (complex(re, -im), _surd_form(-c1, sq, rad, 2 * c2, False, True)),
    ]


def _symmetrize(zs: list[complex], n_real: int) -> list[complex]:
    """Force exact conjugate closure given the exact count of real roots."""
    order = sorted(range(len(zs)), key=lambda i: abs(zs[i].imag))
    out: list[complex] = [complex(zs[i].real, 0.0) for i in order[:n_real]]
    rest = [zs[i] for i in order[n_real:]]
    upper = sorted((z for z in rest if z.imag > 0), key=lambda z: (z.real, z.imag))
    lower = sorted((z for z in rest if z.imag <= 0), key=lambda z: (z.real, -z.imag))
    used = [False] * len(lower)
    for z in upper:
        best, bestdist = None, None
        for j, w in enumerate(lower):
            if used[j]:
                continue
            dist = abs(w.conjugate() - z)
            if bestdist is None or dist < bestdist:
                best, bestdist = j, dist
        if best is not None and bestdist <= 1e-9 * (1 + abs(z)):
            used[best] = True
            avg = (z + lower[best].conjugate()) / 2
            out.extend([avg, avg.conjugate()])
        else:
            out.append(z)
    out.extend(w for j, w in enumerate(lower) if not used[j])
    return out


def _residual(coeffs: Sequence[int], z: complex) -> float:
    scale = max(abs(c) for c in coeffs) * max(1.0, abs(z)) ** (len(coeffs) - 1)
    return abs(_comp_horner(coeffs, z)) / scale


def roots(p: ReducedPolynomial) -> tuple[ComplexRoot, ...]:
    """All roots of the reduced polynomial, exact where the degree permits.

    Degree 0 has no roots.  Degrees 1 and 2 are solved in closed form.
    Otherwise the polynomial is split into square-free factors (so multiple
    roots are solved at their exact multiplicity), each factor of degree at
    least 3 goes through Aberth-Ehrlich plus a Newton polish, and the result
    is conjugate-symmetrized using the exact real-root count of the factor.
    """
    c = p.c
    deg = len(c) - 1
    if deg == 0:
        return ()
    entries: list[tuple[complex, str | None, int]] = []
    for fac, mult in _square_free_decomposition(c):
        fdeg = len(fac) - 1
        if fdeg == 0:
            continue
        if fdeg <= 2:
            for z, form in _closed_form_roots(fac):
                entries.append((z, form, mult))
            continue
        fc = [float(x) for x in fac]
        approx = [_newton_polish(fc, z) for z in _aberth_ehrlich(fc)]
        n_real = _count_real_roots(fac)
        for z in _symmetrize(approx, n_real):
            entries.append((z, None, mult))
    out: list[ComplexRoot] = []
    for z, form, mult in entries:
        root = ComplexRoot(z.real, z.imag, _residual(c, z), form)
        out.extend([root] * mult)
    out.sort(key=lambda r: (r.re, r.im))
    if len(out) != deg:
        raise RootFindingError(
            "root count does not match the degree",
            [r.z for r in out], [r.residual for r in out])
    worst = max(r.residual for r in out)
    if worst > RESIDUAL_THRESHOLD:
        raise RootFindingError(
            f"residual {worst:.3e} exceeds the acceptance threshold",
            [r.z for r in out], [r.residual for r in out])
    return tuple(out)


def purely_imaginary_roots(p: ReducedPolynomial) -> tuple[PurelyImaginaryRoot, ...]:
    """Exact detection of roots on the imaginary axis.

    Writing p(x) = E(x^2) + x*O(x^2), a nonzero root ib requires t = -b^2 to
    be a common real root of E and O, hence a negative real root of the
    integer gcd of the two parts.  Those are isolated exactly with Sturm
    sequences; rational t values give exact radicals, the rest give
    certified intervals.
    """
    c = p.c
    even = list(c[0::2])
    odd = list(c[1::2])
    g = _int_poly_gcd(even, odd) if odd else _primitive(_trim(even))
    if len(g) <= 1:
        return ()
    hits: list[PurelyImaginaryRoot] = []
    for factor, _ in _square_free_decomposition(g):
        for found in _isolate_real_roots(factor):
            if isinstance(found, Fraction):
                if found < 0:
                    rad = -found
                    hits.append(PurelyImaginaryRoot(
                        math.sqrt(rad.numerator / rad.denominator), radicand=rad))
            else:
                lo, hi = found
                if hi < 0:
                    mid = -(lo + hi) / 2
                    hits.append(PurelyImaginaryRoot(
                        math.sqrt(mid.numerator / mid.denominator),
                        t_interval=(lo, hi)))
    hits.sort(key=lambda h: h.b)
    return tuple(hits)
