"""Constructive decompositions of binary forms.

Sylvester's algorithm writes a binary form as a sum of d-th powers of linear
forms read off from the kernel of its catalecticant; the mixed variant pins
some of the powers to fixed linear forms.  The quartic routines realize the
finite representation counts (six for the square-plus-fourth-power shape, two
once both fourth powers are fixed), and a seeded Newton counter estimates
representation counts for other shapes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .apolarity import apply_diff, hankel, hankel_kernel, kernel_vector_form
from .errors import (DegenerateInput, DegenerateLambda, LeadingZero,
                     NormalizationFailed, NotGeneric, RepeatedRoot,
                     ShapeMismatch, UnsupportedShape, ZeroForm)
from .forms import (Decomposition, Form, Term, binary_factor,
                    linear_coeffs, linear_form, monomial_form, parse_form,
                    power_of_linear)
from .linalg import mat_inverse, mat_solve
from .scalars import (EPS_DEFAULT, QQi, Scalar, is_exact, scalar_is_zero,
                      scalar_sqrt, to_complex)

# -- squarefree testing -------------------------------------------------------


def _poly_derivative(u: list[Scalar]) -> list[Scalar]:
    return [u[j] * j for j in range(1, len(u))]


def _poly_mod(a: list, b: list, eps: float) -> list:
    """Remainder of a / b over the scalar field, with relative zero chopping."""
    a = list(a)
    scale = max((abs(complex(v)) for v in a + b), default=1.0)
    exact = all(is_exact(v) for v in a + b)

    def trim(u):
        while u and (not u[-1] if exact else abs(complex(u[-1])) <= eps * scale):
            u.pop()
        return u

    a, b = trim(a), trim(list(b))
    while len(a) >= len(b) > 0:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j in range(len(b)):
            a[shift + j] = a[shift + j] - f * b[j]
        a.pop()
        trim(a)
    return a


def _binary_squarefree(h: Form, eps: float) -> bool:
    """gcd(h, h') constant, counting the root at infinity.

    Exact inputs use the Euclidean gcd; approximate ones decide by root
    clustering, which is the stable version of the same question.
    """
    d = h.d
    u = [h.raw((d - j, j)) for j in range(d + 1)]
    exact = all(is_exact(v) for v in u)
    if not exact:
        try:
            _, factors = binary_factor(h, eps)
        except (ZeroForm, ShapeMismatch):
            return False
        return all(mult == 1 for _, mult in factors)
    scale = max((abs(complex(v)) for v in u), default=1.0)
    m = next((j for j in range(len(u) - 1, -1, -1) if u[j]), -1)
    if m < 0 or d - m > 1:
        return False
    u = u[:m + 1]
    a, b = u, _poly_derivative(u)
    while True:
        if not b or all(not v for v in b):
            return len(a) <= 1
        a, b = b, _poly_mod(a, b, eps)


# -- Sylvester's algorithm ----------------------------------------------------


def _squarefree_kernel_form(vectors, r: int, eps: float) -> Form | None:
    """A squarefree form in the span of the kernel vectors, if one exists.

    Tries each basis vector, then moment-curve combinations; genericity means
    a handful of integer weights suffice when any squarefree member exists.
    """
    for v in vectors:
        h = kernel_vector_form(v)
        if _binary_squarefree(h, eps):
            return h
    if len(vectors) > 1:
        for k in range(1, r * (r + 2) + 2):
            combo = [sum(v[j] * (k ** i) for i, v in enumerate(vectors))
                     for j in range(r + 1)]
            h = kernel_vector_form(combo)
            if h and _binary_squarefree(h, eps):
                return h
    return None


def _nodes_from_annihilator(h: Form, eps: float):
    """Projective nodes (alpha, beta) with h = const * prod(beta x - alpha y)."""
    _, factors = binary_factor(h, eps)
    nodes = []
    for lin, mult in factors:
        if mult != 1:
            raise NotGeneric("annihilator has a repeated factor")
        cx, cy = linear_coeffs(lin)
        alpha, beta = -cy, cx
        lead = alpha if not scalar_is_zero(alpha, eps) else beta
        nodes.append((alpha / lead, beta / lead))
    nodes.sort(key=lambda ab: (complex(ab[0]).real, complex(ab[0]).imag,
                               complex(ab[1]).real, complex(ab[1]).imag))
    return nodes


def _solve_power_multipliers(p: Form, nodes, eps: float):
    """Multipliers lambda_k with p = sum lambda_k (alpha_k x + beta_k y)^d."""
    d = p.d
    rows = []
    rhs = []
    for j in range(d + 1):
        rows.append([a ** (d - j) * b ** j for a, b in nodes])
        rhs.append(p.a((d - j, j)))
    return mat_solve(rows, rhs, eps)


def sylvester_decompose(p: Form, eps: float = EPS_DEFAULT) -> Decomposition:
    """Write p as a sum of d-th powers of the smallest possible width.

    Searches orders r = 1, 2, ... for a squarefree kernel form of the
    catalecticant; its linear factors give the nodes, and the multipliers
    solve a Vandermonde system.  Exact inputs with rational nodes come back
    exact.
    """
    if p.n != 2:
        raise ShapeMismatch("Sylvester's algorithm needs a binary form")
    if p.is_zero():
        raise ZeroForm("cannot decompose the zero form")
    d = p.d
    for r in range(1, d + 1):
        kernel = hankel_kernel(hankel(p, r), eps)
        if not kernel:
            continue
        h = _squarefree_kernel_form(kernel, r, eps)
        if h is None:
            continue
        nodes = _nodes_from_annihilator(h, eps)
        lambdas = _solve_power_multipliers(p, nodes, eps)
        if lambdas is None:
            continue
        terms = [Term(lam, linear_form([a, b]), d)
                 for lam, (a, b) in zip(lambdas, nodes)
                 if not scalar_is_zero(lam, eps, scale=p.norm())]
        dec = Decomposition(terms, meta={"theorem": "sylvester", "order": r})
        if not dec.verify(p, max(eps, 1e-7)):
            continue
        if p.exact and not all(t.base.exact and is_exact(t.multiplier)
                               for t in terms):
            snapped = dec.snapped(p)
            if snapped is not None:
                snapped.meta.update(dec.meta)
                return snapped
        return dec
    raise NotGeneric("no squarefree annihilator up to order d "
                     "(repeated-root case is out of scope)")


# -- mixed fixed-form decomposition ---------------------------------------------


@dataclass(frozen=True)
class MixedSpec:
    """Fixed honest linear forms plus a count of free d-th powers."""

    fixed: tuple
    r: int

    def __init__(self, fixed, r: int):
        object.__setattr__(self, "fixed", tuple(fixed))
        object.__setattr__(self, "r", int(r))
        for f in self.fixed:
            if f.d != 1 or f.n != 2 or f.is_zero():
                raise ShapeMismatch("fixed forms must be nonzero binary linear forms")
        for i in range(len(self.fixed)):
            for j in range(i + 1, len(self.fixed)):
                a = linear_coeffs(self.fixed[i])
                b = linear_coeffs(self.fixed[j])
                if scalar_is_zero(a[0] * b[1] - a[1] * b[0], EPS_DEFAULT):
                    raise DegenerateInput("fixed forms are not pairwise "
                                          "non-proportional")

    @property
    def m(self) -> int:
        return len(self.fixed)


def _flip(lin: Form) -> Form:
    """alpha x + beta y -> beta x - alpha y (the apolar annihilator)."""
    a, b = linear_coeffs(lin)
    return linear_form([b, -a])


def mixed_decompose(p: Form, spec: MixedSpec, eps: float = EPS_DEFAULT) -> Decomposition:
    """Unique representation with spec.m fixed powers and spec.r free powers.

    Differentiates away the fixed forms, Sylvester-decomposes the remainder,
    rescales the free powers, then solves for the fixed multipliers.
    """
    if p.n != 2:
        raise ShapeMismatch("mixed decomposition needs a binary form")
    if p.is_zero():
        raise ZeroForm("cannot decompose the zero form")
    d = p.d
    m, r = spec.m, spec.r
    if m + 2 * r != d + 1:
        raise ShapeMismatch(f"need m + 2r = d+1; got {m} + 2*{r} != {d + 1}")

    f = None
    for lin in spec.fixed:
        g = _flip(lin)
        f = g if f is None else f * g

    free_terms: list[Term] = []
    if f is not None:
        fp = apply_diff(f, p)
    else:
        fp = p
    if not fp.is_zero(eps, scale=p.norm()):
        try:
            sylv = sylvester_decompose(fp, eps)
        except NotGeneric as exc:
            raise DegenerateInput(f"Sylvester stage failed: {exc}") from exc
        if len(sylv.terms) > r:
            raise DegenerateInput(
                f"Sylvester stage needs width <= {r}, got {len(sylv.terms)}")
        scale_c = QQi(Fraction(math.factorial(d - m), math.factorial(d)))
        for t in sylv.terms:
            node = linear_coeffs(t.base)
            if f is not None:
                fu = f.evaluate(node)
                if scalar_is_zero(fu, eps, scale=f.norm()):
                    raise DegenerateInput("f vanishes at a Sylvester node")
            else:
                fu = QQi(1)
            free_terms.append(Term(scale_c * t.multiplier / fu, t.base, d))

    residual = p
    for t in free_terms:
        residual = residual - t.form()
    fixed_terms: list[Term] = []
    if m:
        rows = []
        rhs = []
        cols = [power_of_linear(linear_coeffs(lin), d) for lin in spec.fixed]
        for j in range(d + 1):
            idx = (d - j, j)
            rows.append([c.a(idx) for c in cols])
            rhs.append(residual.a(idx))
        ts = mat_solve(rows, rhs, eps)
        if ts is None:
            raise DegenerateInput("fixed-form system is inconsistent")
        fixed_terms = [Term(t, lin, d) for t, lin in zip(ts, spec.fixed)]
    dec = Decomposition(free_terms + fixed_terms,
                        meta={"theorem": "mixed", "m": m, "r": r})
    if not dec.verify(p, max(eps, 1e-7)):
        raise DegenerateInput("reconstruction check failed")
    return dec


# -- sums of two squares -----------------------------------------------------------


def two_squares_all(p: Form, eps: float = EPS_DEFAULT) -> list[Decomposition]:
    """All binom(2s-1, s) representations f^2 + g^2 with g missing x^s.

    Each unordered split of the 2s distinct linear factors into two
    s-products gives one representation after the rotation that kills the
    x^s coefficient of the second square.
    """
    if p.n != 2 or p.d % 2:
        raise ShapeMismatch("need a binary form of even degree")
    if p.is_zero():
        raise ZeroForm("cannot decompose the zero form")
    s = p.d // 2
    if scalar_is_zero(p.raw((p.d, 0)), eps, scale=p.norm()):
        raise LeadingZero("p(1,0) = 0: the rotation normalization needs a "
                          "nonzero leading coefficient")
    constant, factors = binary_factor(p, eps)
    if any(mult > 1 for _, mult in factors):
        raise RepeatedRoot("two-squares enumeration needs 2s distinct roots")
    lins = [lin for lin, _ in factors]

    out = []
    for rest in itertools.combinations(range(1, 2 * s), s - 1):
        group = (0,) + rest
        a_side = None
        b_side = None
        for i, lin in enumerate(lins):
            if i in group:
                a_side = lin if a_side is None else a_side * lin
            else:
                b_side = lin if b_side is None else b_side * lin
        a_side = a_side.scale(constant)
        half = QQi(Fraction(1, 2))
        f = (a_side + b_side).scale(half)
        g = (a_side - b_side).scale(half * QQi(0, -1))
        rho = f.raw((s, 0))
        tau = g.raw((s, 0))
        w = scalar_sqrt(rho * rho + tau * tau)
        u, v = rho / w, -tau / w
        f2 = f.scale(u) - g.scale(v)
        g2 = f.scale(v) + g.scale(u)
        # the x^s coefficient of g2 is zero by construction; drop its noise
        g2 = Form(2, s, {i: c for i, c in g2.items() if i != (s, 0)})
        dec = Decomposition([Term(1, f2, 2), Term(1, g2, 2)],
                            meta={"theorem": "two-squares", "split": list(group)})
        if p.exact:
            snapped = dec.snapped(p)
            if snapped is not None:
                snapped.meta.update(dec.meta)
                dec = snapped
        out.append(dec)
    return out


# -- binary quartics ------------------------------------------------------------------


@dataclass(frozen=True)
class QuarticNormal:
    """lambda and the change of variables with p o transform ~ x^4+6lx^2y^2+y^4."""

    lam: Scalar
    transform: tuple

    def normal_form(self) -> Form:
        return parse_form("x^4 + y^4") + monomial_form(2, (2, 2), 6 * self.lam)


def _projective_zero(lin: Form) -> tuple[complex, complex]:
    cx, cy = (to_complex(v) for v in linear_coeffs(lin))
    return (-cy, cx)


def _mobius_canonical(p1, p2, p3):
    """2x2 map sending p1, p2, p3 to (1,0), (0,1), (1,1) projectively."""
    rows = [[p2[1], -p2[0]], [p1[1], -p1[0]]]
    w = [rows[0][0] * p3[0] + rows[0][1] * p3[1],
         rows[1][0] * p3[0] + rows[1][1] * p3[1]]
    if w[0] == 0 or w[1] == 0:
        return None
    return [[rows[0][0] / w[0], rows[0][1] / w[0]],
            [rows[1][0] / w[1], rows[1][1] / w[1]]]


def _proj_chordal(u, v) -> float:
    nu = (abs(u[0]) ** 2 + abs(u[1]) ** 2) ** 0.5
    nv = (abs(v[0]) ** 2 + abs(v[1]) ** 2) ** 0.5
    return abs(u[0] * v[1] - u[1] * v[0]) / (nu * nv)


def quartic_normalize(p: Form, eps: float = EPS_DEFAULT) -> QuarticNormal:
    """Transform a quartic with distinct roots to x^4 + 6 lambda x^2 y^2 + y^4.

    Pairs the four roots into {t, -t} and {1/t, -1/t} patterns; the cross
    ratio pins t and three correspondences pin the Moebius map, which is then
    accepted if the fourth root and the transformed coefficients agree.
    """
    if p.n != 2 or p.d != 4:
        raise ShapeMismatch("need a binary quartic")
    _, factors = binary_factor(p, eps)
    if any(mult > 1 for _, mult in factors) or len(factors) != 4:
        raise RepeatedRoot("quartic normalization needs 4 distinct roots")
    z = [_projective_zero(lin) for lin, _ in factors]
    tol = max(eps, 1e-9) ** 0.5

    def det2(u, v):
        return u[0] * v[1] - u[1] * v[0]

    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    for (ia, ib), (ic, id_) in pairings:
        for swap_b in (False, True):
            for swap_d in (False, True):
                a, b = (z[ia], z[ib]) if not swap_b else (z[ib], z[ia])
                c, dd = (z[ic], z[id_]) if not swap_d else (z[id_], z[ic])
                denom = det2(a, dd) * det2(b, c)
                if denom == 0:
                    continue
                rho = det2(a, c) * det2(b, dd) / denom
                sigma = complex(rho) ** 0.5
                if sigma == 1:
                    continue
                t2 = (1 + sigma) / (1 - sigma)
                t = complex(t2) ** 0.5
                if t == 0:
                    continue
                targets = [(1 + 0j, t), (1 + 0j, -t), (t, 1 + 0j)]
                g_src = _mobius_canonical(a, b, c)
                g_dst = _mobius_canonical(*targets)
                if g_src is None or g_dst is None:
                    continue
                gd_inv = mat_inverse(g_dst)
                mob = [[gd_inv[i][0] * g_src[0][j] + gd_inv[i][1] * g_src[1][j]
                        for j in range(2)] for i in range(2)]
                image_d = (mob[0][0] * dd[0] + mob[0][1] * dd[1],
                           mob[1][0] * dd[0] + mob[1][1] * dd[1])
                if _proj_chordal(image_d, (t, -1 + 0j)) > tol:
                    continue
                transform = mat_inverse(mob)
                if transform is None:
                    continue
                q = p.approx().substitute(transform)
                scale = q.norm()
                a0, a1 = q.raw((4, 0)), q.raw((3, 1))
                a2, a3, a4 = q.raw((2, 2)), q.raw((1, 3)), q.raw((0, 4))
                if (abs(a1) > tol * scale or abs(a3) > tol * scale
                        or abs(a0 - a4) > tol * scale or abs(a0) <= tol * scale):
                    continue
                lam = (a2 / 6) / a0
                return QuarticNormal(lam, tuple(tuple(row) for row in transform))
    raise NormalizationFailed("no root pairing gave a consistent transform")


def _x() -> Form:
    return linear_form([QQi(1), QQi(0)])


def _y() -> Form:
    return linear_form([QQi(0), QQi(1)])


def quartic_six_reps(lam: Scalar, eps: float = EPS_DEFAULT) -> list[Decomposition]:
    """The six (quadratic)^2 + c (linear)^4 representations of
    x^4 + 6 lambda x^2 y^2 + y^4."""
    from .scalars import as_scalar
    lam = as_scalar(lam if not isinstance(lam, Fraction) else QQi(lam))
    one = QQi(1)
    for sign, label in ((one, "3*lambda + 1"), (-one, "3*lambda - 1")):
        if scalar_is_zero(3 * lam + sign, eps):
            raise DegenerateLambda(f"{label} = 0")
    i_unit = QQi(0, Fraction(1))
    x, y = _x(), _y()
    x2 = monomial_form(2, (2, 0))
    y2 = monomial_form(2, (0, 2))
    xy = monomial_form(2, (1, 1))
    cord = 1 - 9 * lam * lam
    reps = [
        Decomposition([Term(1, x2 + y2.scale(3 * lam), 2), Term(cord, y, 4)],
                      meta={"theorem": "quartic-six", "branch": "easy-x"}),
        Decomposition([Term(1, x2.scale(3 * lam) + y2, 2), Term(cord, x, 4)],
                      meta={"theorem": "quartic-six", "branch": "easy-y"}),
    ]
    for k in range(4):
        sgn = QQi((-1) ** k)
        ik = i_unit ** k
        denom = 3 * lam + sgn
        quad = x2 - xy.scale(i_unit ** (3 * k) * (3 * lam - sgn)) + y2.scale(sgn)
        lin = x + y.scale(ik)
        reps.append(Decomposition(
            [Term(sgn * 2 / denom, quad, 2),
             Term((3 * lam - sgn) / denom, lin, 4)],
            meta={"theorem": "quartic-six", "branch": f"k={k}"}))
    return reps


def quartic_power_ratio(dec: Decomposition) -> complex | None:
    """t5/t4 of the fourth-power linear form; None encodes infinity."""
    for t in dec.terms:
        if t.power == 4:
            t4, t5 = (to_complex(v) for v in linear_coeffs(t.base))
            if t4 == 0:
                return None
            return t5 / t4
    raise ValueError("decomposition has no fourth-power term")


def quartic_six_for_form(p: Form, eps: float = EPS_DEFAULT) -> list[Decomposition]:
    """Normalize a general quartic, take the six model representations, and
    pull them back through the inverse change of variables."""
    normal = quartic_normalize(p, eps)
    transform = [list(row) for row in normal.transform]
    q = p.approx().substitute(transform)
    scale_c = q.raw((4, 0))
    inv = mat_inverse(transform)
    out = []
    for rep in quartic_six_reps(normal.lam, eps):
        terms = [Term(scale_c * to_complex(t.multiplier),
                      t.base.approx().substitute(inv), t.power)
                 for t in rep.terms]
        out.append(Decomposition(terms, meta=dict(rep.meta)))
    return out


def quartic_two_fixed(p: Form, l1: Form, l2: Form,
                      eps: float = EPS_DEFAULT) -> list[Decomposition]:
    """The two representations (quadratic)^2 + t4 l1^4 + t5 l2^4."""
    if p.n != 2 or p.d != 4:
        raise ShapeMismatch("need a binary quartic")
    for lin in (l1, l2):
        if lin.d != 1 or lin.n != 2:
            raise ShapeMismatch("fixed forms must be binary linear forms")
    a_mat = [linear_coeffs(l1), linear_coeffs(l2)]
    inv = mat_inverse(a_mat)
    if inv is None:
        raise DegenerateInput("fixed linear forms are proportional")
    q = p.substitute(inv)
    a = [q.raw((4 - j, j)) for j in range(5)]
    scale = q.norm()
    if scalar_is_zero(a[1], eps, scale):
        raise DegenerateInput("coefficient a1 vanishes after the change of variables")
    if scalar_is_zero(a[3], eps, scale):
        raise DegenerateInput("coefficient a3 vanishes after the change of variables")
    disc = a[2] * a[2] - 2 * a[1] * a[3]
    if scalar_is_zero(disc, eps, scale * scale):
        raise DegenerateInput("the quadratic for t2/t1 has a repeated root")
    root = scalar_sqrt(disc)
    out = []
    for sign in (1, -1):
        beta = (a[2] + sign * root) / a[1]
        mult = a[1] / (2 * beta)
        base = (monomial_form(2, (2, 0)) + monomial_form(2, (1, 1), beta)
                + monomial_form(2, (0, 2), a[3] / a[1]))
        t4 = a[0] - mult
        t5 = a[4] - (a[3] / a[1]) ** 2 * mult
        dec = Decomposition(
            [Term(mult, base.substitute(a_mat), 2), Term(t4, l1, 4), Term(t5, l2, 4)],
            meta={"theorem": "quartic-two-fixed", "branch": f"sign={sign}"})
        if not dec.verify(p, max(eps, 1e-7)):
            raise DegenerateInput("reconstruction check failed")
        if p.exact:
            snapped = dec.snapped(p)
            if snapped is not None:
                snapped.meta.update(dec.meta)
                dec = snapped
        out.append(dec)
    return out


# -- Monte Carlo representation counting ------------------------------------------------


def _vec_power(v: np.ndarray, k: int) -> np.ndarray:
    """k-th power of a binary form given as its raw coefficient vector."""
    out = np.array([1 + 0j])
    for _ in range(k):
        out = np.convolve(out, v)
    return out


def _mc_system(d: int, e: list[int], fixed_forms, p: Form):
    """Newton residual and Jacobian for membership in the mixed-power shape.

    Binary forms are raw coefficient vectors (ascending y-exponent), so
    products are convolutions and monomial multiples are shifts.
    """
    m = len(fixed_forms)
    powers = [d // ek for ek in e]
    fixed_vecs = np.array(
        [_vec_power(np.array([complex(v) for v in linear_coeffs(lin)]), d)
         for lin in fixed_forms], dtype=complex).reshape(m, d + 1)
    target = np.array([complex(p.raw((d - j, j))) for j in range(d + 1)])

    def split(z):
        ts = z[:m]
        blocks = []
        at = m
        for ek in e:
            blocks.append(z[at:at + ek + 1])
            at += ek + 1
        return ts, blocks

    def residual(z):
        ts, blocks = split(z)
        total = ts @ fixed_vecs if m else np.zeros(d + 1, dtype=complex)
        for block, mk in zip(blocks, powers):
            total = total + _vec_power(block, mk)
        return total - target

    def jacobian(z):
        _, blocks = split(z)
        cols = [fixed_vecs[i] for i in range(m)]
        for block, ek, mk in zip(blocks, e, powers):
            fk1 = mk * _vec_power(block, mk - 1)
            for ell in range(ek + 1):
                col = np.zeros(d + 1, dtype=complex)
                col[ell:ell + len(fk1)] = fk1
                cols.append(col)
        return np.array(cols, dtype=complex).T

    return split, residual, jacobian


def _mc_signature(z, e, powers, split):
    ts, blocks = split(z)
    groups: dict[int, list[np.ndarray]] = {}
    for block, ek, mk in zip(blocks, e, powers):
        groups.setdefault(ek, []).append(_vec_power(block, mk))
    return np.array(list(ts), dtype=complex), groups


def _signatures_match(sig_a, sig_b, tol: float) -> bool:
    ts_a, groups_a = sig_a
    ts_b, groups_b = sig_b
    scale = max(1.0, float(np.max(np.abs(ts_a))) if ts_a.size else 1.0,
                max((float(np.max(np.abs(v))) for vs in groups_a.values()
                     for v in vs), default=1.0))
    if ts_a.size and float(np.max(np.abs(ts_a - ts_b))) > tol * scale:
        return False
    for ek, vecs_a in groups_a.items():
        vecs_b = list(groups_b[ek])
        for va in vecs_a:
            hit = None
            for idx, vb in enumerate(vecs_b):
                if float(np.max(np.abs(va - vb))) <= tol * scale:
                    hit = idx
                    break
            if hit is None:
                return False
            vecs_b.pop(hit)
    return True


def count_reps_monte_carlo(d: int, e: list[int], m: int,
                           trials: int | None = None, seed: int = 0,
                           form: Form | None = None) -> int:
    """Estimated number of representations p = sum t_j l_j^d + sum f_k^(d/e_k).

    Seeded Newton iterations from random starts, deduplicated under
    permutation of like summands and f^k ~ (zeta f)^k.  The result is an
    ESTIMATE, never authoritative.
    """
    e = sorted((int(v) for v in e), reverse=True)
    if any(d % ek or ek >= d or ek < 1 for ek in e):
        raise UnsupportedShape("each e_k must properly divide d")
    if m + sum(ek + 1 for ek in e) != d + 1:
        raise UnsupportedShape(f"m + sum(e_k + 1) must equal d+1 = {d + 1}")
    rng = np.random.default_rng(seed)
    if form is None:
        coeffs = rng.integers(-100, 101, size=(d + 1, 2))
        form = Form(2, d, {(d - j, j): complex(*coeffs[j]) for j in range(d + 1)})
    p = form.approx()
    fixed_forms = []
    if m >= 1:
        fixed_forms.append(_x())
    if m >= 2:
        fixed_forms.append(_y())
    for extra in range(m - 2):
        c = rng.integers(-100, 101, size=4)
        fixed_forms.append(linear_form([complex(c[0], c[1]), complex(c[2], c[3])]))

    split, residual, jacobian = _mc_system(d, e, fixed_forms, p)
    powers = [d // ek for ek in e]
    nvars = d + 1
    scale = max(p.norm(), 1.0)
    if trials is None:
        s = (d + 1) // 2
        trials = 200 * s ** 5
    patience = max(120, trials // 5)

    start_mag = np.empty(nvars)
    start_mag[:m] = scale
    at = m
    for ek in e:
        start_mag[at:at + ek + 1] = scale ** (ek / d)
        at += ek + 1

    found: list = []
    since_new = 0
    for trial in range(trials):
        sub = np.random.default_rng(seed + trial + 1)
        z = (sub.standard_normal(nvars) + 1j * sub.standard_normal(nvars)) * start_mag
        converged = False
        for _ in range(60):
            r = residual(z)
            if float(np.max(np.abs(r))) <= 1e-12 * scale:
                converged = True
                break
            try:
                step = np.linalg.solve(jacobian(z), r)
            except np.linalg.LinAlgError:
                break
            z = z - step
        if not converged or float(np.max(np.abs(residual(z)))) > 1e-9 * scale:
            since_new += 1
            if since_new >= patience:
                break
            continue
        sig = _mc_signature(z, e, powers, split)
        if any(_signatures_match(sig, other, 1e-6) for other in found):
            since_new += 1
        else:
            found.append(sig)
            since_new = 0
        if since_new >= patience:
            break
    return len(found)
