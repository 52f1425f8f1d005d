"""Generators of the minimal W-superalgebra inside the Whittaker model.

theta_v and theta_w implement the degree-0 and degree-1 generator formulas;
casimir builds the quadratic Casimir attached to the normalized form, and
theta_cas the contracted product of the dual-basis generators of degree 0.
Every generator is checked for model membership at construction.
"""

from dataclasses import dataclass
from fractions import Fraction

from .enveloping import EnvElement
from .errors import InputError
from .linalg import ZERO
from .whittaker import (WhittakerElement, env_from_zvector, is_w_element,
                        multiply_q, project)

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


@dataclass
class WGenerator:
    label: str
    source: tuple          # the g^e vector the generator lifts, or e for C
    value: WhittakerElement
    kazhdan_degree: int
    parity: int


def _check_membership(setup, label, value):
    ok, witness = is_w_element(value)
    if not ok:
        raise InputError("%s is not ad-n invariant; ad %s gives %s"
                         % (label, witness[0], witness[1].render()))


def _check_leading(setup, value, source_env, label):
    lead = value.leading()
    want = project(source_env)
    if lead != want:
        raise InputError("%s leading term is %s, expected %s"
                         % (label, lead.render(), want.render()))


def theta_v(setup, v, check=True):
    """(v - 1/2 sum_a z_a [z*_a, v]) in the model, for v in g^e(0)."""
    if not (setup.in_grade(v, 0) and setup.in_centralizer(v)):
        raise InputError("theta_v expects a vector in g^e(0)")
    expr = EnvElement.from_vector(setup, v)
    for alpha in range(len(setup.zbasis)):
        br = setup.alg.bracket(setup.zdual[alpha], v)
        if any(c != 0 for c in br):
            za = EnvElement.from_letter(setup, setup.z_letter(alpha))
            expr = expr - (za * env_from_zvector(setup, br)).scale(HALF)
    value = project(expr)
    gen = WGenerator("Theta[%s]" % _vec_label(setup, v), tuple(v), value, 2,
                     setup.alg.parity_of(v))
    if check:
        _check_membership(setup, gen.label, value)
        _check_leading(setup, value, EnvElement.from_vector(setup, v), gen.label)
    return gen


def theta_w_correction_form(setup, w):
    """Correction form: w - sum z[z*,w] + (sum zz[z*,[z*,w]] - 2[w,f])/3."""
    alg = setup.alg
    expr = EnvElement.from_vector(setup, w)
    n = len(setup.zbasis)
    for alpha in range(n):
        br = alg.bracket(setup.zdual[alpha], w)
        if any(c != 0 for c in br):
            za = EnvElement.from_letter(setup, setup.z_letter(alpha))
            expr = expr - za * EnvElement.from_vector(setup, br)
    dbl = EnvElement(setup)
    for alpha in range(n):
        inner = alg.bracket(setup.zdual[alpha], w)        # in g(0)
        if all(c == 0 for c in inner):
            continue
        za = EnvElement.from_letter(setup, setup.z_letter(alpha))
        for beta in range(n):
            br2 = alg.bracket(setup.zdual[beta], inner)   # in g(-1)
            if any(c != 0 for c in br2):
                zb = EnvElement.from_letter(setup, setup.z_letter(beta))
                dbl = dbl + za * zb * env_from_zvector(setup, br2)
    wf = alg.bracket(w, setup.triple.f)                   # in g(-1)
    expr = expr + (dbl - env_from_zvector(setup, wf).scale(2)).scale(THIRD)
    return project(expr)


def theta_w_phi_form(setup, w):
    """Reordered form: w + sum (-1)^{|a|}[w,z*_a] z_a + phi_w, with
    phi_w = (sum zz[z*,[z*,w]] - (3(s-r)+4)/2 [w,f]) / 3."""
    alg = setup.alg
    expr = EnvElement.from_vector(setup, w)
    n = len(setup.zbasis)
    for alpha in range(n):
        br = alg.bracket(w, setup.zdual[alpha])           # in g(0)
        if any(c != 0 for c in br):
            sign = -1 if alg.parity_of(setup.zbasis[alpha]) else 1
            za = EnvElement.from_letter(setup, setup.z_letter(alpha))
            expr = expr + (EnvElement.from_vector(setup, br) * za).scale(sign)
    phi = EnvElement(setup)
    for alpha in range(n):
        inner = alg.bracket(setup.zdual[alpha], w)
        if all(c == 0 for c in inner):
            continue
        za = EnvElement.from_letter(setup, setup.z_letter(alpha))
        for beta in range(n):
            br2 = alg.bracket(setup.zdual[beta], inner)
            if any(c != 0 for c in br2):
                zb = EnvElement.from_letter(setup, setup.z_letter(beta))
                phi = phi + za * zb * env_from_zvector(setup, br2)
    wf = alg.bracket(w, setup.triple.f)
    coeff = Fraction(3 * (setup.sdim - setup.rdim) + 4, 2)
    phi = phi - env_from_zvector(setup, wf).scale(coeff)
    return project(expr + phi.scale(THIRD))


def theta_w(setup, w, check=True):
    """Degree-1 generator; both closed forms are computed and must agree."""
    if not (setup.in_grade(w, 1) and setup.in_centralizer(w)):
        raise InputError("theta_w expects a vector in g^e(1)")
    value = theta_w_correction_form(setup, w)
    other = theta_w_phi_form(setup, w)
    if value != other:
        raise InputError("the two generator formulas for %s disagree: %s vs %s"
                         % (_vec_label(setup, w), value.render(), other.render()))
    gen = WGenerator("Theta[%s]" % _vec_label(setup, w), tuple(w), value, 3,
                     setup.alg.parity_of(w))
    if check:
        _check_membership(setup, gen.label, value)
        _check_leading(setup, value, EnvElement.from_vector(setup, w), gen.label)
    return gen


def casimir(setup, check=True):
    """2e + h^2/2 - (1+(s-r)/2) h + sum (-1)^|i| a_i b_i
    + 2 sum (-1)^|a| [e,z*_a] z_a, as a model element."""
    alg, t = setup.alg, setup.triple
    h = EnvElement.from_vector(setup, t.h)
    expr = EnvElement.from_vector(setup, t.e).scale(2)
    expr = expr + (h * h).scale(HALF)
    expr = expr - h.scale(1 + Fraction(setup.sdim - setup.rdim, 2))
    for a, b in zip(setup.dual_a, setup.dual_b):
        sign = -1 if alg.parity_of(a) else 1
        expr = expr + (EnvElement.from_vector(setup, a)
                       * EnvElement.from_vector(setup, b)).scale(sign)
    for alpha in range(len(setup.zbasis)):
        ez = alg.bracket(t.e, setup.zdual[alpha])         # in g(1)
        if any(c != 0 for c in ez):
            sign = -1 if alg.parity_of(setup.zbasis[alpha]) else 1
            za = EnvElement.from_letter(setup, setup.z_letter(alpha))
            expr = expr + (EnvElement.from_vector(setup, ez) * za).scale(2 * sign)
    value = project(expr)
    gen = WGenerator("C", tuple(t.e), value, 4, 0)
    if check:
        _check_membership(setup, "C", value)
    return gen


def theta_cas(setup, theta0=None):
    """sum_i (-1)^{|i|} Theta_{a_i} Theta_{b_i} over the g^e(0) dual bases."""
    value = WhittakerElement(setup)
    for a, b in zip(setup.dual_a, setup.dual_b):
        sign = -1 if setup.alg.parity_of(a) else 1
        ta = theta_v(setup, a, check=False).value
        tb = theta_v(setup, b, check=False).value
        value = value + multiply_q(ta, tb).scale(sign)
    return WGenerator("ThetaCas", tuple(setup.triple.e), value, 4, 0)


def theta_of(setup, x):
    """Theta of an arbitrary g^e(0) + g^e(1) vector, extended linearly
    through the grading components."""
    h_bracket = setup.alg.bracket(setup.triple.h, x)
    comp0, comp1 = list(x), [ZERO] * setup.dim
    if any(c != 0 for c in h_bracket):
        # split x = x0 + x1 by eigenvalue: x1 = [h,x], x0 = x - x1
        comp1 = list(h_bracket)
        comp0 = [a - b for a, b in zip(x, comp1)]
        if setup.alg.bracket(setup.triple.h, tuple(comp1)) != tuple(comp1):
            raise InputError("vector is not in g^e(0) + g^e(1)")
    out = WhittakerElement(setup)
    if any(c != 0 for c in comp0):
        out = out + theta_v(setup, tuple(comp0), check=False).value
    if any(c != 0 for c in comp1):
        out = out + theta_w(setup, tuple(comp1), check=False).value
    return out


def _vec_label(setup, v):
    coords = setup.to_letters(v)
    if len(coords) == 1:
        (i, c), = coords.items()
        if c == 1:
            return setup.letter_names[i]
    return "+".join("%s%s" % ("" if c == 1 else "%s*" % c, setup.letter_names[i])
                    for i, c in sorted(coords.items()))


def standard_generators(setup):
    """All generators in report order: degree-0 Thetas, degree-1 Thetas, C."""
    gens = []
    for v in setup.cent[0]:
        gens.append(theta_v(setup, v))
    for w in setup.cent[1]:
        gens.append(theta_w(setup, w))
    gens.append(casimir(setup))
    return gens
