"""The Whittaker model: U(g) modulo the left ideal generated by f - 1,
realized on canonical (p-word, z-word) pairs.

With the global letter order of the setup a normal monomial splits as
p-part . z-part . f^k, so projection just evaluates the f-suffix at 1.
The z-letters generate the Weyl-Clifford algebra attached to the pairing
on g(-1); products of model elements are computed by lifting to U(g),
multiplying, and projecting back, which on ad-n invariants is exactly the
model's associative product.
"""

from fractions import Fraction

from .enveloping import EnvElement, word_parity
from .errors import InputError
from .linalg import ZERO


class WhittakerElement:
    """Sparse map (p-word, z-word) -> Fraction in canonical form."""

    __slots__ = ("setup", "terms")

    def __init__(self, setup, terms=None):
        self.setup = setup
        self.terms = {} if terms is None else terms

    @classmethod
    def unit(cls, setup, c=1):
        c = Fraction(c)
        return cls(setup, {((), ()): c} if c != 0 else {})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        return WhittakerElement(self.setup, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return WhittakerElement(self.setup, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return WhittakerElement(self.setup)
        return WhittakerElement(self.setup, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WhittakerElement):
            return multiply_q(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, WhittakerElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def scalar_part(self):
        """Coefficient of 1 x 1 if the element is scalar, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and ((), ()) in self.terms:
            return self.terms[((), ())]
        return None

    def parity(self):
        p = None
        for (pw, zw) in self.terms:
            wp = word_parity(self.setup, pw + zw)
            if p is None:
                p = wp
            elif p != wp:
                return None
        return p

    def homogeneous_parts(self):
        parts = {0: {}, 1: {}}
        for k, c in self.terms.items():
            parts[word_parity(self.setup, k[0] + k[1])][k] = c
        return {p: WhittakerElement(self.setup, t) for p, t in parts.items() if t}

    def kazhdan_degree_key(self, key):
        pw, zw = key
        return sum(self.setup.letter_grade[i] + 2 for i in pw) + len(zw)

    def weight_key(self, key):
        pw, zw = key
        return sum(self.setup.letter_grade[i] for i in pw) - len(zw)

    def max_kazhdan_degree(self):
        return max((self.kazhdan_degree_key(k) for k in self.terms), default=0)

    def leading(self):
        """Sub-element of maximal (Kazhdan degree, weight)."""
        if not self.terms:
            return WhittakerElement(self.setup)
        best = max((self.kazhdan_degree_key(k), self.weight_key(k))
                   for k in self.terms)
        keep = {k: c for k, c in self.terms.items()
                if (self.kazhdan_degree_key(k), self.weight_key(k)) == best}
        return WhittakerElement(self.setup, keep)

    def render(self):
        names = self.setup.letter_names
        if not self.terms:
            return "0"
        chunks = []
        for (pw, zw) in sorted(self.terms):
            c = self.terms[(pw, zw)]
            word = pw + zw
            body = "·".join(names[i] for i in word) if word else "1"
            if c == 1 and word:
                txt = body
            elif c == -1 and word:
                txt = "-" + body
            else:
                txt = "%s·%s" % (c, body) if word else str(c)
            chunks.append(txt)
        out = chunks[0]
        for t in chunks[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    __repr__ = render

    def as_json(self):
        names = self.setup.letter_names
        out = []
        for (pw, zw) in sorted(self.terms):
            c = self.terms[(pw, zw)]
            out.append({
                "monomial": [names[i] for i in pw + zw],
                "coeff": "%d/%d" % (c.numerator, c.denominator),
            })
        return out


def project(env):
    """Image in the model: split p | z | f and evaluate the f-run at chi(f)=1."""
    setup = env.setup
    z0, idx_f = setup.z_start, setup.idx_f
    out = {}
    for word, c in env.terms.items():
        pw, zw = [], []
        for i in word:
            if i == idx_f:
                continue                     # chi(f) = 1 after normalization
            elif i >= z0:
                zw.append(i)
            else:
                pw.append(i)
        key = (tuple(pw), tuple(zw))
        v = out.get(key, ZERO) + c
        if v == 0:
            out.pop(key, None)
        else:
            out[key] = v
    return WhittakerElement(setup, out)


def lift(q):
    """Canonical f-free preimage in U(g); already in normal order."""
    return EnvElement(q.setup, {pw + zw: c for (pw, zw), c in q.terms.items()})


def multiply_q(q1, q2):
    """Model product: lift, multiply in U(g), project.

    Associative on ad-n invariants (and whenever the right factors are
    invariants); that is the only regime the verification suite uses.
    """
    return project(lift(q1) * lift(q2))


def supercommutator_q(q1, q2):
    """[q1, q2] extended additively over parity components."""
    out = WhittakerElement(q1.setup)
    for p1, a in q1.homogeneous_parts().items():
        for p2, b in q2.homogeneous_parts().items():
            sign = -1 if (p1 and p2) else 1
            out = out + multiply_q(a, b) - multiply_q(b, a).scale(sign)
    return out


def ad_act(setup, x_letter, q):
    """Adjoint action of a basis letter of n = g(-1) + Cf on the model."""
    if setup.letter_grade[x_letter] >= 0:
        raise InputError("ad_act expects a letter of n = g(-1) + g(-2)")
    x = EnvElement.from_letter(setup, x_letter)
    px = setup.letter_parity[x_letter]
    out = WhittakerElement(setup)
    for pq, part in q.homogeneous_parts().items():
        lifted = lift(part)
        sign = -1 if (px and pq) else 1
        out = out + project(x * lifted - (lifted * x).scale(sign))
    return out


def is_w_element(q):
    """Membership in the model's ad-n invariants.

    Returns (True, None) or (False, (letter_name, residue)).
    """
    setup = q.setup
    for alpha in range(len(setup.zbasis)):
        letter = setup.z_letter(alpha)
        res = ad_act(setup, letter, q)
        if not res.is_zero():
            return False, (setup.letter_names[letter], res)
    res = ad_act(setup, setup.idx_f, q)
    if not res.is_zero():
        return False, (setup.letter_names[setup.idx_f], res)
    return True, None


def sigma(q):
    """Involution negating monomials of odd Kazhdan degree."""
    out = {}
    for k, c in q.terms.items():
        out[k] = -c if q.kazhdan_degree_key(k) % 2 else c
    return WhittakerElement(q.setup, out)


def env_from_zvector(setup, vec, sink_coeff=1):
    """A g(-1) vector as a z-letter combination (degree-1 EnvElement)."""
    coords = setup.to_letters(vec)
    bad = [i for i in coords if setup.letter_grade[i] != -1]
    if bad:
        raise InputError("vector is not in g(-1)")
    return EnvElement(setup, {(i,): Fraction(sink_coeff) * c
                              for i, c in coords.items()})
