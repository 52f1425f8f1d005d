"""Minimal nilpotent setup: sl2-triple, short grading, paired bases of g(-1),
centralizer data, chi, the projection onto the centralizer of the triple, and
Kac-Weisfeiler dimension data.

The setup also fixes the global PBW letter order used by the enveloping
layer: g(0), g(1), then e, then the paired g(-1) basis, then f last.  With
that order the quotient by the left ideal (f - 1) is a suffix operation on
normal monomials.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneracyError, InputError, NotMinimalError
from .linalg import (ONE, ZERO, inverse, is_zero_vec, nullspace, solve,
                     vec_add, vec_scale)


@dataclass(frozen=True)
class SL2Triple:
    e: tuple
    h: tuple
    f: tuple


def _ad_matrix(alg, x):
    """Matrix of ad x in the algebra basis (columns are [x, basis_j])."""
    cols = [alg.bracket(x, alg.basis_vector(j)) for j in range(alg.dim)]
    return [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)]


def _mat_mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO)
             for j in range(n)] for i in range(n)]


def _restricted_kernel(alg, mat, shift, indices):
    """Kernel of (mat - shift*I) on the span of the given basis indices,
    returned as full-length homogeneous vectors."""
    rows = []
    for i in range(alg.dim):
        row = [mat[i][j] - (shift if i == j else ZERO) for j in indices]
        rows.append(row)
    out = []
    for small in nullspace(rows, len(indices)):
        v = [ZERO] * alg.dim
        for pos, j in enumerate(indices):
            v[j] = small[pos]
        out.append(tuple(v))
    return out


def find_sl2_triple(alg, e):
    """Complete a nilpotent e to (e, h, f) with exact arithmetic.

    h is taken as [e, y] for the least-index-pivot solution of
    (ad e)^2 y = -2e; any such h extends to a triple, and f is then the
    unique deterministic solution of [e,f] = h, [h,f] = -2f.
    """
    if is_zero_vec(e):
        raise InputError("e must be nonzero")
    if alg.parity_of(e) != 0:
        raise InputError("e must be even and parity-homogeneous")
    ad_e = _ad_matrix(alg, e)
    ad_e2 = _mat_mul(ad_e, ad_e)
    y = solve(ad_e2, vec_scale(-2, e))
    if y is None:
        raise NotMinimalError("e is not sl2-embeddable: (ad e)^2 y = -2e has no solution")
    h = alg.bracket(e, y)
    ad_h = _ad_matrix(alg, h)
    rows = []
    rhs = []
    for i in range(alg.dim):
        rows.append(list(ad_e[i]))
        rhs.append(h[i])
    for i in range(alg.dim):
        row = list(ad_h[i])
        row[i] += 2
        rows.append(row)
        rhs.append(ZERO)
    f = solve(rows, rhs)
    if f is None:
        raise NotMinimalError("no f with [e,f]=h and [h,f]=-2f")
    triple = SL2Triple(e=tuple(e), h=tuple(h), f=tuple(f))
    _assert_triple(alg, triple)
    return triple


def _assert_triple(alg, t):
    if alg.bracket(t.e, t.f) != t.h:
        raise NotMinimalError("triple identity [e,f]=h failed")
    if alg.bracket(t.h, t.e) != vec_scale(2, t.e):
        raise NotMinimalError("triple identity [h,e]=2e failed")
    if alg.bracket(t.h, t.f) != vec_scale(-2, t.f):
        raise NotMinimalError("triple identity [h,f]=-2f failed")


class MinimalSetup:
    """Everything derived from (g, e) for a minimal nilpotent e.

    Immutable after construction; all methods are pure.
    """

    def __init__(self, alg, triple, grading, zbasis, zdual, cent,
                 dual_a, dual_b, letters, letter_parity, letter_grade,
                 letter_names):
        self.alg = alg                    # form already normalized: (e,f)=1
        self.triple = triple
        self.grading = grading            # dict i -> list of vectors
        self.zbasis = list(zbasis)        # z_1..z_{s+r}, even block first
        self.zdual = list(zdual)          # z*_alpha, signed permutation of zbasis
        self.cent = cent                  # dict i -> basis of g^e(i), i=0,1,2
        self.dual_a = list(dual_a)        # dual bases of g^e(0): (a_i, b_j) = delta
        self.dual_b = list(dual_b)
        self.letters = list(letters)
        self.letter_parity = tuple(letter_parity)
        self.letter_grade = tuple(letter_grade)
        self.letter_names = tuple(letter_names)
        self.dim = alg.dim
        self.sdim = len([v for v in zbasis if alg.parity_of(v) == 0])
        self.rdim = len(zbasis) - self.sdim
        # letter layout bookkeeping
        self.n_p = sum(1 for g in letter_grade if g >= 0)
        self.idx_e = self.n_p - 1
        self.idx_f = len(letters) - 1
        self.z_start = self.n_p
        self._to_letter_matrix = inverse(
            [[letters[j][i] for j in range(len(letters))] for i in range(alg.dim)])
        if self._to_letter_matrix is None:
            raise DegeneracyError("letter system is not a basis")
        self._lbracket_cache = {}
        self._chi = tuple(alg.form_value(triple.e, alg.basis_vector(i))
                          for i in range(alg.dim))

    # -- linear functionals and maps ------------------------------------

    def chi(self, x):
        """chi(x) = (e, x)."""
        return sum((c * self._chi[i] for i, c in enumerate(x) if c != 0), ZERO)

    def form(self, x, y):
        return self.alg.form_value(x, y)

    def pairing(self, x, y):
        """<x,y> = (e, [x,y]), the symplectic/symmetric pairing on g(-1)."""
        return self.chi(self.alg.bracket(x, y))

    def sharp(self, x):
        """Project g(0) onto g^e(0): x - (h,x)/2 * h."""
        if not self.in_grade(x, 0):
            raise InputError("sharp expects a vector in g(0)")
        c = self.form(self.triple.h, x) / 2
        return vec_sub_scaled(x, c, self.triple.h)

    def in_grade(self, x, i):
        hx = self.alg.bracket(self.triple.h, x)
        return hx == vec_scale(i, x)

    def in_centralizer(self, x):
        return is_zero_vec(self.alg.bracket(self.triple.e, x))

    # -- letters ---------------------------------------------------------

    def to_letters(self, vec):
        """Coordinates of an algebra vector in the letter basis."""
        coords = [sum((self._to_letter_matrix[i][j] * vec[j]
                       for j in range(self.dim) if vec[j] != 0), ZERO)
                  for i in range(self.dim)]
        return {i: c for i, c in enumerate(coords) if c != 0}

    def letter_bracket(self, i, j):
        """[letter_i, letter_j] expanded in letters; cached."""
        key = (i, j)
        hit = self._lbracket_cache.get(key)
        if hit is None:
            w = self.alg.bracket(self.letters[i], self.letters[j])
            hit = tuple(sorted(self.to_letters(w).items()))
            self._lbracket_cache[key] = hit
        return hit

    def chi_letter(self, i):
        return self.chi(self.letters[i])

    def z_letter(self, alpha):
        """Letter index of z_alpha (alpha is 0-based here)."""
        return self.z_start + alpha

    def zdual_letters(self, alpha):
        """z*_alpha as letter coordinates (a single signed letter)."""
        return tuple(sorted(self.to_letters(self.zdual[alpha]).items()))

    def summary(self):
        d0, d1, e0, e1 = kw_numbers(self)
        return {
            "algebra": self.alg.name,
            "dim": self.dim,
            "grading_dims": {str(i): len(self.grading[i]) for i in sorted(self.grading)},
            "s": self.sdim,
            "r": self.rdim,
            "d0": d0,
            "d1": d1,
            "bound_exponents": {"p": str(Fraction(d0, 2)), "two": e1},
        }


def vec_sub_scaled(x, c, y):
    return tuple(a - c * b for a, b in zip(x, y))


def _paired_even_basis(setup_pairing, vectors):
    """Darboux pairs for the alternating pairing on g(-1)_even.

    Returns u_1..u_s with <u_i, u_j> = i* delta_{i+j,s+1}, i* = -1 for
    i <= s/2 and +1 above.  Pivot: lowest remaining index first.
    """
    rem = list(vectors)
    left, right = [], []
    while rem:
        a = rem.pop(0)
        jb = None
        for j, cand in enumerate(rem):
            if setup_pairing(a, cand) != 0:
                jb = j
                break
        if jb is None:
            raise DegeneracyError("even pairing on g(-1) is degenerate")
        b = rem.pop(jb)
        b = vec_scale(Fraction(-1) / setup_pairing(a, b), b)   # <a,b> = -1
        reduced = []
        for x in rem:
            x = vec_add(x, vec_scale(setup_pairing(x, b), a))
            x = vec_sub_scaled(x, setup_pairing(x, a), b)
            reduced.append(x)
        rem = reduced
        left.append(a)
        right.append(b)
    return left + list(reversed(right))


def _paired_odd_basis(setup_pairing, vectors):
    """Hyperbolic basis for the symmetric pairing on g(-1)_odd.

    v_i with <v_i, v_j> = delta_{i+j,r+1}; when r is odd the middle vector
    is self-paired and must satisfy <v,v> = 1 exactly (rescale e if not).
    """
    rem = list(vectors)
    left, right = [], []
    middle = None
    while rem:
        ia = None
        for i, cand in enumerate(rem):
            if setup_pairing(cand, cand) == 0:
                ia = i
                break
        if ia is None:
            if len(rem) == 1:
                middle = rem.pop()
                break
            raise DegeneracyError(
                "odd pairing: no isotropic pivot among %d remaining vectors"
                % len(rem))
        a = rem.pop(ia)
        jb = None
        for j, cand in enumerate(rem):
            if setup_pairing(a, cand) != 0:
                jb = j
                break
        if jb is None:
            raise DegeneracyError("odd pairing on g(-1) is degenerate")
        b = rem.pop(jb)
        b = vec_scale(ONE / setup_pairing(a, b), b)
        b = vec_sub_scaled(b, setup_pairing(b, b) / 2, a)      # make b isotropic
        reduced = []
        for x in rem:
            x = vec_sub_scaled(x, setup_pairing(x, b), a)
            x = vec_sub_scaled(x, setup_pairing(x, a), b)
            reduced.append(x)
        rem = reduced
        left.append(a)
        right.append(b)
    if middle is not None:
        q = setup_pairing(middle, middle)
        if q != 1:
            raise DegeneracyError(
                "middle g(-1) vector has self-pairing %s != 1; "
                "rescale e by 1/%s and rebuild" % (q, q))
    out = list(left)
    if middle is not None:
        out.append(middle)
    out.extend(reversed(right))
    return out


def _zdual(setup_pairing, zbasis, s, r):
    """z*_alpha as the signed permutation fixed by the pairing normal form."""
    dual = []
    for a in range(1, s + 1):
        sign = ONE if a <= s // 2 else -ONE
        dual.append(vec_scale(sign, zbasis[s - a]))            # a^nat * z_{s+1-a}
    for a in range(1, r + 1):
        dual.append(zbasis[s + r - a])                         # z_{r+1-a+s}
    for a in range(s + r):
        for b in range(s + r):
            want = ONE if a == b else ZERO
            if setup_pairing(dual[a], zbasis[b]) != want:
                raise DegeneracyError(
                    "pairing normal form failed at (%d,%d)" % (a, b))
    return dual


def build_minimal_setup(alg, e):
    """Construct the full minimal setup for a nilpotent e; verifies minimality."""
    e = tuple(Fraction(x) for x in e)
    triple = find_sl2_triple(alg, e)
    alg = normalized(alg, triple)
    triple = SL2Triple(e=triple.e, h=triple.h, f=triple.f)

    ad_h = _ad_matrix(alg, triple.h)
    even_idx = [i for i in range(alg.dim) if alg.parity[i] == 0]
    odd_idx = [i for i in range(alg.dim) if alg.parity[i] == 1]
    grading = {}
    total = 0
    for i in range(-2, 3):
        pieces = (_restricted_kernel(alg, ad_h, Fraction(i), even_idx)
                  + _restricted_kernel(alg, ad_h, Fraction(i), odd_idx))
        grading[i] = pieces
        total += len(pieces)
    if total != alg.dim:
        raise NotMinimalError(
            "ad h is not diagonalizable with eigenvalues in -2..2 "
            "(%d of %d dimensions found)" % (total, alg.dim))
    if len(grading[2]) != 1:
        raise NotMinimalError("dim g(2) = %d != 1: e is not minimal" % len(grading[2]))
    if len(grading[-2]) != 1:
        raise NotMinimalError("dim g(-2) = %d != 1" % len(grading[-2]))

    def pairing(x, y):
        return alg.form_value(triple.e, alg.bracket(x, y))

    neg1 = grading[-1]
    neg1_even = [v for v in neg1 if alg.parity_of(v) == 0]
    neg1_odd = [v for v in neg1 if alg.parity_of(v) == 1]
    s, r = len(neg1_even), len(neg1_odd)
    if s % 2 != 0:
        raise NotMinimalError("dim g(-1)_even must be even, got %d" % s)
    ubasis = _paired_even_basis(pairing, neg1_even) if s else []
    vbasis = _paired_odd_basis(pairing, neg1_odd) if r else []
    zbasis = list(ubasis) + list(vbasis)
    zdual = _zdual(pairing, zbasis, s, r) if zbasis else []

    ad_e = _ad_matrix(alg, triple.e)
    cent = {}
    for i in (0, 1, 2):
        found = []
        for par in (0, 1):
            piece = [v for v in grading[i] if alg.parity_of(v) == par]
            if not piece:
                continue
            rows = []
            for row_i in range(alg.dim):
                rows.append([sum((ad_e[row_i][k] * v[k] for k in range(alg.dim)
                                  if v[k] != 0), ZERO) for v in piece])
            for sol in nullspace(rows, len(piece)):
                w = tuple(sum((sol[t] * piece[t][k] for t in range(len(piece))), ZERO)
                          for k in range(alg.dim))
                found.append(w)
        cent[i] = found
    if len(cent[2]) != 1:
        raise NotMinimalError("g^e(2) is not one-dimensional")

    dual_a = list(cent[0])
    if dual_a:
        gram = [[alg.form_value(a, b) for b in dual_a] for a in dual_a]
        inv = inverse(gram)
        if inv is None:
            raise DegeneracyError("form degenerate on g^e(0)")
        dual_b = []
        for j in range(len(dual_a)):
            w = tuple(sum((inv[k][j] * dual_a[k][t] for k in range(len(dual_a))), ZERO)
                      for t in range(alg.dim))
            dual_b.append(w)
    else:
        dual_b = []

    letters, lpar, lgrade, lnames = [], [], [], []
    counters = {"x": 0, "y": 0}
    for i in (0, 1):
        for v in grading[i]:
            p = alg.parity_of(v)
            letters.append(v)
            lpar.append(p)
            lgrade.append(i)
            tag = "x" if p == 0 else "y"
            counters[tag] += 1
            lnames.append("%s%d" % (tag, counters[tag]))
    letters.append(triple.e)
    lpar.append(0)
    lgrade.append(2)
    lnames.append("e")
    for a, z in enumerate(zbasis):
        letters.append(z)
        lpar.append(alg.parity_of(z))
        lgrade.append(-1)
        lnames.append("z%d" % (a + 1))
    letters.append(triple.f)
    lpar.append(0)
    lgrade.append(-2)
    lnames.append("f")

    setup = MinimalSetup(alg, triple, grading, zbasis, zdual, cent,
                         dual_a, dual_b, letters, lpar, lgrade, lnames)
    _post_checks(setup)
    return setup


def normalized(alg, triple):
    from .algebra import normalized_form
    alg = normalized_form(alg, triple.e, triple.f)
    if alg.form_value(triple.h, triple.h) != 2:
        raise DegeneracyError("(h,h) != 2 after normalization")
    return alg


def _post_checks(setup):
    alg, t = setup.alg, setup.triple
    if setup.chi(t.f) != 1:
        raise DegeneracyError("chi(f) != 1")
    n = len(setup.dual_a)
    for i in range(n):
        for j in range(n):
            want = ONE if i == j else ZERO
            if alg.form_value(setup.dual_a[i], setup.dual_b[j]) != want:
                raise DegeneracyError("dual bases of g^e(0) failed at (%d,%d)" % (i, j))
    if not is_zero_vec(alg.bracket(t.e, setup.cent[2][0])):
        raise NotMinimalError("g^e(2) is not centralized by e")


def kw_numbers(setup):
    """(d0, d1, d0/2, ceil(d1/2)): centralizer codimensions and the bound
    exponents, with the ceiling convention for the power of two."""
    alg = setup.alg
    g_even = sum(1 for p in alg.parity if p == 0)
    g_odd = alg.dim - g_even
    ce = sum(len([v for v in setup.cent[i] if alg.parity_of(v) == 0]) for i in (0, 1, 2))
    co = sum(len([v for v in setup.cent[i] if alg.parity_of(v) == 1]) for i in (0, 1, 2))
    d0 = g_even - ce
    d1 = g_odd - co
    return d0, d1, Fraction(d0, 2), (d1 + 1) // 2


def kw_dimensions(setup):
    """Kac-Weisfeiler data; asserts the parity agreement of r and d1."""
    d0, d1, e_p, e_2 = kw_numbers(setup)
    if (setup.rdim - d1) % 2 != 0:
        raise DegeneracyError("parity of r and d1 disagree: r=%d d1=%d"
                              % (setup.rdim, d1))
    return {
        "d0": d0,
        "d1": d1,
        "exponent_p": e_p,
        "exponent_two": e_2,
        "parity_r": "odd" if setup.rdim % 2 else "even",
    }
