"""Finite-dimensional Lie superalgebras over exact rationals.

A SuperAlgebra is a basis with parities, sparse structure constants and an
even supersymmetric invariant bilinear form.  Built-in families: gl(m|n),
sl(m|n) with m != n, osp(m|n) with n even, and psl22 = sl(2|2)/CI on a
fixed 14-dimensional complement of the identity.  Anything else comes in
through a structure-constant table (import_table / export_table).

Supercommutator convention throughout: [x,y] = xy - (-1)^{|x||y|} yx.
"""

from fractions import Fraction

from .errors import DegeneracyError, InputError, TableError, ValidationError
from .linalg import (ONE, ZERO, is_zero_vec, nullspace, rank, solve_in_span,
                     unit_vec, vec_add, vec_scale)

EVEN, ODD = 0, 1


class SuperAlgebra:
    """Z2-graded Lie algebra given by structure constants over Q.

    brackets stores every nonzero pair: brackets[(i,j)] = {k: c_ij^k}.
    form is a dense dim x dim matrix of Fractions.  Instances are
    immutable after construction and safe to share.
    """

    def __init__(self, name, parity, brackets, form, basis_names=None):
        self.name = name
        self.parity = tuple(int(p) & 1 for p in parity)
        self.dim = len(self.parity)
        self.brackets = {k: dict(v) for k, v in brackets.items() if v}
        self.form = tuple(tuple(Fraction(x) for x in row) for row in form)
        if basis_names is None:
            basis_names = tuple("x%d" % i for i in range(self.dim))
        self.basis_names = tuple(basis_names)

    def basis_vector(self, i):
        return unit_vec(self.dim, i)

    def bracket_basis(self, i, j):
        return self.brackets.get((i, j), {})

    def bracket(self, x, y):
        """[x, y] for coefficient vectors; Koszul signs live in the constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("vector length does not match algebra dimension")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                terms = self.brackets.get((i, j))
                if terms:
                    c = xi * yj
                    for k, ck in terms.items():
                        out[k] += c * ck
        return tuple(out)

    def form_value(self, x, y):
        acc = ZERO
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.form[i]
            for j, yj in enumerate(y):
                if yj != 0:
                    acc += xi * yj * row[j]
        return acc

    def parity_of(self, x):
        """Parity of a homogeneous vector; None for 0 or mixed."""
        par = None
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            if par is None:
                par = self.parity[i]
            elif par != self.parity[i]:
                return None
        return par

    def rescaled_form(self, c):
        c = Fraction(c)
        form = [[c * v for v in row] for row in self.form]
        return SuperAlgebra(self.name, self.parity, self.brackets, form,
                            self.basis_names)

    def __repr__(self):
        ne = sum(1 for p in self.parity if p == EVEN)
        return "SuperAlgebra(%s, dim=%d=%d+%d)" % (
            self.name, self.dim, ne, self.dim - ne)


def normalized_form(alg, e, f):
    """Rescale the form so that (e, f) = 1."""
    ef = alg.form_value(e, f)
    if ef == 0:
        raise DegeneracyError("(e,f) = 0; wrong choice of e or f")
    return alg.rescaled_form(Fraction(1) / ef)


# ---------------------------------------------------------------------------
# diagnostics

class AlgebraReport:
    """Pass/fail per axiom, with the first counterexample as witness."""

    AXIOMS = ("super_antisymmetry", "parity_additivity", "jacobi",
              "form_even", "form_supersymmetric", "form_invariant",
              "form_nondegenerate")

    def __init__(self, checks):
        self.checks = checks  # list of (axiom, ok, witness-or-None)

    @property
    def ok(self):
        return all(c[1] for c in self.checks)

    def first_failure(self):
        for name, ok, witness in self.checks:
            if not ok:
                return name, witness
        return None

    def lines(self):
        out = []
        for name, ok, witness in self.checks:
            line = "%-20s %s" % (name, "pass" if ok else "FAIL")
            if witness:
                line += "  witness=%s" % (witness,)
            out.append(line)
        return out


def check_algebra(alg):
    """Verify every axiom exactly, exhaustively over basis tuples."""
    checks = []
    n = alg.dim
    par = alg.parity

    witness = None
    for (i, j), terms in sorted(alg.brackets.items()):
        rev = alg.bracket_basis(j, i)
        sign = -1 if (par[i] and par[j]) else 1
        keys = set(terms) | set(rev)
        for k in sorted(keys):
            # c_ij^k = -(-1)^{|i||j|} c_ji^k
            if terms.get(k, ZERO) != -Fraction(sign) * rev.get(k, ZERO):
                witness = (i, j, k)
                break
        if witness:
            break
    checks.append(("super_antisymmetry", witness is None, witness))

    witness = None
    for (i, j), terms in sorted(alg.brackets.items()):
        want = (par[i] + par[j]) & 1
        for k in sorted(terms):
            if terms[k] != 0 and par[k] != want:
                witness = (i, j, k)
                break
        if witness:
            break
    checks.append(("parity_additivity", witness is None, witness))

    witness = None
    basis = [alg.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (-1)^{|i||k|}[x_i,[x_j,x_k]] + cyclic with Koszul signs = 0
                s_ik = -1 if (par[i] and par[k]) else 1
                s_ji = -1 if (par[j] and par[i]) else 1
                s_kj = -1 if (par[k] and par[j]) else 1
                t1 = vec_scale(s_ik, alg.bracket(basis[i], alg.bracket(basis[j], basis[k])))
                t2 = vec_scale(s_ji, alg.bracket(basis[j], alg.bracket(basis[k], basis[i])))
                t3 = vec_scale(s_kj, alg.bracket(basis[k], alg.bracket(basis[i], basis[j])))
                if not is_zero_vec(vec_add(vec_add(t1, t2), t3)):
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    checks.append(("jacobi", witness is None, witness))

    witness = None
    for i in range(n):
        for j in range(n):
            if par[i] != par[j] and alg.form[i][j] != 0:
                witness = (i, j)
                break
        if witness:
            break
    checks.append(("form_even", witness is None, witness))

    witness = None
    for i in range(n):
        for j in range(n):
            sign = -1 if (par[i] and par[j]) else 1
            if alg.form[i][j] != Fraction(sign) * alg.form[j][i]:
                witness = (i, j)
                break
        if witness:
            break
    checks.append(("form_supersymmetric", witness is None, witness))

    witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = alg.form_value(alg.bracket(basis[i], basis[j]), basis[k])
                rhs = alg.form_value(basis[i], alg.bracket(basis[j], basis[k]))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    checks.append(("form_invariant", witness is None, witness))

    nondeg = rank([list(row) for row in alg.form]) == n
    checks.append(("form_nondegenerate", nondeg, None if nondeg else "gram rank < dim"))

    return AlgebraReport(checks)


# ---------------------------------------------------------------------------
# matrix families

def _gl_index(m, n, a, b):
    return a * (m + n) + b


def build_gl(m, n):
    """gl(m|n) on elementary matrices E[a,b]; form = supertrace."""
    if m < 0 or n < 0 or m + n == 0:
        raise InputError("gl(m|n) needs m+n >= 1")
    N = m + n
    pidx = [EVEN] * m + [ODD] * n
    parity = []
    names = []
    for a in range(N):
        for b in range(N):
            parity.append((pidx[a] + pidx[b]) & 1)
            names.append("E[%d,%d]" % (a, b))
    dim = N * N
    brackets = {}
    for a in range(N):
        for b in range(N):
            i = _gl_index(m, n, a, b)
            for c in range(N):
                for d in range(N):
                    j = _gl_index(m, n, c, d)
                    terms = {}
                    if b == c:
                        k = _gl_index(m, n, a, d)
                        terms[k] = terms.get(k, ZERO) + 1
                    sign = -1 if (parity[i] and parity[j]) else 1
                    if d == a:
                        k = _gl_index(m, n, c, b)
                        terms[k] = terms.get(k, ZERO) - Fraction(sign)
                    terms = {k: Fraction(v) for k, v in terms.items() if v != 0}
                    if terms:
                        brackets[(i, j)] = terms
    # str(E[a,b] E[c,d]) = delta_bc delta_ad (-1)^{p(a)}
    form = [[ZERO] * dim for _ in range(dim)]
    for a in range(N):
        for b in range(N):
            i = _gl_index(m, n, a, b)
            j = _gl_index(m, n, b, a)
            form[i][j] = Fraction(1 if pidx[a] == EVEN else -1)
    return SuperAlgebra("gl(%d|%d)" % (m, n), parity, brackets, form, names)


def subalgebra(amb, vectors, name, names=None):
    """Structure constants of a bracket-closed subspace of amb.

    vectors must be parity-homogeneous and linearly independent; the form
    is the restriction of the ambient form.
    """
    dim = len(vectors)
    parity = []
    for v in vectors:
        p = amb.parity_of(v)
        if p is None:
            raise ValidationError("subalgebra basis vector not parity-homogeneous")
        parity.append(p)
    brackets = {}
    for i in range(dim):
        for j in range(dim):
            w = amb.bracket(vectors[i], vectors[j])
            coords = solve_in_span(vectors, w)
            if coords is None:
                raise ValidationError(
                    "subspace not closed under bracket at pair (%d,%d)" % (i, j))
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(i, j)] = terms
    form = [[amb.form_value(vectors[i], vectors[j]) for j in range(dim)]
            for i in range(dim)]
    return SuperAlgebra(name, parity, brackets, form, names)


def _sl_vectors(m, n):
    """Basis of sl(m|n) inside gl(m|n): supertraceless diagonals first."""
    N = m + n
    gl = build_gl(m, n)
    vectors = []
    names = []
    pidx = [EVEN] * m + [ODD] * n
    for a in range(N - 1):
        # E[a,a] -+ E[a+1,a+1], sign chosen to kill the supertrace
        va = gl.basis_vector(_gl_index(m, n, a, a))
        vb = gl.basis_vector(_gl_index(m, n, a + 1, a + 1))
        if pidx[a] == pidx[a + 1]:
            vectors.append(vec_add(va, vec_scale(-1, vb)))
            names.append("D[%d]" % a)
        else:
            vectors.append(vec_add(va, vb))
            names.append("D[%d]" % a)
    for a in range(N):
        for b in range(N):
            if a != b:
                vectors.append(gl.basis_vector(_gl_index(m, n, a, b)))
                names.append("E[%d,%d]" % (a, b))
    return gl, vectors, names


def build_sl(m, n):
    """sl(m|n), m != n (at m = n the supertrace form degenerates)."""
    if m == n:
        raise InputError("sl(m|n) requires m != n; use psl22 for sl(2|2)/CI")
    if m + n < 2:
        raise InputError("sl(m|n) needs m+n >= 2")
    gl, vectors, names = _sl_vectors(m, n)
    return subalgebra(gl, vectors, "sl(%d|%d)" % (m, n), names)


def build_psl22():
    """sl(2|2)/CI on the complement spanned by h, H1 and the 12 root vectors.

    The diagonal of sl(2|2) is 3-dimensional and h + 2*H1 - H2 = I, so one
    diagonal direction is redundant in the quotient; we keep {h, H1} and
    reduce every bracket modulo CI.
    """
    gl = build_gl(2, 2)
    E = lambda a, b: gl.basis_vector(_gl_index(2, 2, a, b))
    h = vec_add(E(0, 0), vec_scale(-1, E(1, 1)))
    h1 = vec_add(E(1, 1), E(2, 2))
    ident = vec_add(vec_add(E(0, 0), E(1, 1)), vec_add(E(2, 2), E(3, 3)))
    vectors = [h, h1]
    names = ["h", "H1"]
    for a in range(4):
        for b in range(4):
            if a != b:
                vectors.append(E(a, b))
                names.append("E[%d,%d]" % (a, b))
    dim = len(vectors)
    parity = [gl.parity_of(v) for v in vectors]
    with_ident = vectors + [ident]
    brackets = {}
    for i in range(dim):
        for j in range(dim):
            w = gl.bracket(vectors[i], vectors[j])
            coords = solve_in_span(with_ident, w)
            if coords is None:
                raise ValidationError("sl(2|2) bracket left the expected span")
            terms = {k: c for k, c in enumerate(coords[:dim]) if c != 0}
            if terms:
                brackets[(i, j)] = terms
    # supertrace form descends: I is in its radical on sl(2|2)
    form = [[gl.form_value(vectors[i], vectors[j]) for j in range(dim)]
            for i in range(dim)]
    return SuperAlgebra("psl(2|2)", parity, brackets, form, names)


def _osp_form_matrix(m, n):
    """Gram matrix of the defining split form on C^(m|n): symmetric
    anti-diagonal on the even part, symplectic anti-diagonal on the odd."""
    N = m + n
    B = [[ZERO] * N for _ in range(N)]
    for i in range(m):
        B[i][m - 1 - i] = ONE
    half = n // 2
    for i in range(n):
        j = n - 1 - i
        B[m + i][m + j] = ONE if i < half else -ONE
    return B


def osp_realization(m, n):
    """(gl(m|n), list of matrices spanning osp(m|n)) for even n."""
    if n % 2 != 0:
        raise InputError("osp(m|n) requires even n")
    if m < 0 or n < 0 or m + n == 0:
        raise InputError("osp(m|n) needs m+n >= 1")
    N = m + n
    gl = build_gl(m, n)
    B = _osp_form_matrix(m, n)
    pidx = [EVEN] * m + [ODD] * n
    vectors = []
    for apar in (EVEN, ODD):
        # unknown entries of a parity-homogeneous matrix
        slots = [(a, b) for a in range(N) for b in range(N)
                 if ((pidx[a] + pidx[b]) & 1) == apar]
        rows = []
        for v in range(N):
            for w in range(N):
                row = [ZERO] * len(slots)
                for idx, (a, b) in enumerate(slots):
                    # (A^T B)_{vw} contribution: A_{av} B_{aw}? no:
                    # (A^T B)_{vw} = sum_u A_{uv} B_{uw}
                    if b == v:
                        row[idx] += B[a][w]
                    # (-1)^{|A| p(v)} (B A)_{vw} = sum_u B_{vu} A_{uw}
                    if b == w:
                        sgn = -1 if (apar and pidx[v]) else 1
                        row[idx] += Fraction(sgn) * B[v][a]
                if any(x != 0 for x in row):
                    rows.append(row)
        for sol in nullspace(rows, len(slots)):
            vecm = [ZERO] * gl.dim
            for idx, (a, b) in enumerate(slots):
                if sol[idx] != 0:
                    vecm[_gl_index(m, n, a, b)] = sol[idx]
            vectors.append(tuple(vecm))
    return gl, vectors


def build_osp(m, n):
    """osp(m|n) for even n, cut out of gl(m|n) by the split form."""
    gl, vectors = osp_realization(m, n)
    names = ["M%d" % i for i in range(len(vectors))]
    return subalgebra(gl, vectors, "osp(%d|%d)" % (m, n), names)


def build_algebra(selection):
    """Build from a family-selection record.

    selection: dict with keys family ('gl','sl','osp','psl22','imported'),
    m, n where applicable, table for imported documents.
    """
    family = selection.get("family")
    if family == "gl":
        return build_gl(int(selection["m"]), int(selection["n"]))
    if family == "sl":
        return build_sl(int(selection["m"]), int(selection["n"]))
    if family == "osp":
        return build_osp(int(selection["m"]), int(selection["n"]))
    if family == "psl22":
        return build_psl22()
    if family == "imported":
        return import_table(selection["table"])
    raise InputError("unknown family %r" % (family,))


# ---------------------------------------------------------------------------
# structure-constant documents

def _frac_to_doc(x):
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _frac_from_doc(obj, where):
    if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
        raise TableError("%s: expected {num, den}" % where)
    try:
        num = int(str(obj["num"]), 10)
        den = int(str(obj["den"]), 10)
    except ValueError:
        raise TableError("%s: num/den must be decimal integer strings" % where)
    if den <= 0:
        raise TableError("%s: denominator must be positive" % where)
    return Fraction(num, den)


def export_table(alg):
    """Lossless JSON-able document; omitted entries are zero."""
    doc = {
        "name": alg.name,
        "dim": alg.dim,
        "parity": list(alg.parity),
        "brackets": [],
        "form": [],
    }
    for (i, j) in sorted(alg.brackets):
        terms = alg.brackets[(i, j)]
        doc["brackets"].append({
            "i": i, "j": j,
            "terms": [dict(k=k, **_frac_to_doc(terms[k])) for k in sorted(terms)],
        })
    for i in range(alg.dim):
        for j in range(alg.dim):
            if alg.form[i][j] != 0:
                doc["form"].append(dict(i=i, j=j, **_frac_to_doc(alg.form[i][j])))
    return doc


def import_table(doc):
    """Parse and fully validate a structure-constant document."""
    for key in ("name", "dim", "parity", "brackets", "form"):
        if key not in doc:
            raise TableError("missing key %r" % key)
    dim = doc["dim"]
    if not isinstance(dim, int) or dim <= 0:
        raise TableError("dim: expected positive integer")
    parity = doc["parity"]
    if len(parity) != dim or any(p not in (0, 1) for p in parity):
        raise TableError("parity: expected list of %d entries in {0,1}" % dim)
    brackets = {}
    for pos, ent in enumerate(doc["brackets"]):
        where = "brackets[%d]" % pos
        try:
            i, j = int(ent["i"]), int(ent["j"])
        except (KeyError, ValueError):
            raise TableError("%s: expected integer i, j" % where)
        if not (0 <= i < dim and 0 <= j < dim):
            raise TableError("%s: index out of range" % where)
        terms = {}
        for tpos, t in enumerate(ent.get("terms", ())):
            k = t.get("k")
            if not isinstance(k, int) or not 0 <= k < dim:
                raise TableError("%s.terms[%d]: bad k" % (where, tpos))
            val = _frac_from_doc(t, "%s.terms[%d]" % (where, tpos))
            if val != 0:
                terms[k] = val
        if terms:
            brackets[(i, j)] = terms
    form = [[ZERO] * dim for _ in range(dim)]
    for pos, ent in enumerate(doc["form"]):
        where = "form[%d]" % pos
        try:
            i, j = int(ent["i"]), int(ent["j"])
        except (KeyError, ValueError):
            raise TableError("%s: expected integer i, j" % where)
        if not (0 <= i < dim and 0 <= j < dim):
            raise TableError("%s: index out of range" % where)
        form[i][j] = _frac_from_doc(ent, where)
    if all(all(x == 0 for x in row) for row in form):
        raise TableError("form: missing or identically zero")
    alg = SuperAlgebra(str(doc["name"]), parity, brackets, form)
    report = check_algebra(alg)
    if not report.ok:
        name, witness = report.first_failure()
        raise ValidationError("imported table violates %s at %s" % (name, witness))
    return alg
