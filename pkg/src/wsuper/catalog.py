"""Catalog of (algebra, minimal nilpotent) pairs used by the suite and CLI.

Each entry builds the algebra and a highest-root-style nilpotent for the
designated simple component of the even part.  Minimality is never
trusted: build_minimal_setup re-verifies dim g(2) = 1 on every load.  When
the odd pairing has a self-dual middle vector whose self-pairing is not 1,
the nilpotent is rescaled once by the exact reciprocal and rebuilt.
"""

from fractions import Fraction

from .algebra import (_gl_index, build_gl, build_psl22, build_sl,
                      osp_realization, subalgebra)
from .errors import DegeneracyError, InputError
from .grading import build_minimal_setup
from .linalg import solve_in_span, vec_scale

CATALOG_NAMES = ("sl(2|1)", "osp(1|2)", "psl22", "osp(3|2)")


def _unit_by_name(alg, name):
    for i, bname in enumerate(alg.basis_names):
        if bname == name:
            return alg.basis_vector(i)
    raise InputError("no basis vector %s in %s" % (name, alg.name))


def _osp_with_e(m, n):
    """(osp(m|n), e) with e the raising element of the sp block."""
    gl, vectors = osp_realization(m, n)
    names = ["M%d" % i for i in range(len(vectors))]
    alg = subalgebra(gl, vectors, "osp(%d|%d)" % (m, n), names)
    target = gl.basis_vector(_gl_index(m, n, m, m + 1))
    coords = solve_in_span(vectors, target)
    if coords is None:
        raise InputError("sp raising element not found in osp(%d|%d)" % (m, n))
    return alg, tuple(coords)


def build_catalog_algebra(name):
    """(algebra, e) for a catalog key; e not yet middle-rescaled."""
    if name == "sl(2|1)":
        alg = build_sl(2, 1)
        return alg, _unit_by_name(alg, "E[0,1]")
    if name == "psl22":
        alg = build_psl22()
        return alg, _unit_by_name(alg, "E[0,1]")
    if name == "osp(1|2)":
        return _osp_with_e(1, 2)
    if name == "osp(3|2)":
        return _osp_with_e(3, 2)
    raise InputError("unknown catalog entry %r" % (name,))


def _setup_with_middle_rescale(alg, e):
    try:
        return build_minimal_setup(alg, e)
    except DegeneracyError as exc:
        msg = str(exc)
        if "self-pairing" not in msg:
            raise
        q = Fraction(msg.split("self-pairing ")[1].split(" ")[0])
        return build_minimal_setup(alg, vec_scale(Fraction(1) / q, e))


def minimal_setup(name):
    """Build a catalog algebra and its verified minimal setup."""
    alg, e = build_catalog_algebra(name)
    return _setup_with_middle_rescale(alg, e)


def family_algebra(family, m=None, n=None):
    """(algebra, default minimal nilpotent) for a family selection."""
    if family == "psl22":
        return build_catalog_algebra("psl22")
    if family == "sl":
        alg = build_sl(m, n)
        return alg, _unit_by_name(alg, "E[0,1]")
    if family == "gl":
        alg = build_gl(m, n)
        return alg, _unit_by_name(alg, "E[0,1]")
    if family == "osp":
        return _osp_with_e(m, n)
    raise InputError("unknown family %r" % (family,))


def family_setup(family, m=None, n=None, e=None):
    """Setup for a CLI family selection; e defaults to the catalog choice."""
    alg, e0 = family_algebra(family, m, n)
    if e is not None:
        return build_minimal_setup(alg, e)
    return _setup_with_middle_rescale(alg, e0)
