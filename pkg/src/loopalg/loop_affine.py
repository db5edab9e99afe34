"""Letters of the (twisted) loop and affine algebras.

A letter is a pair (k, n): basis vector number k of the equivariant basis
at t-power n, where n must be congruent to the sigma-weight of the vector
mod r.  The degree letter is the special tuple D.  Letter brackets carry
the central cocycle when the flavor asks for it, with the central element
specialized to the level.
"""

from .scalars import Scalar
from .twisted_grading import TwistedBasis

D = ("d",)

FLAVORS = ("loop", "current", "poscurrent", "affine", "derived")


class AlgebraSpec:
    """A twisted basis plus a choice of letter alphabet and bracket flavor."""

    def __init__(self, basis, flavor="loop", level=0):
        if isinstance(basis, str):
            basis = TwistedBasis.from_label(basis)
        if flavor not in FLAVORS:
            raise ValueError("unknown flavor %r" % flavor)
        self.basis = basis
        self.flavor = flavor
        self.r = basis.r
        self.level = basis.scalar(level)

    @property
    def allow_d(self):
        return self.flavor == "affine"

    @property
    def has_cocycle(self):
        return self.flavor in ("affine", "derived")

    def scalar(self, x):
        return Scalar.of(x, self.r)

    def letter(self, k, n):
        b = self.basis.elements[k]
        if n % self.r != b.s:
            raise ValueError("t-power %d not congruent to weight %d mod %d"
                             % (n, b.s, self.r))
        self.check_exponent(n)
        return (k, n)

    def check_exponent(self, n):
        if self.flavor == "current" and n < 0:
            raise ValueError("current-algebra letters need t-power >= 0")
        if self.flavor == "poscurrent" and n < 1:
            raise ValueError("positive-current letters need t-power >= 1")

    def letter_ok(self, L):
        if L == D:
            return self.allow_d
        k, n = L
        b = self.basis.elements[k]
        if n % self.r != b.s:
            return False
        if self.flavor == "current":
            return n >= 0
        if self.flavor == "poscurrent":
            return n >= 1
        return True

    def letter_key(self, L):
        """Sort key: t-power first, the degree letter between -1 and 0."""
        if L == D:
            return (-1, 0)
        k, n = L
        return (2 * n, k)

    def letter_md(self, L):
        if L == D:
            return 1
        return abs(L[1]) + 1

    def format_letter(self, L):
        if L == D:
            return "d"
        return "b%d@t^%d" % (L[0] + 1, L[1])


def letter_bracket(spec, L1, L2, grmd=False):
    """[L1, L2] as a dict mapping length <= 1 monomials to scalars.

    With grmd=True the bracket of the md-associated-graded structure is
    used instead: no cocycle, and letters of opposite t-power sign
    commute."""
    if L1 == D and L2 == D:
        return {}
    if L1 == D or L2 == D:
        L = L2 if L1 == D else L1
        n = L[1]
        if n == 0:
            return {}
        c = spec.scalar(n if L1 == D else -n)
        return {(L,): c}
    k1, n1 = L1
    k2, n2 = L2
    if grmd and ((n1 > 0 > n2) or (n2 > 0 > n1)):
        return {}
    out = {}
    for k, c in spec.basis.line_bracket(k1, k2):
        out[((k, n1 + n2),)] = c
    if spec.has_cocycle and not grmd and n1 + n2 == 0:
        kap = spec.basis.line_killing(k1, k2)
        if not kap.is_zero():
            c = kap * spec.level * n1
            if not c.is_zero():
                prev = out.get(())
                c = c if prev is None else prev + c
                if c.is_zero():
                    out.pop((), None)
                else:
                    out[()] = c
    return out


def subalgebra_sl2hat(spec, i):
    """The affine sl2 through Chevalley pair number i of the twisted affine
    algebra: generators, their sl2 data, and the scalar multiplying the
    canonical central element.

    i = 0 is the extending node (lowest-weight line at t^1); i >= 1 walks
    the sigma-orbits of simple roots in rep order."""
    basis = spec.basis
    r = basis.r
    cartan0 = basis.cartan0
    # negative simple generators of the fixed subalgebra: the 0-component
    # root vectors built from orbits of simple roots
    simple_orbits = []
    for b in basis.elements:
        if b.kind == "root" and b.s == 0 and b.positive:
            if all(basis.rs.height(root) == 1 for root in b.orbit):
                simple_orbits.append(b)
    simple_orbits.sort(key=lambda b: min(basis.rs.index_of[root] for root in b.orbit))
    lowering = []
    for b in basis.elements:
        if b.kind == "root" and b.s == 0 and not b.positive:
            if all(basis.rs.height(root) == -1 for root in b.orbit):
                lowering.append(b)

    if i >= 1:
        if i > len(simple_orbits):
            raise ValueError("index %d out of range" % i)
        e = simple_orbits[i - 1]
        negs = {tuple(-x for x in root) for root in e.orbit}
        (f,) = [b for b in lowering if set(b.orbit) == negs]
        k = 0
    elif i == 0:
        s0 = 1 % r
        cands = [b for b in basis.component(s0) if b.kind == "root"]
        lows = [b for b in cands
                if all(basis.bracket(fj.elem, b.elem).is_zero() for fj in lowering)]
        if len(lows) != 1:
            raise RuntimeError("lowest-weight line is not unique")
        e = lows[0]
        f = None
        for b in basis.component((-1) % r):
            if b.kind != "root":
                continue
            h = basis.bracket(e.elem, b.elem)
            if h.is_zero() or any(not basis.rs.is_cartan(kk) for kk in h.coeffs):
                continue
            c = basis.bracket(h, e.elem).proportional_to(e.elem)
            if c is not None and not c.is_zero():
                f = b
                break
        if f is None:
            raise RuntimeError("no opposite line for the extending node")
        k = 1
    else:
        raise ValueError("index must be >= 0")

    kappa = basis.killing(e.elem, f.elem)
    # align the scaling of the opposite line so that the pairing equals
    # (orbit size) * (pairing of one underlying Chevalley pair)
    rep = min(e.orbit)
    k0 = basis.rs.killing(basis.rs.index_of[rep],
                          basis.rs.index_of[tuple(-x for x in rep)])
    expected = spec.scalar(len(e.orbit) * k0)
    f_scale = expected / kappa
    f_elem = f.elem.scale(f_scale)
    h = basis.bracket(e.elem, f_elem)
    return {
        "e": e, "f": f, "f_scale": f_scale, "f_elem": f_elem,
        "h": h, "k": k,
        "kappa": expected,
        "orbit_size": len(e.orbit),
        "chevalley_kappa": spec.scalar(k0),
        # ratio against the untwisted sl2 normalization kappa(e,f) = 4
        "central_scale": expected / spec.scalar(4),
    }


def verify_sl2hat(spec, data, span=2):
    """Check the bracket closure of the three t-power families of an
    affine sl2 subalgebra over a window of exponents.  Returns a list of
    (description, ok) pairs."""
    from . import pbw_monomials as pbw
    basis = spec.basis
    r, k = basis.r, data["k"]
    e, f, h = data["e"], data["f"], data["h"]
    hdec = basis.decompose(h, 0)
    results = []
    for n in range(-span, span + 1):
        for m in range(-span, span + 1):
            le = (e.index, k + r * n)
            lf = (f.index, -k + r * m)
            got = {mo: c * data["f_scale"]
                   for mo, c in letter_bracket(spec, le, lf).items()}
            want = {}
            for bv, c in hdec:
                if not c.is_zero():
                    want[((bv.index, r * (n + m)),)] = c
            if spec.has_cocycle and n + m == 0:
                c0 = data["kappa"] * spec.level * (k + r * n)
                if not c0.is_zero():
                    want[()] = c0
            ok = pbw.elem_eq(got, want)
            results.append(("[e t^%d, f t^%d]" % (k + r * n, -k + r * m), ok))
            # h-family on e and f stays inside the families
            for bv, c in hdec:
                lh = (bv.index, r * n)
                ge = letter_bracket(spec, lh, le)
                ok_e = all(len(mo) == 1 and mo[0][0] == e.index for mo in ge)
                gf = letter_bracket(spec, lh, lf)
                ok_f = all(len(mo) == 1 and mo[0][0] == f.index for mo in gf)
                results.append(("[h t^%d, ...]" % (r * n), ok_e and ok_f))
    return results
