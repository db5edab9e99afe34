"""The reduction engine.

Given a nonzero length-homogeneous element F of the symmetric algebra of
the twisted loop algebra, the engine produces, inside the subrepresentation
generated by F under the positive current algebra, an element whose leading
standard monomial is any requested target (with t-powers beyond an
explicitly computed threshold).  Every step is a Poisson bracket with an
explicit positive-t-power element, recorded in a trace that can be
replayed -- in particular inside the enveloping algebra at any level.
"""

from . import pbw_monomials as pbw
from .loop_affine import D, AlgebraSpec


class ThresholdError(ValueError):
    def __init__(self, threshold, cls):
        self.threshold = threshold
        self.cls = cls
        super().__init__(
            "target t-powers must start strictly above %d" % threshold)


class ReductionTrace:
    """A replayable certificate: a list of bracket steps applied to the
    original generator.  Each step is a weight-homogeneous acting element
    written as [(basis index, coeff), ...] at a common t-power."""

    def __init__(self):
        self.steps = []

    def bracket(self, lines, exponent):
        self.steps.append(("bracket", tuple(lines), exponent))

    def multiply(self, letter):
        self.steps.append(("multiply", letter))

    def extend(self, other):
        self.steps.extend(other.steps)

    def acting_element(self, spec, step):
        _, lines, e = step
        return {((k, e),): c for k, c in lines}

    def replay(self, spec, start, commutator=False):
        """Apply the recorded steps to `start`; with commutator=True the
        steps run in the enveloping algebra of `spec` instead of the
        symmetric one."""
        x = start
        for step in self.steps:
            if step[0] == "multiply":
                letter = {(step[1],): spec.scalar(1)}
                x = (pbw.u_product if commutator else pbw.s_product)(
                    spec, letter, x)
            elif commutator:
                act = self.acting_element(spec, step)
                x = pbw.u_commutator(spec, act, x)
            else:
                _, lines, e = step
                x = pbw.ad_lines(spec, lines, e, x)
        return x


def min_exponent(elem):
    return min(L[1] for m in elem for L in m if L != D)


def _span_bound(elem):
    worst = 0
    for m in elem:
        worst = max(worst, sum(abs(L[1]) for L in m if L != D))
    return worst


def separating_exponent(spec, s, elem):
    """A positive t-power congruent to s that is large enough to keep the
    images of distinct letters distinct."""
    bound = 2 * _span_bound(elem) + 1
    q = s % spec.r
    if q < 1:
        q = spec.r
    while q <= bound:
        q += spec.r
    return q


def kill_positive_action(spec, F, sign="+", trace=None):
    """Bracket with one side of the root lines until that side acts by
    zero; the result is supported on the corresponding highest-root
    letters alone."""
    basis = spec.basis
    acting = basis.root_vectors(positive=(sign == "+"))
    if trace is None:
        trace = ReductionTrace()
    m = max(len(mo) for mo in F)
    limit = 2 * m * basis.theta_height + 4
    one = spec.scalar(1)
    rounds = 0
    while True:
        # among the lines that still act nonzero, take the one producing
        # the fewest monomials -- it keeps the rest of the pipeline small
        best = None
        for c in acting:
            q = separating_exponent(spec, c.s, F)
            G = pbw.ad_lines(spec, ((c.index, one),), q, F)
            if G and (best is None or len(G) < len(best[0])):
                best = (G, c, q)
        if best is None:
            break
        F, c, q = best
        trace.bracket([(c.index, one)], q)
        rounds += 1
        if rounds > limit:
            raise RuntimeError("highest-root reduction did not settle")
    want = (basis.theta_plus if sign == "+" else basis.theta_minus).index
    for mo in F:
        assert all(L[0] == want for L in mo), "support escaped the extreme line"
    return F, trace


def realize_congruence_class(spec, H, cls, trace=None):
    """From H supported on lowest-root letters, build G whose leading
    monomial under the right-to-left order runs through the lines cls[0],
    ..., cls[m-1] at strictly increasing t-powers, by an induction over
    positions.  Returns (G, exponents, trace)."""
    basis = spec.basis
    r = basis.r
    d = basis.theta_height
    tp, tm = basis.theta_plus, basis.theta_minus
    s_t = tp.s
    m = max(len(mo) for mo in H)
    if trace is None:
        trace = ReductionTrace()
    one = spec.scalar(1)

    def act(bv, e, x, times=1):
        for _ in range(times):
            x = pbw.ad_lines(spec, ((bv.index, one),), e, x)
            trace.bracket([(bv.index, one)], e)
            assert x, "bracket unexpectedly vanished during the induction"
        return x

    lead, _ = pbw.leading(spec, H, reverse=True)
    assert all(L[0] == tm.index for L in lead)
    j = [L[1] for L in lead]

    G = H
    k = list(j)
    for i in range(1, m + 1):
        G = act(tp, i * r * d + s_t, G, 2)
        k[i - 1] += 2 * (i * r * d + s_t)
    cur = [tp] * m

    def check(G):
        lead, c = pbw.leading(spec, G, reverse=True)
        want = tuple((cur[i].index, k[i]) for i in range(m))
        assert lead == want, "leading monomial drifted: %r vs %r" % (lead, want)
        assert all(k[i] < k[i + 1] for i in range(m - 1))

    check(G)

    e_minus = r - s_t          # congruent to the weight of the lowest line
    e_plus = r + s_t
    for n in range(m):
        T = cls[n]
        if not T.positive:
            G = act(tm, e_minus, G, 2 * (m - n))
            G = act(tp, e_plus, G, 2 * (m - n - 1))
            S = 0
            for cch in reversed(basis.chain_from_theta(T)):
                e = cch.s if cch.s >= 1 else r
                G = act(cch, e, G)
                S += e
            k[n] += 2 * e_minus + S
            for i in range(n + 1, m):
                k[i] += 2 * e_minus + 2 * e_plus
        else:
            G = act(tm, e_minus, G, 2 * (m - n - 1))
            S = 0
            for cch in reversed(basis.chain_from_theta(T)):
                e = r + cch.s
                G = act(cch, e, G)
                S += e
            k[n] += S
            G = act(tp, e_plus, G, 2 * (m - n - 1))
            for i in range(n + 1, m):
                k[i] += 2 * e_minus + 2 * e_plus
        cur[n] = T
        check(G)
    return G, k, trace


def lift_leading_term(spec, G, a, cls, M, partners, trace=None):
    """Bracket G with the partner lines at matched t-powers so that the
    leading standard monomial becomes exactly M."""
    basis = spec.basis
    m = len(a)
    if trace is None:
        trace = ReductionTrace()
    i_exp = [L[1] for L in M]
    H = G
    for jj in range(m, 0, -1):
        _, gsec_elem, gsec_s, _ = partners[jj - 1]
        e = i_exp[m - jj] - a[jj - 1]
        assert e >= 1, "target t-power below the threshold"
        assert e % basis.r == gsec_s % basis.r
        lines = tuple((bv.index, c) for bv, c in basis.decompose(gsec_elem, gsec_s))
        H = pbw.ad_lines(spec, lines, e, H)
        trace.bracket(lines, e)
        assert H, "partner bracket vanished"
    lead, c = pbw.leading(spec, H)
    assert lead == M, "leading term is %r, wanted %r" % (lead, M)
    return H, trace


def reduction_plan(spec, F, M_letters):
    """Everything construct_H_M needs short of the final lift: the
    congruence-class element G, its exponents, and the t-power threshold
    for targets over the lines M_letters (a tuple of basis vectors,
    in monomial position order)."""
    m = len(M_letters)
    partners = [spec.basis.sl2_partner(M_letters[m - 1 - jj]) for jj in range(m)]
    cls = [p[0] for p in partners]
    trace = ReductionTrace()
    H, trace = kill_positive_action(spec, F, "-", trace)
    G, a, trace = realize_congruence_class(spec, H, cls, trace)
    threshold = max(0, 2 * a[-1] - min_exponent(G))
    return {"G": G, "a": a, "cls": cls, "partners": partners,
            "trace": trace, "threshold": threshold}


def construct_H_M(spec, F, M, plan=None):
    """Full pipeline: an element of the subrepresentation generated by F
    whose leading standard monomial is exactly M, with its trace."""
    letters = [spec.basis.elements[L[0]] for L in M]
    assert all(b.kind == "root" for b in letters), "targets run over root lines"
    if plan is None:
        plan = reduction_plan(spec, F, tuple(letters))
    if M[0][1] <= plan["threshold"]:
        raise ThresholdError(plan["threshold"], plan["cls"])
    trace = ReductionTrace()
    trace.extend(plan["trace"])
    H, trace = lift_leading_term(spec, plan["G"], plan["a"], plan["cls"], M,
                                 plan["partners"], trace)
    return H, trace


def uniform_threshold(spec, F, m):
    """The maximum threshold over every length-m tuple of root lines; only
    sensible for small m."""
    if m > 2:
        raise ValueError("the uniform threshold is only computed for m <= 2")
    roots = spec.basis.root_vectors()
    from itertools import product
    worst = 0
    seen = {}
    for tup in product(roots, repeat=m):
        key = tuple(spec.basis.sl2_partner(b)[0].index for b in reversed(tup))
        if key in seen:
            worst = max(worst, seen[key])
            continue
        plan = reduction_plan(spec, F, tup)
        seen[key] = plan["threshold"]
        worst = max(worst, plan["threshold"])
    return worst


def project_to_derived(spec, F, trace=None):
    """Bracket a d-bearing element of the full affine symmetric algebra
    with highest-root letters until the next such bracket vanishes; the
    last nonzero stage carries no degree letter."""
    basis = spec.basis
    tp = basis.theta_plus
    if trace is None:
        trace = ReductionTrace()
    one = spec.scalar(1)
    d_deg = max((sum(1 for L in mo if L == D) for mo in F), default=0)
    letters = max((len(mo) for mo in F), default=0)
    limit = d_deg + letters * basis.theta_height + 4
    steps = 0
    while True:
        q = separating_exponent(spec, tp.s, F)
        G = pbw.ad_lines(spec, ((tp.index, one),), q, F)
        if not G:
            G2 = pbw.ad_lines(spec, ((tp.index, one),), q + spec.r, F)
            assert not G2, "vanishing was not uniform across t-powers"
            break
        F = G
        trace.bracket([(tp.index, one)], q)
        steps += 1
        if steps > limit:
            raise RuntimeError("derived projection did not settle")
    assert F, "projection lost the element"
    assert all(L != D for mo in F for L in mo), "degree letter survived"
    return F, trace


def lift_to_U(spec_u, H, trace):
    """Replay a symmetric-side trace as enveloping-algebra commutators."""
    return trace.replay(spec_u, H, commutator=True)
