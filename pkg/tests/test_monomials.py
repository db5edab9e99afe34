import random

import pytest

from loopalg import pbw_monomials as pbw
from loopalg.loop_affine import D, AlgebraSpec, letter_bracket


def rand_letter(spec, rng, span=3, allow_d=False):
    if allow_d and spec.allow_d and rng.random() < 0.15:
        return D
    while True:
        b = rng.choice(spec.basis.elements)
        n = rng.randrange(-span, span + 1)
        n = n - (n - b.s) % spec.r
        if spec.letter_ok((b.index, n)):
            return (b.index, n)


def rand_word(spec, rng, maxlen=4, **kw):
    return tuple(rand_letter(spec, rng, **kw)
                 for _ in range(rng.randrange(1, maxlen + 1)))


def rand_elem(spec, rng, terms=2, **kw):
    out = {}
    for _ in range(terms):
        pbw.add_into(out, pbw.mono_sorted(spec, rand_word(spec, rng, **kw)),
                     spec.scalar(rng.randrange(1, 5)))
    return out


def test_mono_sorted_and_standard(tb_cache):
    spec = AlgebraSpec(tb_cache("A1:r1"), flavor="affine")
    e, h, f = 2, 1, 0
    word = ((e, 3), D, (f, -1), (h, 0))
    m = pbw.mono_sorted(spec, word)
    assert pbw.is_standard(spec, m)
    assert m == ((f, -1), D, (h, 0), (e, 3))
    assert pbw.mono_len(m) == 4
    assert pbw.mono_deg(m) == 2
    assert pbw.mono_md(m) == 2 + 1 + 1 + 4


def test_orders_disagree_where_expected(tb_cache):
    spec = AlgebraSpec(tb_cache("A1:r1"))
    a = ((0, -2), (2, 5))
    b = ((0, -1), (2, 4))
    # same length and degree; standard order compares left-to-right,
    # reverse order right-to-left
    assert pbw.key_standard(spec, a) < pbw.key_standard(spec, b)
    assert pbw.key_reverse(spec, a) > pbw.key_reverse(spec, b)


def test_straighten_golden_affine_sl2(tb_cache):
    spec = AlgebraSpec(tb_cache("A1:r1"), flavor="affine", level=1)
    e, f = 2, 0
    out = pbw.straighten(spec, ((e, 1), (f, -1)))
    assert pbw.format_element(spec, out) == \
        "1*b1@t^-1*b3@t^1 + 1*b2@t^0 + 4"


@pytest.mark.parametrize("label,flavor,level", [
    ("A1:r1", "affine", 1),
    ("A2:r2", "loop", 0),
    ("D4:r3", "derived", "1/2"),
])
def test_straighten_associativity_random(tb_cache, label, flavor, level):
    from fractions import Fraction
    spec = AlgebraSpec(tb_cache(label), flavor=flavor,
                       level=Fraction(str(level)))
    rng = random.Random(42)
    for _ in range(40):
        u = rand_word(spec, rng, maxlen=2, allow_d=True)
        v = rand_word(spec, rng, maxlen=2, allow_d=True)
        w = rand_word(spec, rng, maxlen=2, allow_d=True)
        a = pbw.u_product(spec, pbw.straighten(spec, u + v),
                          pbw.straighten(spec, w))
        b = pbw.u_product(spec, pbw.straighten(spec, u),
                          pbw.straighten(spec, v + w))
        assert a == b


def test_commutator_of_letters_is_letter_bracket(tb_cache):
    spec = AlgebraSpec(tb_cache("A1:r1"), flavor="affine", level=1)
    rng = random.Random(5)
    for _ in range(60):
        L1 = rand_letter(spec, rng, allow_d=True)
        L2 = rand_letter(spec, rng, allow_d=True)
        got = pbw.u_commutator(spec, {(L1,): spec.scalar(1)},
                               {(L2,): spec.scalar(1)})
        want = letter_bracket(spec, L1, L2)
        assert got == want


def test_poisson_jacobi_and_leibniz(tb_cache):
    spec = AlgebraSpec(tb_cache("A2:r2"), flavor="affine", level=1)
    rng = random.Random(11)
    for grmd in (False, True):
        for _ in range(25):
            x = rand_elem(spec, rng, allow_d=True)
            y = rand_elem(spec, rng, allow_d=True)
            z = rand_elem(spec, rng, allow_d=True)
            jac = pbw.elem_add(
                pbw.poisson(spec, x, pbw.poisson(spec, y, z, grmd), grmd),
                pbw.elem_add(
                    pbw.poisson(spec, y, pbw.poisson(spec, z, x, grmd), grmd),
                    pbw.poisson(spec, z, pbw.poisson(spec, x, y, grmd),
                                grmd)))
            assert jac == {}
            lhs = pbw.poisson(spec, x, pbw.s_product(spec, y, z), grmd)
            rhs = pbw.elem_add(
                pbw.s_product(spec, pbw.poisson(spec, x, y, grmd), z),
                pbw.s_product(spec, y, pbw.poisson(spec, x, z, grmd)))
            assert lhs == rhs


def test_grmd_drops_cocycle_and_mixed_signs(tb_cache):
    spec = AlgebraSpec(tb_cache("A1:r1"), flavor="affine", level=1)
    e, f = 2, 0
    full = pbw.poisson(spec, {((e, 3),): spec.scalar(1)},
                       {((f, -3),): spec.scalar(1)})
    graded = pbw.poisson(spec, {((e, 3),): spec.scalar(1)},
                         {((f, -3),): spec.scalar(1)}, grmd=True)
    assert () in full
    assert graded == {}


def test_ad_lines_matches_poisson(tb_cache):
    spec = AlgebraSpec(tb_cache("D4:r3"))
    rng = random.Random(3)
    tb = spec.basis
    for _ in range(20):
        b = rng.choice([x for x in tb.elements if x.kind == "root"])
        n = rng.randrange(1, 4) * spec.r + b.s
        x = rand_elem(spec, rng)
        acting = {((b.index, n),): spec.scalar(1)}
        assert pbw.ad_lines(spec, ((b.index, spec.scalar(1)),), n, x) \
            == pbw.poisson(spec, acting, x)


def test_leading_and_format_roundtrip_via_cli_parser(tb_cache):
    from loopalg.cli import parse_element
    spec = AlgebraSpec(tb_cache("D4:r3"), flavor="affine", level=1)
    rng = random.Random(9)
    for _ in range(20):
        x = rand_elem(spec, rng, terms=3, allow_d=True)
        text = pbw.format_element(spec, x)
        assert parse_element(spec, text) == x
