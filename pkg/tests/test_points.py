import random
from fractions import Fraction as F

import pytest

from uassoc import points as pt
from uassoc import trees as tr
from uassoc.cube import apply_face

from _oracles import cork_square, filtration_square
from _relations import FAMILIES, LABELS, compose_respects, random_point, relation_pair


def P(tree, *labels):
    return pt.LabeledPoint.parse(tree, labels)


def text(p):
    return tr.serialize_tree(p.tree), [str(x) for x in p.labels]


# ------------------------------------------------------------ validation

def test_label_count_checked():
    with pytest.raises(pt.InvalidPointError):
        P("((l l) (b l))", 0, 0, 0, 0)
    with pytest.raises(pt.InvalidPointError):
        P("((l l) l)", 2)
    with pytest.raises(pt.InvalidPointError):
        P("(l l l)")  # not binary
    with pytest.raises(pt.InvalidPointError):
        P("(w l)")  # points carry black corks only


def test_normal_point_rejects_zero():
    with pytest.raises(pt.InvalidPointError):
        pt.NormalPoint.parse("((l l) l)", [0])
    assert pt.NormalPoint.parse("(l l l)").labels == ()


def test_json_roundtrip():
    p = P("((l l) (b l))", "1/2", 0, 1)
    assert pt.point_from_dict(p.to_dict()) == p
    assert pt.point_to_json(p) == '{"tree": "((l l) (b l))", "labels": ["1/2", "0", "1"]}'
    q = pt.point_from_dict({"tree": "(l l l)", "labels": []})
    assert isinstance(q, pt.NormalPoint)
    with pytest.raises(pt.InvalidPointError):
        pt.point_from_dict({"labels": []})
    with pytest.raises(pt.InvalidPointError):
        pt.point_from_dict({"tree": "(l", "labels": []})


# -------------------------------------------------------- normal forms

def test_contract_zero_inner_edge():
    assert text(pt.normal_form(P("((l l) l)", 0))) == ("(l l l)", [])


def test_positive_labels_untouched():
    assert text(pt.normal_form(P("((l l) l)", "1/2"))) == ("((l l) l)", ["1/2"])


def test_lone_cork_vanishes():
    # case g: cork and leaf under the root
    assert text(pt.normal_form(P("(b l)", 0))) == ("l", [])


def test_cork_merge_keeps_max():
    # case a: the cork sits left of an inner sibling under an inner parent
    p = P("(l (b (l l)))", "1/3", 0, "1/2")
    assert text(pt.normal_form(p)) == ("(l (l l))", ["1/2"])


def test_cork_next_to_leaf_forgets_label():
    # case c: the cork's sibling is a leaf, the parent label is dropped
    p = P("(l (b l))", "1/3", 0)
    assert text(pt.normal_form(p)) == ("(l l)", [])


def test_both_corks_of_k02():
    assert text(pt.normal_form(P("(b b)", 0, "1/2"))) == ("b", [])


def test_rewrite_chain_of_moves():
    # two zeros: a contraction and a cork deletion
    p = P("((b l) (l l))", 0, 0, "1/2")
    assert text(pt.normal_form(p)) == ("(l (l l))", ["1/2"])


def test_normal_form_idempotent_and_positive():
    rng = random.Random(3)
    for _ in range(300):
        p = random_point(rng, 5)
        n = pt.normal_form(p)
        assert all(x > 0 for x in n.labels)
        assert not tr.has_degree_two(n.tree)
        assert pt.normal_form(n) == n


def test_confluence_random_schedules():
    rng = random.Random(5)
    for _ in range(500):
        p = random_point(rng, 6)
        canonical = pt.normal_form(p)
        for _ in range(3):
            assert pt.normal_form(p, rng=rng) == canonical


# --------------------------------------------------------- the R2 table

@pytest.mark.parametrize("tree,e,letter,target", [
    ("(l (b (l l)))", 2, "a", "(l (l l))"),
    ("(l ((l l) (b l)))", 4, "c", "(l ((l l) l))"),
    ("(l ((l l) b))", 3, "b", "(l (l l))"),
    ("(l (b l))", 2, "c", "(l l)"),
    ("(l (l b))", 2, "d", "(l l)"),
    ("(b (l l))", 1, "e", "(l l)"),
    ("((l l) b)", 2, "f", "(l l)"),
    ("(b l)", 1, "g", "l"),
    ("(l b)", 1, "h", "l"),
])
def test_r2_cases(tree, e, letter, target):
    t = tr.parse_tree(tree)
    got, tgt, _ = pt.r2_case(t, e)
    assert got == letter
    assert tr.serialize_tree(tgt) == target


def test_r2_case_rejects_non_cork_edge():
    with pytest.raises(ValueError):
        pt.r2_case(tr.parse_tree("((l l) l)"), 1)


def test_r1_partner_is_the_other_bracketing():
    (t2, j), = pt.r1_partners(tr.parse_tree("((l l) l)"), 1)
    assert tr.serialize_tree(t2) == "(l (l l))" and j == 1


@pytest.mark.parametrize("family", FAMILIES)
def test_relation_pairs_are_equivalent(family):
    rng = random.Random(11)
    for _ in range(200):
        p, q = relation_pair(rng, family)
        assert pt.equivalent(p, q)


@pytest.mark.parametrize("family", FAMILIES)
def test_composition_respects_relation(family):
    rng = random.Random(17)
    assert all(compose_respects(rng, family) for _ in range(150))


# --------------------------------------------------------- composition

def test_compose_inserts_unit_label():
    p = pt.compose_point(P("(l l)"), 2, P("(l l)"))
    assert text(p) == ("(l (l l))", ["1"])


def test_compose_label_positions():
    x = P("((l l) (l (l l)))", "1/2", "1/3", "1/4")
    y = P("(((l l) l) l)", "1/5", "1/6")
    p = pt.compose_point(x, 3, y)
    assert text(p) == ("((l l) ((((l l) l) l) (l l)))", ["1/2", "1/3", "1", "1/5", "1/6", "1/4"])


def test_compose_with_unit():
    x = P("((l l) l)", "1/2")
    assert pt.compose_point(pt.UNIT, 1, x) == x
    assert pt.compose_point(x, 2, pt.UNIT) == x
    with pytest.raises(IndexError):
        pt.compose_point(x, 4, x)


def test_compose_adds_corks():
    rng = random.Random(2)
    for _ in range(200):
        p, q = random_point(rng), random_point(rng)
        if tr.n_leaves(p.tree) == 0:
            continue
        r = pt.compose_point(p, rng.randint(1, tr.n_leaves(p.tree)), q)
        assert tr.n_corks(r.tree) == tr.n_corks(p.tree) + tr.n_corks(q.tree)


def test_operad_axioms_on_normal_forms():
    rng = random.Random(23)
    nf = pt.normal_form
    for _ in range(300):
        a, b, c = random_point(rng), random_point(rng), random_point(rng)
        na, nb, nc = (tr.n_leaves(x.tree) for x in (a, b, c))
        if na >= 2:
            i = rng.randint(2, na)
            j = rng.randint(1, i - 1)
            lhs = pt.compose_point(pt.compose_point(a, i, b), j, c)
            rhs = pt.compose_point(pt.compose_point(a, j, c), i + nc - 1, b)
            assert nf(lhs) == nf(rhs)
        if na >= 1 and nb >= 1:
            i = rng.randint(1, na)
            j = rng.randint(i, i + nb - 1)
            lhs = pt.compose_point(pt.compose_point(a, i, b), j, c)
            rhs = pt.compose_point(a, i, pt.compose_point(b, j - i + 1, c))
            assert nf(lhs) == nf(rhs)


# ---------------------------------------------------------- degeneracies

def test_degeneracy_cases():
    p = P("((l l) l)", "1/2")
    assert text(pt.degeneracy_map(1, p)) == ("(l l)", [])
    assert text(pt.degeneracy_map(3, p)) == ("(l l)", [])
    q = P("(((l l) l) l)", "1/3", "1/2")
    assert text(pt.degeneracy_map(2, q)) == ("((l l) l)", ["1/3"])
    assert text(pt.degeneracy_map(3, q)) == ("((l l) l)", ["1/2"])
    r = P("((l (l l)) l)", "1/3", "1/2")
    assert text(pt.degeneracy_map(1, r)) == ("((l l) l)", ["1/2"])


def test_degeneracy_preconditions():
    with pytest.raises(ValueError):
        pt.degeneracy_map(1, P("(l l)"))
    with pytest.raises(ValueError):
        pt.degeneracy_map(1, P("((b l) l)", 0, 0))
    with pytest.raises(IndexError):
        pt.degeneracy_map(4, P("((l l) l)", 0))


# ------------------------------------------------- characteristic maps

def test_char_map_top_examples():
    x = P("(l l)")
    assert text(pt.char_map_top([1], x, [F(1, 2)])) == ("(b l)", ["1/2"])
    assert text(pt.char_map_top([1, 2], x, ["1/3", "2/3"])) == ("(b b)", ["1/3", "2/3"])
    assert pt.char_map_top([], x, []) == x
    with pytest.raises(ValueError):
        pt.char_map_top([1], x, [])


def test_char_map_boundary_examples():
    assert text(pt.char_map_boundary([1], 1, P("(l l)"), [])) == ("l", [])
    x = P("((l l) l)", "1/2")
    expected = pt.normal_form(P("((b l) l)", "1/2", 0))
    assert pt.char_map_boundary([1], 1, x, []) == expected
    assert text(expected) == ("(l l)", [])


def test_char_map_boundary_against_rewriting():
    rng = random.Random(29)
    for _ in range(300):
        k = rng.randint(2, 6)
        m = rng.randint(1, min(3, k))
        x = pt.LabeledPoint(pt.random_binary_tree(rng, k, 0),
                            [rng.choice(LABELS) for _ in range(k - 2)])
        places = sorted(rng.sample(range(1, k + 1), m))
        i = rng.randint(1, m)
        t = [rng.choice(LABELS) for _ in range(m - 1)]
        direct = pt.char_map_boundary(places, i, x, t)
        oracle = pt.normal_form(pt.char_map_top(places, x, apply_face("-", i, t)))
        assert direct == oracle


def test_filtration_square_composition():
    rng = random.Random(31)
    for _ in range(200):
        lhs, rhs = filtration_square(rng)
        assert lhs == rhs


def test_filtration_square_cork():
    rng = random.Random(37)
    for _ in range(200):
        lhs, rhs = cork_square(rng)
        assert lhs == rhs
