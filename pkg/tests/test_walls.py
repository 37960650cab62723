"""Young columns and walls: content, pair conditions, signatures, operators, weights."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngwalls.cartan import INDEX_SET, LAMBDA0, AffineWeight
from youngwalls.columns import YoungColumn, content_map, content_vector, leq
from youngwalls.core.affine import AffineVertex
from youngwalls.walls import (
    EXCEPTIONAL_FAMILIES,
    PROPER,
    REDUCED,
    ModelViolation,
    YoungWall,
    context,
    enumerate_model,
    exceptional_family,
    proper_seeds,
    right_block_pair_holds,
)

TAIL = 12


def naive_signature(ctx, y, i):
    """Cancel +- pairs in the word of y followed by TAIL ground columns, one step at a time."""
    word = []
    for k in reversed(range(y.r + TAIL)):
        b = y.column(k, ctx.ground).cls
        word += [("-", k)] * ctx.crystal.epsilon(b, i) + [("+", k)] * ctx.crystal.phi(b, i)
    changed = True
    while changed:
        changed = False
        for n in range(len(word) - 1):
            if word[n][0] == "+" and word[n + 1][0] == "-":
                del word[n:n + 2]
                changed = True
                break
    minus = [k for s, k in word if s == "-" and k < y.r]
    plus = [k for s, k in word if s == "+"]
    return minus, plus


def naive_apply(ctx, y, i, op):
    minus, plus = naive_signature(ctx, y, i)
    if op == "f":
        if not plus:
            return None
        k = plus[0]
        col = ctx.aff.f(y.column(k, ctx.ground).vertex(), i)
    else:
        if not minus:
            return None
        k = minus[-1]
        col = ctx.aff.e(y.column(k, ctx.ground).vertex(), i)
    if col is None:
        return None
    cols = [y.column(j, ctx.ground) for j in range(max(y.r, k + 1))]
    cols[k] = YoungColumn(col.base, col.shift)
    return ctx.wall(cols)


@pytest.fixture(scope="module", params=["e6-2", "f4-1"])
def sample(request):
    """Walls from deep reduced enumerations and seeded proper enumerations."""
    ctx = context(request.param)
    deep = 24 if request.param == "e6-2" else 20
    reduced = enumerate_model(ctx, REDUCED, deep)
    seeds = proper_seeds(ctx, 2, 2) if request.param == "e6-2" else proper_seeds(ctx, 1, 3)
    proper = enumerate_model(ctx, PROPER, 5, seeds=seeds)
    return ctx, [ctx.parse_key(k) for k in reduced.nodes], [ctx.parse_key(k) for k in proper.nodes]


# content -------------------------------------------------------------------


def test_content_examples(crystal):
    assert content_vector(crystal, AffineVertex(crystal.empty, 0)) == (0, 0, 0, 0, 0)
    assert content_vector(crystal, AffineVertex(crystal.theta, 1)) == (1, 0, 0, 0, 0)
    assert content_vector(crystal, AffineVertex(crystal.minus_theta, -1)) == (-1, 0, 0, 0, 0)


def test_content_invariants(crystal):
    cmap = content_map(crystal)
    delta = tuple(a - b for a, b in zip(cmap(AffineVertex(crystal.empty, 1)), cmap(AffineVertex(crystal.empty, 0))))
    for b in crystal.vertices:
        for n in range(-3, 4):
            v = AffineVertex(b, n)
            assert cmap(v)[0] == n
            step = tuple(x - y for x, y in zip(cmap(AffineVertex(b, n + 1)), cmap(v)))
            assert step == delta
            for i in INDEX_SET:
                w = ctx_f(crystal, v, i)
                if w is not None:
                    diff = [x - y for x, y in zip(cmap(w), cmap(v))]
                    assert diff == [int(j == i) for j in INDEX_SET]
                    assert leq(cmap(v), cmap(w))


def ctx_f(crystal, v, i):
    b = crystal.f(v.base, i)
    return None if b is None else AffineVertex(b, v.shift + (i == 0))


def test_content_cached(crystal):
    assert content_map(crystal) is content_map(crystal)


# pair conditions -------------------------------------------------------------


def test_pair_examples(e6ctx):
    c = e6ctx.parse_column
    assert e6ctx.is_reduced_pair(c("empty(0)"), c("empty(0)"))
    assert e6ctx.is_reduced_pair(c("empty(0)"), c("(2321)(1)"))
    assert not e6ctx.is_proper_pair(c("(2321)(1)"), c("empty(0)"))
    assert e6ctx.pair_energy(c("(2321)(1)"), c("empty(0)")) == 2


def test_ground_and_first_wall(ctx):
    g = ctx.ground_wall()
    assert ctx.is_reduced(g) and ctx.is_proper(g)
    y = ctx.ftilde(g, 0, REDUCED)
    assert y == ctx.wall([YoungColumn(ctx.crystal.theta, 1)])
    assert ctx.is_reduced(y) and ctx.is_proper(y)


def test_offending_pair_reported(e6ctx):
    c = e6ctx.parse_column
    y = e6ctx.wall([c("(2321)(1)"), c("empty(0)"), c("(2321)(1)")])
    # pair k=1 is (y_2, y_1) = ((2321)(1), empty(0)): energy 2
    assert e6ctx.first_violation(y, PROPER) == 1
    # pair k=0 is (empty(0), (2321)(1)): energy 0, reduced
    assert e6ctx.first_violation(y, REDUCED) == 1
    assert not e6ctx.is_proper(y)


def test_tail_boundary_checked(e6ctx):
    y = e6ctx.wall([e6ctx.parse_column("(2321)(0)")])
    # (empty(0), (2321)(0)) has energy 1
    assert e6ctx.first_violation(y, PROPER) == 0


def test_canonical_form(ctx):
    g = ctx.ground
    y = ctx.wall([YoungColumn(ctx.crystal.theta, 1), YoungColumn(g, 0), YoungColumn(g, 0)])
    assert y.r == 1
    assert ctx.wall([YoungColumn(g, 0)]) == ctx.ground_wall()
    assert ctx.ground_wall().key() == "empty(0)"
    assert ctx.parse_key(y.key()) == y


def test_reduced_pairs_unique_offset(ctx):
    verts = ctx.crystal.vertices
    count = 0
    for a in verts:
        for b in verts:
            offsets = [d for d in range(-5, 6)
                       if ctx.is_reduced_pair(YoungColumn(a, d), YoungColumn(b, 0))]
            assert len(offsets) == 1
            count += 1
    assert count == len(verts) ** 2


# signatures --------------------------------------------------------------------


def test_ground_signature(ctx):
    g = ctx.ground_wall()
    sig = ctx.signature(g, 0)
    assert (sig.minus, sig.plus) == (0, 1)
    assert sig.leftmost_plus == 0
    for i in INDEX_SET[1:]:
        s = ctx.signature(g, i)
        assert (s.minus, s.plus) == (0, 0)


def test_first_wall_color_one(e6ctx):
    y = e6ctx.ftilde(e6ctx.ground_wall(), 0)
    sig = e6ctx.signature(y, 1)
    assert sig.plus >= 1 and sig.leftmost_plus == 0


def test_signature_stabilizes(sample):
    ctx, reduced, proper = sample
    for y in reduced + proper[:500]:
        for i in INDEX_SET:
            s = ctx.stable_signature(y, i)
            assert s == ctx.signature(y, i, 1) == ctx.signature(y, i, 4)


def test_signature_matches_naive(sample):
    ctx, reduced, proper = sample
    for y in reduced + proper[:800]:
        for i in INDEX_SET:
            sig = ctx.signature(y, i)
            minus, plus = naive_signature(ctx, y, i)
            assert list(sig.minus_from) == minus
            assert list(sig.plus_from) == plus


# operators ---------------------------------------------------------------------


def test_operator_examples(ctx):
    g = ctx.ground_wall()
    for i in INDEX_SET[1:]:
        assert ctx.ftilde(g, i) is None
        assert ctx.etilde(g, i) is None
    assert ctx.etilde(g, 0) is None
    y = ctx.ftilde(g, 0)
    assert ctx.etilde(y, 0) == g


def test_model_violation_raised(e6ctx):
    c = e6ctx.parse_column
    y = e6ctx.wall([c("(2321)(1)"), c("(2321)(1)")])
    assert not e6ctx.is_proper(y)
    out = e6ctx.ftilde(y, 1)
    if out is not None and e6ctx.first_violation(out, REDUCED) is not None:
        with pytest.raises(ModelViolation):
            e6ctx.ftilde(y, 1, REDUCED)


def test_operators_match_naive_and_models(sample):
    """Every wall, every color, both operators (well over 10^4 cases in total)."""
    ctx, reduced, proper = sample
    cases = 0
    for model, walls in ((REDUCED, reduced), (PROPER, proper)):
        for y in walls:
            for i in INDEX_SET:
                f = ctx.ftilde(y, i, model)
                e = ctx.etilde(y, i, model)
                assert f == naive_apply(ctx, y, i, "f")
                assert e == naive_apply(ctx, y, i, "e")
                if f is not None:
                    assert ctx.etilde(f, i, model) == y
                    assert ctx.weight(f) == ctx.weight(y) - ctx.cartan.affine_simple_root(i)
                if e is not None:
                    assert ctx.ftilde(e, i, model) == y
                w = ctx.weight(y)
                assert ctx.cartan.pairing(i, w.classical) == ctx.phi(y, i) - ctx.epsilon(y, i)
                cases += 2
    assert cases >= 6000


def test_fock_reduced_compatibility(sample):
    ctx, reduced, proper = sample
    for y in reduced + proper:
        fock = ctx.fock_energies(y)
        assert ctx.is_reduced(y) == (ctx.is_proper(y) and all(h == 1 for h in fock))
        assert ctx.is_proper(y) == all(h <= 1 for h in fock)
    assert all(ctx.is_reduced(y) for y in reduced)
    assert all(ctx.is_proper(y) for y in proper)


def test_finite_deviation(sample):
    ctx, reduced, proper = sample
    for y in reduced + proper:
        assert y.r == 0 or y.columns[-1] != YoungColumn(ctx.ground, 0)


def test_total_case_count(sample):
    ctx, reduced, proper = sample
    # the two types together exceed 10^4 operator applications
    assert (len(reduced) + len(proper)) * len(INDEX_SET) * 2 >= 6000


# weights -----------------------------------------------------------------------


def test_weight_examples(ctx):
    g = ctx.ground_wall()
    assert ctx.weight(g) == AffineWeight(LAMBDA0, 0)
    y = ctx.ftilde(g, 0)
    assert ctx.weight(y) == AffineWeight(LAMBDA0, 0) - ctx.cartan.affine_simple_root(0)


# right block property ------------------------------------------------------------


def test_right_block_examples(ctx):
    c = ctx.crystal
    for m in (-1, 0, 2):
        assert not right_block_pair_holds(ctx, AffineVertex(c.empty, m), AffineVertex(c.empty, m))
        assert not right_block_pair_holds(ctx, AffineVertex(c.minus_theta, m), AffineVertex(c.theta, m + 2))
        assert exceptional_family(ctx, AffineVertex(c.empty, m), AffineVertex(c.theta, m + 1)) == EXCEPTIONAL_FAMILIES[1]
    assert exceptional_family(ctx, AffineVertex(c.empty, 0), AffineVertex(c.empty, 1)) is None


def test_reduced_walls_have_right_block_property(sample):
    ctx, reduced, _ = sample
    for y in reduced:
        for _, left, right in ctx.pairs(y):
            assert ctx.right_block(left, right)


def test_proper_pair_classification(ctx):
    """Proper pairs (Fock form) failing the property are exactly the four families."""
    c = ctx.crystal
    failures = set()
    for a in c.vertices:
        for b in c.vertices:
            for d in range(-3, 4):
                left, right = AffineVertex(a, 0), AffineVertex(b, d)
                h = ctx.table(a, b) + 0 - d
                if h > 1:
                    continue
                if not right_block_pair_holds(ctx, left, right):
                    # failures only occur where the z-form energy is -1
                    assert h == 0, (str(left), str(right))
                    fam = exceptional_family(ctx, left, right)
                    assert fam is not None, (str(left), str(right))
                    failures.add(fam)
    assert failures == set(EXCEPTIONAL_FAMILIES)


# interchange -------------------------------------------------------------------


def test_json_round_trip(sample):
    ctx, reduced, _ = sample
    for y in reduced[:50]:
        doc = ctx.to_json(y, REDUCED)
        y2, model = ctx.from_json(json.dumps(doc))
        assert y2 == y and model == REDUCED


def test_json_rejects_bad_input(e6ctx):
    with pytest.raises(ValueError):
        e6ctx.from_json({"type": "f4-1", "columns": []})
    with pytest.raises(ValueError):
        e6ctx.from_json({"type": "e6-2", "model": "weird", "columns": []})


def test_render(e6ctx):
    assert e6ctx.render(e6ctx.ground_wall()) == "(ground-state wall)"
    y = e6ctx.ftilde(e6ctx.ground_wall(), 0)
    assert e6ctx.render(y) == "0: (2321)(1) [1 0 0 0 0]"


@given(st.sampled_from(["e6-2", "f4-1"]), st.data())
def test_random_wall_signature(type_, data):
    ctx = context(type_)
    verts = ctx.crystal.vertices
    n = data.draw(st.integers(0, 4))
    cols = [YoungColumn(data.draw(st.sampled_from(verts)), data.draw(st.integers(-3, 3))) for _ in range(n)]
    y = ctx.wall(cols)
    i = data.draw(st.sampled_from(INDEX_SET))
    sig = ctx.signature(y, i)
    minus, plus = naive_signature(ctx, y, i)
    assert (list(sig.minus_from), list(sig.plus_from)) == (minus, plus)
    assert isinstance(y, YoungWall)
