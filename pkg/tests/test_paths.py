"""Path model: operators, weights and the correspondence with reduced walls."""

import random

import pytest

from youngwalls.cartan import INDEX_SET, LAMBDA0, AffineWeight
from youngwalls.columns import YoungColumn
from youngwalls.core.graph import anchored_isomorphic, enumerate_crystal
from youngwalls.paths import path_crystal, path_to_wall, wall_to_path
from youngwalls.walls import REDUCED, enumerate_model


@pytest.fixture
def pc(ctx):
    return path_crystal(ctx)


def test_ground_path(ctx, pc):
    g = pc.ground_path()
    assert g.key() == "empty"
    assert pc.weight(g) == AffineWeight(LAMBDA0, 0)
    assert wall_to_path(ctx, ctx.ground_wall()) == g
    assert path_to_wall(ctx, g) == ctx.ground_wall()


def test_ground_path_operators(ctx, pc):
    g = pc.ground_path()
    assert pc.epsilon(g, 0) == 0 and pc.phi(g, 0) == 1
    for i in INDEX_SET[1:]:
        assert pc.f(g, i) is None and pc.e(g, i) is None
    p = pc.f(g, 0)
    assert p.elements == (ctx.crystal.theta,)
    assert pc.weight(p) == AffineWeight(LAMBDA0, 0) - ctx.cartan.affine_simple_root(0)
    assert pc.e(p, 0) == g


def test_trimming(ctx, pc):
    p = pc.path([ctx.crystal.theta, ctx.ground, ctx.ground])
    assert p.r == 1


def test_energy_correction_example(e6ctx):
    pc = path_crystal(e6ctx)
    c = e6ctx.crystal
    p = pc.path([c.empty, c.theta])
    assert pc.energy_correction(p) == 3
    assert pc.weight(p).delta == -3
    y = path_to_wall(e6ctx, p)
    assert y == e6ctx.wall([YoungColumn(c.empty, 2), YoungColumn(c.theta, 1)])
    assert e6ctx.weight(y) == pc.weight(p)


def test_shift_recovery_round_trip(ctx):
    deep = 24 if ctx.type.value == "e6-2" else 20
    g = enumerate_model(ctx, REDUCED, deep)
    walls = [ctx.parse_key(k) for k in g.nodes]
    rng = random.Random(7)
    picks = [rng.choice(walls) for _ in range(1000)]
    for y in picks:
        assert path_to_wall(ctx, wall_to_path(ctx, y)) == y


def test_path_to_wall_is_reduced(ctx, pc):
    rng = random.Random(3)
    verts = ctx.crystal.vertices
    for _ in range(300):
        p = pc.path(rng.choice(verts) for _ in range(rng.randint(0, 5)))
        y = path_to_wall(ctx, p)
        assert ctx.is_reduced(y)
        assert wall_to_path(ctx, y) == p
        # weight from block content and from the energy correction agree
        assert ctx.weight(y) == pc.weight(p)


def test_equivariance_sweep(ctx, pc):
    depth = 6
    g = enumerate_model(ctx, REDUCED, depth)
    for key in g.nodes:
        y = ctx.parse_key(key)
        p = wall_to_path(ctx, y)
        for i in INDEX_SET:
            fy, fp = ctx.ftilde(y, i, REDUCED), pc.f(p, i)
            assert (fy is None) == (fp is None)
            if fy is not None:
                assert wall_to_path(ctx, fy) == fp
            ey, ep = ctx.etilde(y, i, REDUCED), pc.e(p, i)
            assert (ey is None) == (ep is None)
            if ey is not None:
                assert wall_to_path(ctx, ey) == ep
            assert ctx.epsilon(y, i) == pc.epsilon(p, i)
            assert ctx.phi(y, i) == pc.phi(p, i)


def test_graphs_isomorphic(ctx, pc):
    depth = 8
    walls = enumerate_model(ctx, REDUCED, depth)
    paths = enumerate_crystal(pc, pc.ground_path(), depth, "f", type_tag=ctx.type.value)
    res = anchored_isomorphic(walls, paths)
    assert res, res.reason
