"""The brute-force scanners themselves: exact arithmetic and guards."""

import random

import pytest

from plumblat import BoxTooLarge, Constraint, laufer_zmin, min_chi
from plumblat.oracle import brute_min_chi, brute_semigroup, brute_zmin

from corpus import form, graph_g2, random_trees, single


def test_incremental_scan_matches_direct_chi():
    rng = random.Random(31)
    for g in random_trees(5, seed=33, n_max=5):
        f = form(g)
        shift = f.zero()
        for v in f.ids:
            k = rng.randint(-2, 2)
            if k:
                shift = shift + f.dual(v).scale(k)
        lo = f.cycle([rng.randint(-2, 0) for _ in f.ids])
        hi = lo + f.cycle([rng.randint(0, 3) for _ in f.ids])
        res = brute_min_chi(f, shift, lo, hi)
        direct = [f.chi(shift + c) for c in res.minimizers]
        assert all(v == res.min_value for v in direct)
        # spot check the minimum against a full direct evaluation
        import itertools
        vals = []
        for tup in itertools.product(*[range(int(a), int(b) + 1)
                                       for a, b in zip(lo.coeffs, hi.coeffs)]):
            vals.append(f.chi(shift + f.cycle(list(tup))))
        assert min(vals) == res.min_value


def test_single_vertex_positive_min():
    f = form(single(-2))
    res = brute_min_chi(f, None, f.zero(), f.cycle([5]), exclude_zero=True)
    assert res.min_value == 1
    assert res.minimizers == (f.unit(1),)


def test_g2_boxed_min_is_minus_one():
    f = form(graph_g2())
    res = min_chi(f, None, Constraint.over_lattice())
    from plumblat.checks import analytic_box
    lo, hi = analytic_box(f, None, res.min_value, Constraint.over_lattice(), margin=1)
    ora = brute_min_chi(f, None, lo, hi)
    assert ora.min_value == -1 == res.min_value
    assert ora.minimizers == res.minimizers


def test_guard_trips():
    f = form(graph_g2())
    with pytest.raises(BoxTooLarge):
        brute_min_chi(f, None, f.cycle([-20] * f.n), f.cycle([20] * f.n), guard=10 ** 5)
    with pytest.raises(BoxTooLarge):
        brute_zmin(f, f.cycle([50] * f.n), guard=10 ** 5)


def test_semigroup_scanner():
    f = form(graph_g2())
    assert brute_semigroup(f, f.zero(), 3)
    zmin = laufer_zmin(f)
    assert not brute_semigroup(f, zmin, 4)
    # Z_max is a semigroup member; Z_K is not on this non-minimal graph
    assert brute_semigroup(f, zmin.scale(2), 4)
    assert not brute_semigroup(f, f.canonical(), 4)


def test_brute_zmin_agrees_with_laufer():
    for g in random_trees(6, seed=44, n_max=6):
        f = form(g)
        z = laufer_zmin(f)
        assert brute_zmin(f, z.scale(2)) == z
