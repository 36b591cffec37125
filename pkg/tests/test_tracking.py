from __future__ import annotations

import cmath
import csv

import numpy as np
import pytest

from braid_monodromy.braids import BraidWord, braids_equal, is_trivial, permutation_image
from braid_monodromy.config import RunConfig
from braid_monodromy.hurwitz import HurwitzTuple, stabilizes
from braid_monodromy.polynomials import bp_curve, bp_discriminant_family, plane_discriminant_family
from braid_monodromy.tracking import (
    LoopPath,
    RootCollisionError,
    arg_labels,
    branching_tuple,
    circle_loop,
    constant_family,
    discriminant_winding,
    geometric_basis_bp,
    geometric_basis_plane,
    line_segment,
    parse_loop,
    power_family,
    track_loop,
    write_trajectory_csv,
    write_trajectory_svg,
)


class TestElementary:
    def test_constant_family_gives_empty_braid(self, cfg):
        assert track_loop(constant_family([-2, 0, 1]), circle_loop(), cfg).braid.letters == ()

    def test_half_turn(self, cfg):
        tb = track_loop(power_family(2), circle_loop(), cfg)
        assert tb.braid.letters == (1,)
        assert tb.consistent

    def test_full_twist(self, cfg):
        tb = track_loop(power_family(2), circle_loop(turns=2), cfg)
        assert tb.braid.letters == (1, 1)
        assert tb.endpoint_permutation.is_identity

    def test_clockwise_is_negative(self, cfg):
        tb = track_loop(power_family(2), circle_loop().reversed(), cfg)
        assert tb.braid.letters == (-1,)

    def test_cyclic_rotation(self, cfg):
        for m in (3, 4, 5):
            tb = track_loop(power_family(m), circle_loop(), cfg)
            assert tb.braid.exponent_sum() == m - 1
            assert permutation_image(tb.braid).cycle_type() == (m,)

    def test_loop_not_enclosing_puncture(self, cfg):
        tb = track_loop(power_family(3), circle_loop(center=2.0, radius=0.5), cfg)
        assert is_trivial(tb.braid)

    def test_collision_detected(self, cfg):
        seg = line_segment([1.0], [-1.0])
        back = seg.reversed()
        with pytest.raises(RootCollisionError):
            track_loop(power_family(2), LoopPath(1, (seg, back)), cfg)

    def test_open_loop_rejected(self, cfg):
        with pytest.raises(ValueError):
            track_loop(power_family(2), LoopPath(1, (line_segment([1.0], [2.0]),)), cfg)

    def test_arity_checked(self, cfg):
        with pytest.raises(ValueError):
            track_loop(bp_discriminant_family(1, 2), circle_loop(), cfg)


class TestBases:
    @pytest.mark.parametrize("n,k,count", [(1, 2, 2), (2, 2, 3), (3, 2, 4)])
    def test_bp_counts_and_base(self, n, k, count):
        loops = geometric_basis_bp(n, k)
        assert len(loops) == count
        assert all(lp.closed and lp.base == (1 + 0j, 0j) for lp in loops)

    def test_bp_radial_targets(self):
        loops = geometric_basis_bp(3, 2, RunConfig(r=0.05))
        tips = [lp.segments[0].end[1] for lp in loops[:-1]]
        for i, tip in enumerate(tips, start=1):
            xi = cmath.exp(2j * cmath.pi * i / 3)
            assert abs(tip - 0.95 * xi) < 1e-12

    @pytest.mark.parametrize("d", [2, 3])
    def test_plane_basis(self, d):
        loops = geometric_basis_plane(d)
        assert len(loops) == d
        tips = [lp.segments[0].end[0] for lp in loops]
        args = [cmath.phase(t) % (2 * cmath.pi) for t in tips]
        assert args == sorted(args)
        assert all(lp.base == (0j,) for lp in loops)


class TestTrackedBasis:
    @pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (2, 3), (3, 2)])
    def test_stabilizes_vertical_tuple(self, n, k, cfg):
        fam = bp_discriminant_family(n, k)
        tracked = [track_loop(fam, lp, cfg) for lp in geometric_basis_bp(n, k, cfg)]
        bd = branching_tuple(bp_curve(n, k, 1, 0), tracked[0].basepoint_roots, cfg)
        t = HurwitzTuple(n + 1, tuple(bd.entries))
        assert all(tb.consistent for tb in tracked)
        assert all(stabilizes(tb.braid, t) for tb in tracked)

    def test_exponent_sums_match_winding(self, cfg):
        n, k = 2, 3
        fam = bp_discriminant_family(n, k)
        for lp in geometric_basis_bp(n, k, cfg):
            tb = track_loop(fam, lp, cfg)
            assert round(discriminant_winding(fam, lp)) == tb.braid.exponent_sum()

    def test_loop_then_reverse_is_trivial(self, cfg):
        fam = bp_discriminant_family(2, 2)
        lp = geometric_basis_bp(2, 2, cfg)[1]
        tb = track_loop(fam, lp + lp.reversed(), cfg)
        assert is_trivial(tb.braid)

    def test_product_rule(self, cfg):
        fam = bp_discriminant_family(2, 2)
        a, b, _ = geometric_basis_bp(2, 2, cfg)
        ta, tb, tab = track_loop(fam, a, cfg), track_loop(fam, b, cfg), track_loop(fam, a + b, cfg)
        assert braids_equal(tab.braid, ta.braid * tb.braid)

    def test_refinement_stable(self, cfg):
        fam = bp_discriminant_family(3, 2)
        for lp in geometric_basis_bp(3, 2, cfg):
            assert braids_equal(track_loop(fam, lp, cfg).braid, track_loop(fam, lp, cfg.refined()).braid)

    def test_radial_tuple_is_periodic_for_n2(self, cfg):
        fam = bp_discriminant_family(2, 2)
        base = track_loop(fam, geometric_basis_bp(2, 2, cfg)[0], cfg).basepoint_roots
        bd = branching_tuple(bp_curve(2, 2, 1, 0), base, cfg, basis="radial")
        assert HurwitzTuple(3, tuple(bd.entries)).to_text() == "(1 2);(2 3);(1 2);(2 3)"

    def test_plane_family_tracks(self, cfg):
        fam = plane_discriminant_family(3)
        tb = track_loop(fam, geometric_basis_plane(3, cfg)[0], cfg)
        assert tb.braid.strands == 6 and tb.consistent


class TestHelpers:
    def test_arg_labels(self):
        pts = [1, 1j, -1, -1j]
        assert arg_labels(pts) == [4, 1, 2, 3]

    def test_parse_loop(self, cfg):
        fam = bp_discriminant_family(2, 2)
        assert parse_loop("radial:i=2", fam, cfg).label == "radial:i=2"
        assert parse_loop("u-loop", fam, cfg).label == "u-loop"
        with pytest.raises(ValueError):
            parse_loop("radial:i=3", fam, cfg)
        with pytest.raises(ValueError):
            parse_loop("plane:j=0", fam, cfg)
        assert parse_loop("circle:radius=2,turns=1", power_family(2), cfg).closed

    def test_outputs(self, tmp_path, cfg):
        tb = track_loop(power_family(2), circle_loop(), cfg, record=True)
        write_trajectory_csv(tb, tmp_path / "t.csv")
        write_trajectory_svg(tb, tmp_path / "t.svg")
        rows = list(csv.reader(open(tmp_path / "t.csv")))
        assert rows[0] == ["s", "root_index", "re", "im"]
        assert {r[1] for r in rows[1:]} == {"1", "2"}
        assert (tmp_path / "t.svg").read_text().startswith("<svg")

    def test_json_shape(self, cfg):
        doc = track_loop(power_family(2), circle_loop(), cfg).to_json()
        assert {"strands", "word", "min_sep", "steps"} <= set(doc)
        assert doc["word"] == [1]
