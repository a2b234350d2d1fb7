import json
import random

import pytest

from slopecalc import (
    BoundaryCurve,
    BranchCurve,
    BranchedSurface,
    SectorRecord,
    VerticalAnnulus,
    WeightFunction,
    amputate,
    carried_euler,
    check_degree_consistency,
    check_weights,
    enumerate_weights,
    is_boundary_free,
    is_sufficiently_positive,
    scale_weights,
    sup_exceeds,
    tangency_count,
    validate_surface,
)
from slopecalc.branched_surface import (
    load_surface,
    surface_from_dict,
    surface_to_dict,
    weights_from_dict,
    weights_to_dict,
)

from oracles import grid_weight_solutions


def simple_surface(eulers=(0, 0, 0)):
    """One branch curve (A, B -> C)."""
    return BranchedSurface(
        sectors=(
            SectorRecord("A", eulers[0]),
            SectorRecord("B", eulers[1]),
            SectorRecord("C", eulers[2]),
        ),
        branch_curves=(BranchCurve("A", "B", "C"),),
    )


def chain_surface():
    """Two branch curves (A, B -> C) and (C, D -> E)."""
    return BranchedSurface(
        sectors=tuple(SectorRecord(i) for i in "ABCDE"),
        branch_curves=(BranchCurve("A", "B", "C"), BranchCurve("C", "D", "E")),
    )


def random_surface(rng, max_sectors=4, max_curves=4):
    n = rng.randint(1, max_sectors)
    ids = [f"S{i}" for i in range(n)]
    curves = tuple(
        BranchCurve(rng.choice(ids), rng.choice(ids), rng.choice(ids))
        for _ in range(rng.randint(0, max_curves))
    )
    sectors = tuple(SectorRecord(i, rng.randint(-2, 2)) for i in ids)
    return BranchedSurface(sectors=sectors, branch_curves=curves)


class TestValidate:
    def test_single_sector_no_curves(self):
        surface = BranchedSurface(sectors=(SectorRecord("A"),))
        assert validate_surface(surface) == []

    def test_dangling_reference(self):
        surface = BranchedSurface(
            sectors=(SectorRecord("A"),),
            branch_curves=(BranchCurve("A", "A", "Z"),),
        )
        violations = validate_surface(surface)
        assert len(violations) == 1
        assert "Z" in violations[0]

    def test_well_formed_triangle(self):
        assert validate_surface(simple_surface()) == []

    def test_duplicate_ids(self):
        surface = BranchedSurface(sectors=(SectorRecord("A"), SectorRecord("A")))
        assert any("duplicate" in v for v in validate_surface(surface))


class TestCheckWeights:
    def test_branch_equation_holds(self):
        w = WeightFunction({"A": 1, "B": 2, "C": 3})
        assert check_weights(simple_surface(), w)

    def test_branch_equation_fails(self):
        w = WeightFunction({"A": 1, "B": 1, "C": 1})
        assert not check_weights(simple_surface(), w)

    def test_zero_always_valid(self):
        rng = random.Random(1)
        for _ in range(25):
            surface = random_surface(rng)
            zero = WeightFunction({i: 0 for i in surface.sector_ids()})
            assert check_weights(surface, zero)

    def test_domain_mismatch_raises(self):
        with pytest.raises(ValueError):
            check_weights(simple_surface(), WeightFunction({"A": 1, "B": 2}))


class TestEnumerateWeights:
    def test_simple_nonnegative(self):
        # all (a, b, a+b) with a, b >= 0 and a+b <= 2: six solutions
        got = enumerate_weights(simple_surface(), 2, "nonnegative")
        tuples = [(w["A"], w["B"], w["C"]) for w in got]
        assert tuples == [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (1, 1, 2), (2, 0, 2)]

    def test_simple_positive(self):
        got = enumerate_weights(simple_surface(), 2, "positive")
        assert [(w["A"], w["B"], w["C"]) for w in got] == [(1, 1, 2)]

    def test_empty_surface_has_empty_solution(self):
        got = enumerate_weights(BranchedSurface(), 3)
        assert got == [WeightFunction({})]

    def test_lexicographic_by_sector_id(self):
        got = enumerate_weights(simple_surface(), 3)
        tuples = [tuple(w[i] for i in ("A", "B", "C")) for w in got]
        assert tuples == sorted(tuples)

    def test_grid_oracle_equivalence(self):
        rng = random.Random(2)
        for _ in range(30):
            surface = random_surface(rng)
            for positivity in ("nonnegative", "positive"):
                got = [weights_to_dict(w) for w in enumerate_weights(surface, 5, positivity)]
                assert got == grid_weight_solutions(surface, 5, positivity)

    def test_cone_closure(self):
        rng = random.Random(3)
        for _ in range(20):
            surface = random_surface(rng, max_sectors=6)
            solutions = enumerate_weights(surface, 4)
            for _ in range(10):
                w1, w2 = rng.choice(solutions), rng.choice(solutions)
                assert check_weights(surface, w1 + w2)
                assert check_weights(surface, scale_weights(w1, rng.randint(1, 5)))

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            enumerate_weights(simple_surface(), -1)
        with pytest.raises(ValueError):
            enumerate_weights(simple_surface(), 2, "negative")


class TestScaleWeights:
    def test_doubling(self):
        w = WeightFunction({"A": 1, "B": 2, "C": 3})
        assert scale_weights(w, 2) == WeightFunction({"A": 2, "B": 4, "C": 6})

    def test_identity(self):
        w = WeightFunction({"A": 1, "B": 2, "C": 3})
        assert scale_weights(w, 1) == w

    def test_zero_fixed(self):
        w = WeightFunction({"A": 0, "B": 0, "C": 0})
        for c in (1, 2, 7):
            assert scale_weights(w, c) == w

    def test_preserves_validity(self):
        surface = simple_surface()
        w = WeightFunction({"A": 1, "B": 2, "C": 3})
        assert check_weights(surface, scale_weights(w, 5))

    def test_rejects_nonpositive_factor(self):
        with pytest.raises(ValueError):
            scale_weights(WeightFunction({"A": 1}), 0)


class TestCarriedEuler:
    def test_torus_sector(self):
        surface = BranchedSurface(sectors=(SectorRecord("T", 0),))
        assert carried_euler(surface, WeightFunction({"T": 5})) == 0

    def test_zero_weight(self):
        surface = simple_surface(eulers=(-1, 2, 1))
        zero = WeightFunction({"A": 0, "B": 0, "C": 0})
        assert carried_euler(surface, zero) == 0

    def test_linearity(self):
        surface = simple_surface(eulers=(-1, 0, 1))
        w1 = WeightFunction({"A": 1, "B": 1, "C": 2})
        w2 = WeightFunction({"A": 2, "B": 1, "C": 3})
        assert carried_euler(surface, w1 + w2) == carried_euler(
            surface, w1
        ) + carried_euler(surface, w2)

    def test_linearity_random(self):
        rng = random.Random(4)
        for _ in range(20):
            surface = random_surface(rng)
            solutions = enumerate_weights(surface, 3)
            w1, w2 = rng.choice(solutions), rng.choice(solutions)
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            combo = WeightFunction(
                {k: a * w1[k] + b * w2[k] for k in w1.weights}
            )
            assert carried_euler(surface, combo) == a * carried_euler(
                surface, w1
            ) + b * carried_euler(surface, w2)

    def test_rejects_invalid_weights(self):
        with pytest.raises(ValueError):
            carried_euler(simple_surface(), WeightFunction({"A": 1, "B": 1, "C": 1}))


class TestAmputate:
    def test_single_sector_removal(self):
        result = amputate(simple_surface(), {"C"})
        assert result.sector_ids() == ["A", "B"]
        assert result.branch_curves == ()
        assert result.boundary_curves == (
            BoundaryCurve("A", "out1"),
            BoundaryCurve("B", "out2"),
        )
        assert all(s.boundary for s in result.sectors)

    def test_total_amputation(self):
        result = amputate(simple_surface(), {"A", "B", "C"})
        assert result.is_empty()
        assert result.branch_curves == ()
        assert result.boundary_curves == ()

    def test_chain_derived_example(self):
        # deleting E kills (C, D -> E); (A, B -> C) survives; C and D gain
        # boundary records
        result = amputate(chain_surface(), {"E"})
        assert result.sector_ids() == ["A", "B", "C", "D"]
        assert result.branch_curves == (BranchCurve("A", "B", "C"),)
        assert result.boundary_curves == (
            BoundaryCurve("C", "out1"),
            BoundaryCurve("D", "out2"),
        )

    def test_sector_count_strictly_decreases(self):
        rng = random.Random(5)
        for _ in range(30):
            surface = random_surface(rng)
            ids = surface.sector_ids()
            chosen = set(rng.sample(ids, rng.randint(1, len(ids))))
            result = amputate(surface, chosen)
            assert len(result.sectors) < len(surface.sectors)

    def test_disjoint_amputations_commute(self):
        rng = random.Random(6)
        for _ in range(30):
            surface = random_surface(rng, max_sectors=6)
            ids = surface.sector_ids()
            if len(ids) < 3:
                continue
            k = rng.randint(2, len(ids) - 1)
            chosen = rng.sample(ids, k)
            cut = rng.randint(1, k - 1)
            first, second = set(chosen[:cut]), set(chosen[cut:])
            one_way = amputate(amputate(surface, first), second)
            other_way = amputate(amputate(surface, second), first)
            assert one_way == other_way
            assert one_way == amputate(surface, first | second)

    def test_unknown_id_raises(self):
        with pytest.raises(ValueError):
            amputate(simple_surface(), {"Z"})
        with pytest.raises(ValueError):
            amputate(simple_surface(), set())


class TestDegreeConsistency:
    def test_degree_zero_essential(self):
        record = VerticalAnnulus("A1", 0, ("essential", "essential"))
        assert check_degree_consistency([record]) == []

    def test_degree_one_disks(self):
        record = VerticalAnnulus("A1", 1, ("disk-bounding", "disk-bounding"))
        assert check_degree_consistency([record]) == []

    def test_mixed_classes_flagged(self):
        record = VerticalAnnulus("A1", 1, ("essential", "disk-bounding"))
        violations = check_degree_consistency([record])
        assert any("mixed" in v for v in violations)

    def test_full_dichotomy(self):
        class_pairs = [
            ("essential", "essential"),
            ("essential", "disk-bounding"),
            ("disk-bounding", "disk-bounding"),
        ]
        for degree in range(4):
            for pair in class_pairs:
                record = VerticalAnnulus("X", degree, pair)
                ok = (degree == 0 and pair == ("essential", "essential")) or (
                    degree == 1 and pair == ("disk-bounding", "disk-bounding")
                )
                assert (check_degree_consistency([record]) == []) == ok, (degree, pair)

    def test_violations_accumulate_across_records(self):
        records = [
            VerticalAnnulus("A1", 0, ("essential", "essential")),
            VerticalAnnulus("A2", 2, ("essential", "essential")),
            VerticalAnnulus("A3", 0, ("disk-bounding", "disk-bounding")),
        ]
        violations = check_degree_consistency(records)
        assert len(violations) == 2
        assert not any("A1" in v for v in violations)


class TestTangencyCount:
    @pytest.mark.parametrize("degree,expected", [(0, 0), (1, 2), (3, 6)])
    def test_doubled_degree(self, degree, expected):
        record = VerticalAnnulus("A", degree, ("essential", "essential"))
        assert tangency_count(record) == expected

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            VerticalAnnulus("A", -1, ("essential", "essential"))

    def test_unknown_class_rejected(self):
        with pytest.raises(ValueError):
            VerticalAnnulus("A", 0, ("essential", "compressible"))


class TestSimplificationPredicates:
    def test_boundary_free(self):
        assert is_boundary_free(simple_surface())
        assert not is_boundary_free(amputate(simple_surface(), {"C"}))
        marked = BranchedSurface(sectors=(SectorRecord("A", boundary=True),))
        assert not is_boundary_free(marked)

    def test_sufficiently_positive(self):
        w = WeightFunction({"A": 5, "B": 7})
        assert is_sufficiently_positive(w, 4)
        assert not is_sufficiently_positive(w, 5)

    def test_sup_exceeds(self):
        surface = simple_surface()
        family = [
            WeightFunction({"A": 9, "B": 0, "C": 9}),
            WeightFunction({"A": 0, "B": 9, "C": 9}),
        ]
        assert sup_exceeds(surface, family, 8)
        assert not sup_exceeds(surface, family, 9)
        assert not sup_exceeds(surface, [family[0]], 8)


class TestSerialization:
    def test_round_trip(self):
        surface = BranchedSurface(
            sectors=(SectorRecord("A", -1, True), SectorRecord("B", 2)),
            branch_curves=(BranchCurve("A", "B", "A"),),
            boundary_curves=(BoundaryCurve("B", "in"),),
            vertical_annuli=(VerticalAnnulus("V", 1, ("disk-bounding", "disk-bounding")),),
        )
        assert surface_from_dict(surface_to_dict(surface)) == surface

    def test_json_keys_match_document_format(self):
        doc = surface_to_dict(simple_surface())
        assert set(doc["branch_curves"][0]) == {"out1", "out2", "in"}
        assert set(doc["sectors"][0]) == {"id", "cusped_euler", "boundary"}

    def test_defaults_and_missing_arrays(self):
        surface = surface_from_dict({"sectors": [{"id": "A"}]})
        assert surface.sectors == (SectorRecord("A", 0, False),)
        assert surface.branch_curves == ()

    def test_malformed_document(self):
        with pytest.raises(ValueError):
            surface_from_dict({"sectors": [{"no_id": 1}]})

    def test_load_surface_file(self, tmp_path):
        path = tmp_path / "surf.json"
        path.write_text(json.dumps(surface_to_dict(chain_surface())))
        assert load_surface(str(path)) == chain_surface()

    def test_weight_map_round_trip(self):
        w = WeightFunction({"B": 2, "A": 1})
        assert weights_from_dict(weights_to_dict(w)) == w
        assert list(weights_to_dict(w)) == ["A", "B"]
