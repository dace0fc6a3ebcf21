from fractions import Fraction

import pytest

from spectralpairs import (
    BoxDomain,
    DimensionMismatchError,
    DuplicateSpectrumError,
    FiniteSet,
    NonInvertibleError,
    OverlapError,
    Spectrum,
    enumerate_spectrum,
    integer_lattice,
    minkowski_translate,
    root_of_unity_condition,
    scaled_lattice,
    shift_spectrum,
    unit_box,
)


class TestBoxDomain:
    def test_measure(self):
        dom = BoxDomain.from_boxes([(0, 1), (2, 3)])
        assert dom.measure == 2

    def test_rational_corners(self):
        dom = BoxDomain.from_boxes([("1/3", "2/3")])
        assert dom.measure == Fraction(1, 3)

    def test_empty_box_rejected(self):
        with pytest.raises(ValueError):
            BoxDomain.from_boxes([(1, 1)])

    def test_overlapping_boxes_rejected(self):
        with pytest.raises(OverlapError):
            BoxDomain.from_boxes([(0, 2), (1, 3)])

    def test_touching_boxes_allowed(self):
        dom = BoxDomain.from_boxes([(0, 1), (1, 2)])
        assert dom.measure == 2

    def test_contains_half_open(self):
        dom = BoxDomain.interval(0, 1)
        assert dom.contains(0.0)
        assert dom.contains(0.999)
        assert not dom.contains(1.0)

    def test_json_roundtrip_bytestable(self):
        import json

        dom = BoxDomain.from_boxes([("0", "1/3"), ("1/2", "5/2")])
        blob = json.dumps(dom.to_json_dict())
        again = BoxDomain.from_json_dict(json.loads(blob))
        assert again == dom
        assert json.dumps(again.to_json_dict()) == blob

    def test_two_dimensional(self):
        dom = BoxDomain.from_boxes([((0, 0), (1, 1)), ((2, 0), (3, 1))])
        assert dom.dimension == 2
        assert dom.measure == 2


class TestMinkowskiTranslate:
    def test_two_interval_example(self):
        dom = minkowski_translate(BoxDomain.interval(0, 1), FiniteSet.from_ints(4, [0, 2]))
        assert dom.boxes == (
            ((Fraction(0),), (Fraction(1),)),
            ((Fraction(2),), (Fraction(3),)),
        )
        assert dom.measure == 2

    def test_identity_translate(self):
        base = BoxDomain.from_boxes([(0, 1), (2, 3)])
        assert minkowski_translate(base, FiniteSet.from_ints(7, [0])) == base

    def test_two_dimensional_translates(self):
        square = BoxDomain.from_boxes([((0, 0), (1, 1))])
        a = FiniteSet(4, 2, ((0, 0), (2, 0)))
        dom = minkowski_translate(square, a)
        assert len(dom.boxes) == 2
        assert dom.measure == 2

    def test_measure_scales_with_cardinality(self):
        base = BoxDomain.from_boxes([("0", "1/2"), ("3/4", "1")])
        a = FiniteSet.from_ints(9, [0, 2, 5])
        assert minkowski_translate(base, a).measure == 3 * base.measure

    def test_overlap_names_offenders(self):
        base = BoxDomain.interval(0, 2)
        with pytest.raises(OverlapError) as err:
            minkowski_translate(base, FiniteSet.from_ints(6, [0, 1]))
        assert err.value.offending == ((0,), (1,))

    def test_touching_translates_allowed(self):
        dom = minkowski_translate(BoxDomain.interval(0, 1), FiniteSet.from_ints(4, [0, 1]))
        assert dom.measure == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            minkowski_translate(unit_box(2), FiniteSet.from_ints(4, [0, 1]))


class TestSpectrum:
    def test_singular_basis_rejected(self):
        with pytest.raises(NonInvertibleError):
            Spectrum(2, (("1", "2"), ("2", "4")))

    def test_shifts_reduced_and_distinct(self):
        s = Spectrum(1, (("1",),), (("5/4",), ("1/2",)))
        assert s.shifts == ((Fraction(1, 4),), (Fraction(1, 2),))
        with pytest.raises(DuplicateSpectrumError):
            Spectrum(1, (("1",),), (("1/4",), ("5/4",)))

    def test_json_roundtrip_bytestable(self):
        import json

        s = Spectrum(2, (("1/2", "0"), ("1/3", "1")), (("0", "0"), ("1/4", "1/6")))
        blob = json.dumps(s.to_json_dict())
        again = Spectrum.from_json_dict(json.loads(blob))
        assert again == s
        assert json.dumps(again.to_json_dict()) == blob


class TestShiftSpectrum:
    def test_quarter_shifts(self):
        s = shift_spectrum(integer_lattice(1), FiniteSet.from_ints(4, [0, 1]), 4)
        assert s.shifts == ((Fraction(0),), (Fraction(1, 4),))

    def test_trivial_shift(self):
        base = integer_lattice(1)
        assert shift_spectrum(base, FiniteSet.from_ints(4, [0]), 4) == base

    def test_two_dimensional(self):
        j = FiniteSet(4, 2, ((0, 0), (1, 0)))
        s = shift_spectrum(integer_lattice(2), j, 4)
        assert s.shifts == (
            (Fraction(0), Fraction(0)),
            (Fraction(1, 4), Fraction(0)),
        )

    def test_collision_mod_lattice(self):
        # 2/4 lies inside the lattice (1/2)Z: both shifts reduce to 0
        with pytest.raises(DuplicateSpectrumError):
            shift_spectrum(scaled_lattice(1, "1/2"), FiniteSet.from_ints(4, [0, 2]), 4)

    def test_modulus_must_match(self):
        with pytest.raises(ValueError):
            shift_spectrum(integer_lattice(1), FiniteSet.from_ints(4, [0, 1]), 5)


class TestEnumerateSpectrum:
    def test_quarter_shift_example(self):
        s = shift_spectrum(integer_lattice(1), FiniteSet.from_ints(4, [0, 1]), 4)
        pts = enumerate_spectrum(s, 1)
        assert pts == [
            (Fraction(-1),),
            (Fraction(-3, 4),),
            (Fraction(0),),
            (Fraction(1, 4),),
            (Fraction(1),),
        ]

    def test_radius_zero(self):
        pts = enumerate_spectrum(integer_lattice(1), 0)
        assert pts == [(Fraction(0),)]

    def test_plain_lattice(self):
        pts = enumerate_spectrum(integer_lattice(1), 2)
        assert pts == [(Fraction(n),) for n in range(-2, 3)]

    def test_sorted_and_unique(self):
        s = Spectrum(1, (("1/2",),), (("0",), ("1/6",)))
        pts = enumerate_spectrum(s, 4)
        assert pts == sorted(set(pts))
        assert len(pts) == 33

    def test_growing_radius_is_monotone(self):
        s = shift_spectrum(integer_lattice(1), FiniteSet.from_ints(4, [0, 1]), 4)
        small = set(enumerate_spectrum(s, 3))
        large = set(enumerate_spectrum(s, 6))
        assert small <= large

    def test_two_dimensional_counts(self):
        pts = enumerate_spectrum(integer_lattice(2), 1)
        assert len(pts) == 9

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            enumerate_spectrum(integer_lattice(1), -1)


class TestRootOfUnityCondition:
    def test_integer_lattice_integer_points(self):
        assert root_of_unity_condition(integer_lattice(1), FiniteSet.from_ints(4, [0, 2]))

    def test_half_lattice_odd_translate_fails(self):
        # lambda = 1/2, a = 3: e^{3 pi i} = -1
        assert not root_of_unity_condition(scaled_lattice(1, "1/2"), FiniteSet.from_ints(6, [0, 3]))

    def test_half_lattice_even_translates(self):
        assert root_of_unity_condition(scaled_lattice(1, "1/2"), FiniteSet.from_ints(8, [0, 2, 4]))

    def test_trivial_set(self):
        assert root_of_unity_condition(scaled_lattice(1, "1/3"), FiniteSet.from_ints(6, [0]))

    def test_shift_vectors_participate(self):
        s = Spectrum(1, (("1",),), (("0",), ("1/3",)))
        assert not root_of_unity_condition(s, FiniteSet.from_ints(6, [0, 2]))
        assert root_of_unity_condition(s, FiniteSet.from_ints(6, [0, 3]))
