"""Kapranov models, vital spans, and the span/boundary dictionary."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from m0n import (
    KapranovModel,
    VitalSpace,
    boundary_image,
    canonical_boundary,
    enumerate_boundaries,
    restrict_model,
    vital_span,
    vital_to_boundary,
)
from m0n.errors import ArityError, LabelError, SizeError


class TestModel:
    def test_basic_fields(self):
        model = KapranovModel(7, 4)
        assert model.ambient_dim == 4
        assert model.point_labels == frozenset({1, 2, 3, 5, 6, 7})
        assert model.psi_class == "psi_4"
        assert str(model) == "model(n=7, omitted=4)"

    def test_rejects_bad_arguments(self):
        with pytest.raises(LabelError):
            KapranovModel(6, 7)
        with pytest.raises(LabelError):
            KapranovModel(6, 0)
        with pytest.raises(SizeError):
            KapranovModel(3, 1)


class TestVitalSpan:
    def test_line_through_two_points(self):
        v = vital_span(KapranovModel(7, 4), {1, 2})
        assert v.dim == 1
        assert v.codim == 3
        assert not v.is_point
        assert not v.is_hyperplane
        assert str(v) == "V^4_{1,2}"

    def test_hyperplane(self):
        v = vital_span(KapranovModel(7, 4), {1, 2, 3, 5})
        assert v.dim == 3
        assert v.is_hyperplane

    def test_point(self):
        v = vital_span(KapranovModel(6, 1), {5})
        assert v.dim == 0
        assert v.is_point

    def test_rejects_spanning_sets(self):
        with pytest.raises(SizeError):
            vital_span(KapranovModel(5, 5), {1, 2, 3})

    def test_rejects_omitted_label(self):
        with pytest.raises(LabelError):
            vital_span(KapranovModel(7, 4), {3, 4})

    def test_rejects_empty_span(self):
        with pytest.raises(SizeError):
            vital_span(KapranovModel(7, 4), set())

    def test_rejects_foreign_labels(self):
        with pytest.raises(LabelError):
            vital_span(KapranovModel(6, 1), {2, 9})


class TestDictionary:
    @pytest.mark.parametrize(
        "n, omitted, span, rep",
        [
            (7, 4, {1, 2}, {1, 2, 4}),
            (5, 5, {2}, {1, 3, 4}),
            (6, 1, {2, 3}, {1, 2, 3}),
        ],
    )
    def test_span_to_boundary(self, n, omitted, span, rep):
        v = vital_span(KapranovModel(n, omitted), span)
        assert vital_to_boundary(v) == canonical_boundary(n, rep)

    @pytest.mark.parametrize(
        "n, omitted, rep, span",
        [
            (7, 5, {1, 2, 4}, {3, 6, 7}),
            (6, 1, {1, 2}, {2}),
            (6, 3, {1, 2}, {4, 5, 6}),
        ],
    )
    def test_boundary_to_span(self, n, omitted, rep, span):
        model = KapranovModel(n, omitted)
        b = canonical_boundary(n, rep)
        v = boundary_image(model, b)
        assert v.span == frozenset(span)
        assert v.dim == len(span) - 1

    def test_boundary_image_rejects_mixed_n(self):
        with pytest.raises(ArityError):
            boundary_image(KapranovModel(6, 1), canonical_boundary(7, {1, 2}))

    @pytest.mark.parametrize("n", range(4, 9))
    def test_roundtrip_every_model_and_boundary(self, n):
        listed = enumerate_boundaries(n)
        for omitted in range(1, n + 1):
            model = KapranovModel(n, omitted)
            for b in listed:
                v = boundary_image(model, b)
                assert vital_to_boundary(v) == b
                side = b.side_containing(omitted)
                assert v.dim == len(side) - 2


class TestRestriction:
    def test_merge_keeps_smaller_label(self):
        model, relabel = restrict_model(KapranovModel(7, 4), 6, 7)
        assert model == KapranovModel(6, 4)
        assert relabel == {1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 6}

    def test_merge_compresses_labels(self):
        model, relabel = restrict_model(KapranovModel(6, 6), 1, 2)
        assert model == KapranovModel(5, 5)
        assert relabel == {1: 1, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5}

    def test_rejects_equal_or_omitted_markings(self):
        with pytest.raises(LabelError):
            restrict_model(KapranovModel(5, 5), 1, 1)
        with pytest.raises(LabelError):
            restrict_model(KapranovModel(5, 5), 5, 2)
        with pytest.raises(SizeError):
            restrict_model(KapranovModel(4, 1), 2, 3)

    @given(st.data())
    def test_spans_avoiding_the_merged_pair_restrict_labelwise(self, data):
        n = data.draw(st.integers(5, 9), label="n")
        omitted = data.draw(st.integers(1, n), label="omitted")
        others = [x for x in range(1, n + 1) if x != omitted]
        h, k = data.draw(
            st.permutations(others).map(lambda p: tuple(p[:2])), label="merge pair"
        )
        free = [x for x in range(1, n + 1) if x not in (omitted, h, k)]
        size = data.draw(st.integers(1, max(1, n - 4)), label="size")
        span = frozenset(
            data.draw(
                st.sets(st.sampled_from(free), min_size=size, max_size=size),
                label="span",
            )
        )
        source = KapranovModel(n, omitted)
        restricted, relabel = restrict_model(source, h, k)
        assert relabel[h] == relabel[k] == relabel[min(h, k)]
        image = vital_span(restricted, {relabel[x] for x in span})
        assert image.dim == vital_span(source, span).dim
