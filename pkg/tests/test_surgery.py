import json
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z2index.exactlinalg import IntMatrix, cokernel_structure
from z2index.surgery import (
    PresentationError,
    SurgeryPresentation,
    connected_sum,
    empty_presentation,
    lens_presentation,
    linking_matrix,
    negative_continued_fraction,
    parse_presentation,
    serialize_presentation,
)


@st.composite
def presentations(draw, max_components=5, bound=9):
    m = draw(st.integers(0, max_components))
    framings = tuple(draw(st.lists(
        st.integers(-bound, bound), min_size=m, max_size=m)))
    linkings = tuple(draw(st.lists(
        st.integers(-bound, bound),
        min_size=m * (m - 1) // 2, max_size=m * (m - 1) // 2)))
    label = draw(st.one_of(st.none(), st.text(max_size=8)))
    return SurgeryPresentation(framings, linkings, label)


class TestLinkingMatrix:
    def test_empty(self):
        b = linking_matrix(empty_presentation())
        assert b.rows == 0 and b.cols == 0

    def test_single_unknot(self):
        pres = SurgeryPresentation((-4,), (), None)
        assert linking_matrix(pres).to_lists() == [[-4]]

    def test_unlink(self):
        pres = SurgeryPresentation((2, 2), (0,), None)
        assert linking_matrix(pres).to_lists() == [[2, 0], [0, 2]]

    @given(presentations())
    @settings(max_examples=80, deadline=None)
    def test_always_symmetric(self, pres):
        b = linking_matrix(pres)
        assert b.is_symmetric
        m = pres.component_count
        for i in range(m):
            for j in range(m):
                assert b.entries[i][j] == pres.linking(i, j)


class TestLensPresentation:
    def test_paper_fixtures(self):
        assert linking_matrix(lens_presentation(4, 1)).to_lists() == [[-4]]
        assert linking_matrix(lens_presentation(2, 1)).to_lists() == [[-2]]
        assert linking_matrix(lens_presentation(7, 2)).to_lists() == \
            [[-4, 1], [1, -2]]

    def test_continued_fraction(self):
        assert negative_continued_fraction(7, 2) == [4, 2]
        assert negative_continued_fraction(5, 4) == [2, 2, 2, 2]

    def test_invalid_parameters(self):
        for p, q in ((1, 1), (4, 2), (5, 5), (5, 0), (3, -1)):
            with pytest.raises(PresentationError):
                lens_presentation(p, q)

    def test_determinant_and_cokernel(self):
        for p in range(2, 60):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                b = linking_matrix(lens_presentation(p, q))
                assert abs(b.det()) == p
                g = cokernel_structure(b)
                assert g.free_rank == 0
                assert g.invariant_factors == ((p,) if p > 1 else ())

    def test_determinant_larger_p(self):
        rng = random.Random(3)
        for _ in range(25):
            p = rng.randint(2, 500)
            q = rng.choice([q for q in range(1, p) if gcd(p, q) == 1])
            b = linking_matrix(lens_presentation(p, q))
            g = cokernel_structure(b)
            assert g.invariant_factors == (p,) and g.free_rank == 0


class TestConnectedSum:
    def test_block_sum(self):
        s = connected_sum(lens_presentation(2, 1), lens_presentation(2, 1))
        assert linking_matrix(s).to_lists() == [[-2, 0], [0, -2]]
        g = cokernel_structure(linking_matrix(s))
        assert g.invariant_factors == (2, 2)

    def test_identity(self):
        pres = SurgeryPresentation((2, 2), (1,), "x")
        summed = connected_sum(pres, empty_presentation(label=None))
        assert summed.framings == pres.framings
        assert summed.linkings == pres.linkings

    def test_diag_two_two(self):
        a = SurgeryPresentation((2,), (), None)
        assert linking_matrix(connected_sum(a, a)).to_lists() == \
            [[2, 0], [0, 2]]

    @given(presentations(max_components=3), presentations(max_components=3))
    @settings(max_examples=60, deadline=None)
    def test_cokernel_is_direct_sum(self, a, b):
        merged = cokernel_structure(linking_matrix(connected_sum(a, b)))
        ga = cokernel_structure(linking_matrix(a))
        gb = cokernel_structure(linking_matrix(b))
        # canonical invariant factors of the direct sum, via a diagonal
        # presentation of the two groups side by side
        diag = (ga.invariant_factors + gb.invariant_factors
                + (0,) * (ga.free_rank + gb.free_rank))
        expected = cokernel_structure(IntMatrix.diagonal(diag))
        assert merged == expected


class TestParse:
    def test_matrix_document(self):
        pres = parse_presentation('{"matrix": [[-4]]}')
        assert pres.component_count == 1 and pres.framings == (-4,)

    def test_linked_pair(self):
        pres = parse_presentation('{"matrix": [[2, 1], [1, 2]]}')
        assert pres.component_count == 2
        assert pres.linking(0, 1) == 1

    def test_label(self):
        pres = parse_presentation('{"matrix": [[0]], "label": "zero"}')
        assert pres.label == "zero"

    def test_rejects_asymmetric(self):
        with pytest.raises(PresentationError, match="symmetric"):
            parse_presentation('{"matrix": [[0, 1], [0, 0]]}')

    def test_symmetrize_when_not_strict(self):
        pres = parse_presentation('{"matrix": [[0, 1], [0, 0]]}',
                                  strict=False)
        assert pres.linking(1, 0) == 1

    def test_rejects_malformed_json(self):
        with pytest.raises(PresentationError, match="malformed"):
            parse_presentation("{nope")

    def test_rejects_non_integer(self):
        with pytest.raises(PresentationError, match="non-integer"):
            parse_presentation('{"matrix": [[1.5]]}')
        with pytest.raises(PresentationError, match="non-integer"):
            parse_presentation('{"matrix": [[true]]}')

    def test_rejects_non_square(self):
        with pytest.raises(PresentationError, match="square"):
            parse_presentation('{"matrix": [[1, 2]]}')

    def test_rejects_unknown_keys(self):
        with pytest.raises(PresentationError, match="unknown"):
            parse_presentation('{"matrix": [[1]], "frob": 2}')

    def test_rejects_both_matrix_and_preset(self):
        with pytest.raises(PresentationError, match="exactly one"):
            parse_presentation('{"matrix": [[1]], "preset": "s3"}')

    def test_preset_s3(self):
        pres = parse_presentation('{"preset": "s3"}')
        assert pres.component_count == 0

    def test_preset_lens(self):
        pres = parse_presentation('{"preset": "lens", "p": 7, "q": 2}')
        assert linking_matrix(pres).to_lists() == [[-4, 1], [1, -2]]

    def test_preset_connected_sum(self):
        doc = json.dumps({
            "preset": "connected_sum",
            "parts": [
                {"preset": "lens", "p": 2, "q": 1},
                {"matrix": [[2]]},
            ],
        })
        pres = parse_presentation(doc)
        assert linking_matrix(pres).to_lists() == [[-2, 0], [0, 2]]

    def test_preset_unknown(self):
        with pytest.raises(PresentationError, match="unknown preset"):
            parse_presentation('{"preset": "torus"}')

    @given(presentations())
    @settings(max_examples=80, deadline=None)
    def test_roundtrip(self, pres):
        assert parse_presentation(serialize_presentation(pres)) == pres
