"""Tests for GDFA symmetrization, Pharaoh files and orientations."""

import random

import pytest

from bitextminer.exceptions import AlignmentFormatError, ConfigurationError, InputMismatchError
from bitextminer.services.word_alignment import (
    Orientation,
    PhrasePair,
    WordAlignmentSet,
    classify_orientation,
    format_pharaoh_line,
    parse_pharaoh_line,
    read_pharaoh,
    symmetrize_files,
    symmetrize_gdfa,
    word_orientations,
)


def _set(points, src_len=3, tgt_len=3) -> WordAlignmentSet:
    return WordAlignmentSet(frozenset(points), src_len, tgt_len)


def _random_alignment(rng: random.Random, src_len: int, tgt_len: int) -> WordAlignmentSet:
    points = {
        (i, j)
        for i in range(src_len)
        for j in range(tgt_len)
        if rng.random() < 0.25
    }
    return _set(points, src_len, tgt_len)


class TestSymmetrizeGdfa:
    """Test grow-diag-final-and."""

    def test_grows_into_neighbours(self):
        forward = _set({(0, 0), (1, 1), (2, 1)})
        backward = _set({(0, 0), (1, 1), (1, 2)})
        assert symmetrize_gdfa(forward, backward).points == {(0, 0), (1, 1), (2, 1), (1, 2)}

    def test_final_and_adds_isolated_points(self):
        result = symmetrize_gdfa(_set({(0, 0)}), _set({(0, 0), (2, 2)}))
        assert result.points == {(0, 0), (2, 2)}

    def test_final_and_needs_both_words_unaligned(self):
        result = symmetrize_gdfa(_set({(0, 0), (2, 0)}), _set({(0, 0)}))
        assert result.points == {(0, 0)}

    def test_empty_directions(self):
        assert symmetrize_gdfa(_set(set()), _set(set())).points == frozenset()

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            symmetrize_gdfa(_set(set(), 2, 2), _set(set(), 3, 2))

    @pytest.mark.slow
    def test_bounded_by_intersection_and_union(self):
        rng = random.Random(99)
        for _ in range(10_000):
            src_len, tgt_len = rng.randint(0, 8), rng.randint(0, 8)
            forward = _random_alignment(rng, src_len, tgt_len)
            backward = _random_alignment(rng, src_len, tgt_len)
            result = symmetrize_gdfa(forward, backward).points
            assert forward.points & backward.points <= result <= forward.points | backward.points
            assert symmetrize_gdfa(forward, forward).points == forward.points

    def test_point_outside_sentence(self):
        with pytest.raises(ValueError):
            _set({(3, 0)})


class TestPharaoh:
    """Test Pharaoh alignment files."""

    def test_parse_and_format(self):
        points = parse_pharaoh_line("1-2 0-0  2-1")
        assert points == {(0, 0), (1, 2), (2, 1)}
        assert format_pharaoh_line(points) == "0-0 1-2 2-1"

    @pytest.mark.parametrize("item", ["1:2", "a-1", "1-", "-1"])
    def test_malformed_point(self, item):
        with pytest.raises(AlignmentFormatError):
            parse_pharaoh_line(item)

    def test_symmetrize_files(self, tmp_path):
        forward = tmp_path / "fwd.txt"
        backward = tmp_path / "bwd.txt"
        out = tmp_path / "sym.txt"
        forward.write_text("0-0 1-1 2-1\n\n0-0\n", encoding="utf-8")
        backward.write_text("0-0 1-1 1-2\n\n0-0 2-2\n", encoding="utf-8")
        assert symmetrize_files(forward, backward, out) == 3
        assert out.read_text(encoding="utf-8") == "0-0 1-1 1-2 2-1\n\n0-0 2-2\n"
        assert read_pharaoh(out)[1] == frozenset()

    def test_line_count_mismatch(self, tmp_path):
        forward = tmp_path / "fwd.txt"
        backward = tmp_path / "bwd.txt"
        forward.write_text("0-0\n0-0\n", encoding="utf-8")
        backward.write_text("0-0\n", encoding="utf-8")
        with pytest.raises(InputMismatchError):
            symmetrize_files(forward, backward, tmp_path / "out.txt")

    def test_unsupported_method(self, tmp_path):
        with pytest.raises(ConfigurationError):
            symmetrize_files(tmp_path / "a", tmp_path / "b", tmp_path / "c", method="intersection")

    def test_explicit_lengths_are_checked(self, tmp_path):
        forward = tmp_path / "fwd.txt"
        forward.write_text("4-0\n", encoding="utf-8")
        with pytest.raises(AlignmentFormatError):
            symmetrize_files(forward, forward, tmp_path / "out.txt", src_lengths=[2], tgt_lengths=[2])


class TestOrientation:
    """Test monotone / swap / discontinuous classification."""

    def test_classify(self):
        prev = PhrasePair(0, 1, 2, 3)
        assert classify_orientation(prev, PhrasePair(2, 2, 4, 5)) is Orientation.MONOTONE
        assert classify_orientation(prev, PhrasePair(2, 3, 0, 1)) is Orientation.SWAP
        assert classify_orientation(prev, PhrasePair(3, 3, 4, 4)) is Orientation.DISCONTINUOUS
        assert classify_orientation(prev, PhrasePair(2, 2, 7, 7)) is Orientation.DISCONTINUOUS

    def test_monotone_diagonal(self):
        orientations = word_orientations(_set({(0, 0), (1, 1), (2, 2)}))
        assert all(
            left is Orientation.MONOTONE and right is Orientation.MONOTONE
            for _, left, right in orientations
        )

    def test_swapped_words(self):
        orientations = word_orientations(_set({(0, 1), (1, 0)}, 2, 2))
        assert [(p, left.symbol, right.symbol) for p, left, right in orientations] == [
            ((0, 1), "D", "S"),
            ((1, 0), "S", "D"),
        ]

    def test_malformed_phrase(self):
        with pytest.raises(ValueError):
            PhrasePair(2, 1, 0, 0)
