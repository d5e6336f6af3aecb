"""Competency questions: worked examples, oracle equivalence, errors."""

from __future__ import annotations

import pytest

from muse_anno import answer_cq, emit_graph, oracle_cq, vocab
from muse_anno.errors import SubjectNotFound, SubjectRequired, UnknownCq

from usage_examples import build_michelle_model, build_mozart_model


def _all_subject_calls(model):
    """Every (cq_id, subject) pair that is valid for this model."""
    calls = []
    annotations = model.annotations
    observations = [o for a in annotations for o in a.observations]
    for cq in (1, 2, 4, 8, 10):
        calls.append((cq, None))
    if model.subject is not None:
        calls.append((1, model.subject.id))
    for ann in annotations:
        for cq in (2, 3, 4, 8, 10):
            calls.append((cq, ann.id))
    for obs in observations:
        for cq in (5, 6, 7, 8, 9):
            calls.append((cq, obs.id))
    return calls


def test_cq7_first_fixture_observation(bohemian_graph, bohemian_model):
    obs = bohemian_model.annotations[0].observations[0]
    result = answer_cq(7, bohemian_graph, obs.id)
    assert result.columns == ("observation", "value", "value_kind", "label")
    assert result.rows == ((obs.id, obs.value.id, vocab.CHORD, "N"),)


def test_cq9_mozart_observation_is_empty():
    model = build_mozart_model()
    graph = emit_graph(model)
    obs = model.annotations[0].observations[0]
    assert answer_cq(9, graph, obs.id).rows == ()
    assert oracle_cq(9, model, obs.id).rows == ()


def test_cq9_fixture_observation_has_confidence(bohemian_graph, bohemian_model):
    obs = bohemian_model.annotations[0].observations[0]
    assert answer_cq(9, bohemian_graph, obs.id).rows == ((obs.id, "1.0"),)


def test_cq8_michelle_annotator_is_human():
    model = build_michelle_model()
    graph = emit_graph(model)
    annotation = model.annotations[0]
    result = answer_cq(8, graph, annotation.id)
    assert result.rows == ((annotation.id, annotation.annotator.id,
                            "Matthias Mauch", vocab.HUMAN),)


def test_cq10_mozart_annotation_addresses_the_score():
    model = build_mozart_model()
    graph = emit_graph(model)
    annotation = model.annotations[0]
    result = answer_cq(10, graph, annotation.id)
    assert result.rows == ((annotation.id,
                            "http://example.org/MozartPianoSonataScore"),)


def test_cq4_michelle_annotation_has_two_observations():
    model = build_michelle_model()
    graph = emit_graph(model)
    result = answer_cq(4, graph, model.annotations[0].id)
    assert len(result.rows) == 2


def test_cq3_fixture_annotation_start(bohemian_graph, bohemian_model,
                                      bohemian_doc):
    annotation = bohemian_model.annotations[0]
    result = answer_cq(3, bohemian_graph, annotation.id)
    # Independent oracle: minimum over the source rows, computed by scan.
    earliest = min(row.time for block in bohemian_doc.annotations
                   for row in block.data)
    assert result.rows == ((annotation.id, str(earliest), vocab.SECONDS),)
    assert str(earliest) == "0.0"


def test_cq2_reports_synthesized_time_frame(bohemian_graph, bohemian_model):
    annotation = bohemian_model.annotations[0]
    result = answer_cq(2, bohemian_graph, annotation.id)
    assert result.rows == ((annotation.id, "0.0", vocab.SECONDS,
                            "4.911", vocab.SECONDS),)


def test_cq1_returns_both_type_columns(bohemian_graph, bohemian_model):
    result = answer_cq(1, bohemian_graph)
    assert result.rows == ((bohemian_model.subject.id,
                            bohemian_model.annotations[0].id,
                            vocab.AUDIO_MUSIC_ANNOTATION, vocab.CHORD),)


def test_cq5_cq6_observation_time_frame(bohemian_graph, bohemian_model):
    obs = bohemian_model.annotations[0].observations[1]
    start = answer_cq(5, bohemian_graph, obs.id)
    assert start.rows == ((obs.id, "0.459", vocab.SECONDS),)
    frame = answer_cq(6, bohemian_graph, obs.id)
    assert frame.rows == ((obs.id, "0.459", vocab.SECONDS,
                           "3.663", vocab.SECONDS),)


def test_oracle_equivalence_on_fixture_models(bohemian_model, michelle_model,
                                              mozart_score_model):
    for model in (bohemian_model, michelle_model, mozart_score_model,
                  build_mozart_model(), build_michelle_model()):
        graph = emit_graph(model)
        for cq, subject in _all_subject_calls(model):
            assert answer_cq(cq, graph, subject) == \
                oracle_cq(cq, model, subject), f"CQ{cq} subject={subject}"


def test_cq8_observation_matches_annotation(bohemian_model, bohemian_graph):
    annotation = bohemian_model.annotations[0]
    annotation_row = answer_cq(8, bohemian_graph, annotation.id).rows[0]
    for obs in annotation.observations:
        obs_row = answer_cq(8, bohemian_graph, obs.id).rows[0]
        assert obs_row[1:] == annotation_row[1:]


def test_totality_and_unknown_ids(bohemian_graph, bohemian_model):
    for cq in range(1, 11):
        subject = None
        if cq in (3,):
            subject = bohemian_model.annotations[0].id
        elif cq in (5, 6, 7, 9):
            subject = bohemian_model.annotations[0].observations[0].id
        result = answer_cq(cq, bohemian_graph, subject)
        assert result.cq_id == cq
    for bad in (0, 11, -3, "7", None, True):
        with pytest.raises(UnknownCq):
            answer_cq(bad, bohemian_graph)
        with pytest.raises(UnknownCq):
            oracle_cq(bad, bohemian_model)


def test_subject_required(bohemian_graph, bohemian_model):
    for cq in (3, 5, 6, 7, 9):
        with pytest.raises(SubjectRequired):
            answer_cq(cq, bohemian_graph)
        with pytest.raises(SubjectRequired):
            oracle_cq(cq, bohemian_model)


def test_subject_not_found(bohemian_graph, bohemian_model):
    ghost = "http://example.org/observation/ghost"
    with pytest.raises(SubjectNotFound):
        answer_cq(7, bohemian_graph, ghost)
    with pytest.raises(SubjectNotFound):
        oracle_cq(7, bohemian_model, ghost)
    # An annotation IRI is not an observation.
    with pytest.raises(SubjectNotFound):
        answer_cq(5, bohemian_graph, bohemian_model.annotations[0].id)


def test_rows_are_sorted(bohemian_graph):
    result = answer_cq(4, bohemian_graph)
    assert list(result.rows) == sorted(result.rows)


def test_tsv_and_json_rendering(bohemian_graph, bohemian_model):
    obs = bohemian_model.annotations[0].observations[0]
    result = answer_cq(7, bohemian_graph, obs.id)
    tsv = result.to_tsv()
    lines = tsv.splitlines()
    assert lines[0] == "observation\tvalue\tvalue_kind\tlabel"
    assert lines[1].endswith("\tN")
    as_json = result.to_json()
    assert '"cq": 7' in as_json
    assert result.to_tsv() == tsv  # deterministic


def test_tsv_escapes_control_cells():
    from muse_anno.cq import CqResult
    result = CqResult(7, ("a",), (("x\ty\nz",),))
    assert result.to_tsv().splitlines()[1] == "x\\ty\\nz"
