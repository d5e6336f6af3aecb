"""IRI minting, emission, deterministic serialization, subset parsing."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from muse_anno import (
    AnnotationModel,
    IriMinter,
    Literal,
    RdfGraph,
    Triple,
    emit_graph,
    mint_iri,
    parse_turtle,
    serialize_ntriples,
    serialize_turtle,
)
from muse_anno import vocab
from muse_anno.errors import (
    InvalidBase,
    TurtleSyntax,
    UnsupportedConstruct,
    UnvalidatedModel,
)

from conftest import GOLDEN
from injections import BROKEN_MODELS
from usage_examples import build_michelle_model, build_mozart_model
from strategies import any_models


# --- minting -------------------------------------------------------------------

def test_mint_iri_concatenation_rule():
    minted = mint_iri("http://example.org/", "annotation",
                      ["01-bohemian-rhapsody", "0"])
    # Independent recomputation of the stated rule.
    expected = ("http://example.org/" + "annotation" + "/" +
                "/".join(["01-bohemian-rhapsody", "0"]))
    assert minted == expected


def test_mint_iri_slugs_discriminators():
    minted = mint_iri("http://example.org/", "Annotation",
                      ["01 Bohemian Rhapsody", "Bb:maj6"])
    assert minted == "http://example.org/annotation/01-bohemian-rhapsody/bb-maj6"


def test_mint_iri_deterministic():
    args = ("http://example.org/", "value", ["chord", "C:7"])
    assert mint_iri(*args) == mint_iri(*args)


def test_mint_iri_invalid_base():
    with pytest.raises(InvalidBase):
        mint_iri("not a iri", "annotation", ["x"])


def test_minter_resolves_slug_collisions_with_ordinals():
    minter = IriMinter("http://example.org/")
    first = minter.mint("value", ["chord", "C 7"], key=1)
    second = minter.mint("value", ["chord", "c:7"], key=2)
    assert first == "http://example.org/value/chord/c-7"
    assert second == "http://example.org/value/chord/c-7-2"
    # Same key returns the cached IRI, no new ordinal.
    assert minter.mint("value", ["chord", "C 7"], key=1) == first


# --- emission ------------------------------------------------------------------

def test_empty_model_emits_prefixes_only():
    graph = emit_graph(AnnotationModel())
    assert len(graph) == 0
    text = serialize_turtle(graph)
    assert text.count("@prefix") == 5
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("@prefix")]
    assert lines == []


def test_emit_rejects_invalid_models():
    with pytest.raises(UnvalidatedModel) as excinfo:
        emit_graph(BROKEN_MODELS["V4"]())
    assert excinfo.value.codes == ["V4"]


def test_emit_materializes_property_chain(bohemian_graph, bohemian_model):
    annotation = bohemian_model.annotations[0]
    for obs in annotation.observations:
        assert Triple(obs.id, vocab.HAS_ANNOTATOR,
                      annotation.annotator.id) in bohemian_graph
    assert Triple(annotation.annotator.id, vocab.IS_ANNOTATOR_OF,
                  annotation.id) in bohemian_graph


def test_emit_typing_totality(bohemian_graph):
    known_classes = (vocab.OBJECT_CLASSES | vocab.ANNOTATION_CLASSES
                     | vocab.OBSERVATION_CLASSES | vocab.VALUE_CLASSES
                     | {vocab.MUSIC_TIME_INTERVAL, vocab.MUSIC_TIME_INDEX,
                        vocab.MUSIC_TIME_INDEX_COMPONENT,
                        vocab.MUSIC_TIME_DURATION, vocab.ANNOTATOR})
    subjects = {t.subject for t in bohemian_graph.triples}
    for subject in subjects:
        types = bohemian_graph.types_of(subject)
        assert len(types) == 1
        assert types[0] in known_classes


def test_emit_cardinality_shadows(bohemian_graph):
    graph = bohemian_graph
    for interval in graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_INTERVAL):
        assert len(graph.objects(interval, vocab.HAS_MUSIC_TIME_INDEX)) == 1
        assert len(graph.objects(interval, vocab.HAS_MUSIC_TIME_DURATION)) == 1
    components = graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_INDEX_COMPONENT)
    durations = graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_DURATION)
    for node in components + durations:
        assert len(graph.objects(node, vocab.HAS_TIME_VALUE)) == 1
        assert len(graph.objects(node, vocab.HAS_MUSIC_TIME_VALUE_TYPE)) == 1


def test_emit_confidence_literals_preserve_lexical_form(bohemian_graph):
    confidences = {t.object.lexical
                   for t in bohemian_graph.matching(None, vocab.HAS_CONFIDENCE)}
    assert confidences == {"1.0"}


_KNOWN_CLASSES = (vocab.OBJECT_CLASSES | vocab.ANNOTATION_CLASSES
                  | vocab.OBSERVATION_CLASSES | vocab.VALUE_CLASSES
                  | {vocab.MUSIC_TIME_INTERVAL, vocab.MUSIC_TIME_INDEX,
                     vocab.MUSIC_TIME_INDEX_COMPONENT,
                     vocab.MUSIC_TIME_DURATION, vocab.ANNOTATOR})


@given(any_models)
@settings(max_examples=40)
def test_generated_graphs_keep_typing_and_cardinality_invariants(model):
    graph = emit_graph(model)
    for subject in {t.subject for t in graph.triples}:
        types = graph.types_of(subject)
        assert len(types) == 1 and types[0] in _KNOWN_CLASSES
    for interval in graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_INTERVAL):
        assert len(graph.objects(interval, vocab.HAS_MUSIC_TIME_INDEX)) == 1
        assert len(graph.objects(interval, vocab.HAS_MUSIC_TIME_DURATION)) == 1
    value_nodes = graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_INDEX_COMPONENT)
    value_nodes += graph.subjects(vocab.RDF_TYPE, vocab.MUSIC_TIME_DURATION)
    for node in value_nodes:
        assert len(graph.objects(node, vocab.HAS_TIME_VALUE)) == 1
        assert len(graph.objects(node, vocab.HAS_MUSIC_TIME_VALUE_TYPE)) == 1


# --- serialization ---------------------------------------------------------------

def test_serialization_is_byte_deterministic(bohemian_graph):
    assert serialize_turtle(bohemian_graph) == serialize_turtle(bohemian_graph)
    assert serialize_ntriples(bohemian_graph) == serialize_ntriples(bohemian_graph)


def test_ntriples_line_format():
    graph = RdfGraph()
    graph.add("http://example.org/a", "http://example.org/p", Literal("x"))
    text = serialize_ntriples(graph)
    assert text == '<http://example.org/a> <http://example.org/p> "x" .\n'


def test_ntriples_sorted_by_term_codepoints(bohemian_graph):
    from muse_anno.rdf import nt_term
    lines = serialize_ntriples(bohemian_graph).splitlines()
    assert len(lines) == len(bohemian_graph)
    keys = [(t.subject, t.predicate, nt_term(t.object))
            for t in bohemian_graph.sorted_triples()]
    assert keys == sorted(keys)
    # Both serializations present triples in the same order.
    first_subject = keys[0][0]
    assert lines[0].startswith(f"<{first_subject}>")


def test_turtle_golden_mozart():
    emitted = serialize_turtle(emit_graph(build_mozart_model()))
    assert emitted == (GOLDEN / "mozart_chords.ttl").read_text(encoding="utf-8")


def test_turtle_golden_michelle():
    emitted = serialize_turtle(emit_graph(build_michelle_model()))
    assert emitted == (GOLDEN / "michelle_segments.ttl").read_text(
        encoding="utf-8")


def test_turtle_golden_bohemian(bohemian_graph):
    emitted = serialize_turtle(bohemian_graph)
    assert emitted == (GOLDEN / "bohemian_rhapsody.ttl").read_text(
        encoding="utf-8")


# --- parsing -------------------------------------------------------------------

def test_parse_single_triple_document():
    graph = parse_turtle(
        "@prefix ex: <http://example.org/> . ex:a ex:p ex:b .")
    assert graph.triples == {Triple("http://example.org/a",
                                    "http://example.org/p",
                                    "http://example.org/b")}
    assert graph.prefixes == {"ex": "http://example.org/"}


def test_parse_round_trips_fixture_graphs(bohemian_graph):
    for model in (build_mozart_model(), build_michelle_model()):
        graph = emit_graph(model)
        assert parse_turtle(serialize_turtle(graph)) == graph
    assert parse_turtle(serialize_turtle(bohemian_graph)) == bohemian_graph


def test_parse_accepts_bare_numbers_and_a():
    graph = parse_turtle(
        "@prefix ex: <http://example.org/> .\n"
        "ex:x a ex:Thing ;\n  ex:n 42 ;\n  ex:d 0.50 .")
    objects = {t.predicate: t.object for t in graph.triples}
    assert objects["http://example.org/n"] == Literal("42", vocab.XSD_INTEGER)
    assert objects["http://example.org/d"] == Literal("0.50", vocab.XSD_DECIMAL)
    assert objects[vocab.RDF_TYPE] == "http://example.org/Thing"


def test_parse_skips_comments():
    graph = parse_turtle("# leading comment\n"
                         "@prefix ex: <http://example.org/> .\n"
                         "ex:a ex:p ex:b . # trailing comment\n")
    assert len(graph) == 1


def test_parse_string_escapes_round_trip():
    nasty = 'tab\t backslash\\ quote" newline\n cr\r bell\x07 unicodeé'
    graph = RdfGraph(prefixes={"ex": "http://example.org/"})
    graph.add("http://example.org/a", "http://example.org/p", Literal(nasty))
    for text in (serialize_turtle(graph), ):
        parsed = parse_turtle(text)
        assert parsed == graph


def test_parse_rejects_blank_nodes():
    with pytest.raises(UnsupportedConstruct):
        parse_turtle("@prefix ex: <http://e/> . ex:a ex:p [] .")
    with pytest.raises(UnsupportedConstruct):
        parse_turtle("@prefix ex: <http://e/> . _:b ex:p ex:a .")


def test_parse_rejects_collections_and_long_strings():
    with pytest.raises(UnsupportedConstruct):
        parse_turtle('@prefix ex: <http://e/> . ex:a ex:p (1 2) .')
    with pytest.raises(UnsupportedConstruct):
        parse_turtle('@prefix ex: <http://e/> . ex:a ex:p """x""" .')
    with pytest.raises(UnsupportedConstruct):
        parse_turtle('@prefix ex: <http://e/> . ex:a ex:p "x"@en .')
    with pytest.raises(UnsupportedConstruct):
        parse_turtle('@base <http://e/> .')


def test_parse_syntax_errors_report_location():
    with pytest.raises(TurtleSyntax) as excinfo:
        parse_turtle("@prefix ex: <http://e/> .\nex:a ex:p .")
    assert excinfo.value.line == 2
    with pytest.raises(TurtleSyntax) as excinfo:
        parse_turtle('@prefix ex: <http://e/> . ex:a ex:p "unterminated')
    assert excinfo.value.line == 1
    with pytest.raises(TurtleSyntax):
        parse_turtle("zz:a zz:p zz:b .")  # undeclared prefix


def test_parse_preserves_literal_lexical_forms():
    graph = parse_turtle(
        '@prefix ex: <http://example.org/> .\n'
        '@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n'
        'ex:a ex:p "1.500"^^xsd:decimal .')
    triple = next(iter(graph.triples))
    assert triple.object == Literal("1.500", vocab.XSD_DECIMAL)
