#!/usr/bin/env python3
"""Score-side annotations: metrical time instead of seconds.

Stock JAMS cannot say "measure 1, beat 3"; this package reads the
per-row sandbox keys ``measure``, ``beat`` and ``duration_beats`` as its
one input extension.  Score intervals index by (Measure, Beat) pairs and
measure durations in beats, and ``interval_end`` does beat arithmetic.
"""

from pathlib import Path

from muse_anno import (
    LoweringOptions,
    Modality,
    emit_graph,
    interval_end,
    lower_to_model,
    parse_jams,
    serialize_turtle,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    doc = parse_jams((FIXTURES / "mozart_sonata_score.jams").read_bytes())
    model = lower_to_model(doc, LoweringOptions(modality=Modality.SCORE))

    for obs in model.annotations[0].observations:
        measure, beat = obs.interval.index.components
        end, unit = interval_end(obs.interval)
        print(f"{obs.value.label:<4} measure {measure.value}, "
              f"beat {beat.value}, lasts {obs.interval.duration.value} beats "
              f"(ends at beat offset {end} {unit.value})")

    turtle = serialize_turtle(emit_graph(model))
    score_lines = [line for line in turtle.splitlines()
                   if "Measure" in line or "ScoreMusic" in line]
    print()
    print("score-flavoured triples in the emitted Turtle:")
    for line in score_lines[:6]:
        print(" ", line.strip())


if __name__ == "__main__":
    main()
