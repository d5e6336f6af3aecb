#!/usr/bin/env python3
"""Lower a JAMS document into the typed model and validate it.

The validator re-checks every structural rule of the annotation pattern:
interval/index/component cardinalities, modality compatibility, index
shapes, annotator cardinality, identifier disjointness, confidence range.
A clean lowering produces an empty report; here we also sabotage the model
to show what a report looks like.
"""

from dataclasses import replace
from decimal import Decimal
from pathlib import Path

from muse_anno import (
    LoweringOptions,
    Modality,
    explain,
    lower_to_model,
    parse_jams,
    validate_model,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    doc = parse_jams((FIXTURES / "bohemian_rhapsody.jams").read_bytes())
    model = lower_to_model(doc, LoweringOptions(modality=Modality.AUDIO))

    report = validate_model(model)
    print(f"violations in the lowered fixture: {len(report)}")

    # Now break two rules on purpose: an out-of-range confidence and a
    # missing annotator.
    annotation = model.annotations[0]
    bad_obs = replace(annotation.observations[0], confidence=Decimal("1.5"))
    broken_annotation = replace(
        annotation, annotator=None,
        observations=(bad_obs,) + annotation.observations[1:])
    broken = replace(model, annotations=(broken_annotation,))

    print()
    print("after sabotage:")
    for violation in validate_model(broken):
        print(" ", violation.to_json_line())

    print()
    print("what the codes mean:")
    for code in ("V7", "V10"):
        print(" ", explain(code))


if __name__ == "__main__":
    main()
