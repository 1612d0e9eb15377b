"""Type headlines against the bundled seed prototypes.

One unit-norm centroid per event type; a headline gets the nearest type when
the similarity clears the threshold, otherwise it is out of scope (oos).
"""

from eventmon.classify import classify, fit_prototypes, load_seed_examples
from eventmon.config import BUNDLED_SEED_HEADLINES
from eventmon.embed import embed

examples = load_seed_examples(BUNDLED_SEED_HEADLINES)
protos = fit_prototypes(examples)
print(f"fitted {len(protos.prototypes)} prototypes from {len(examples)} seed headlines")
print(f"oos threshold: {protos.oos_threshold}")

samples = [
    "Flash floods sweep through villages after record rainfall",
    "Spreading wildfire forces evacuation of mountain homes",
    "Hamburg shooting: Multiple dead after attack at Jehovah Witness church in Germany",
    "Stock market closes higher after tech rally",
    "Museum opens new exhibition this weekend",
]

print("\nheadline -> (type, confidence)")
for text in samples:
    label, confidence = classify(embed(text), protos)
    print(f"  {label:10} {confidence:.3f}  {text}")
