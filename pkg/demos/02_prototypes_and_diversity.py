"""Prototype selection and the two diversity measures, end to end.

Trains a quick metric extractor on glyphs, picks each concept's prototype
(the sample nearest the class embedding centroid), scores per-concept
diversity two ways, and renders the lowest- vs highest-diversity concepts.
"""

from pathlib import Path

import numpy as np

from divrec.data import make_weak_split
from divrec.evaluation import compute_prototypes
from divrec.extractors import embed, train_protonet_extractor
from divrec.figures import plot_concept_grid
from divrec.metrics import correlate, diversity_cosine, diversity_std
from divrec.synthetic import synthetic_dataset

OUT = Path(__file__).parent / "output" / "02_diversity"
OUT.mkdir(parents=True, exist_ok=True)

dataset = synthetic_dataset(num_alphabets=6, concepts_per_alphabet=6, seed=3)
train, test = make_weak_split(dataset, holdout_per_alphabet=2, seed=0)
print(f"training a metric extractor on {train.num_concepts} concepts (short schedule)...")
backbone, log = train_protonet_extractor(
    train, epochs=3, episodes_per_epoch=20, ways=12, eval_dataset=test, eval_episodes=40, seed=0
)
print(f"  final epoch: {log[-1]}")

prototypes = compute_prototypes(backbone, test)
print(f"selected {len(prototypes)} prototypes; e.g. concept "
      f"{next(iter(prototypes))} -> sample {next(iter(prototypes.values())).sample_index}")

std_scores, cos_scores = {}, {}
for cid in map(int, test.concept_ids):
    vectors = embed(backbone, test.samples(cid)).vectors
    std_scores[cid] = diversity_std(vectors).value          # Bessel std, l2-reduced
    cos_scores[cid] = diversity_cosine(vectors).value       # summed pairwise cosine distance

rho, p = correlate(list(std_scores.values()), list(cos_scores.values()), method="spearman")
print(f"the two dispersion measures rank concepts consistently: Spearman {rho:.2f} (p={p:.1e})")

ranked = sorted(std_scores, key=std_scores.get)
low, high = ranked[:3], ranked[-3:]
print("lowest-diversity concepts:", [(c, round(std_scores[c], 2)) for c in low])
print("highest-diversity concepts:", [(c, round(std_scores[c], 2)) for c in high])

plot_concept_grid(
    [test.samples(c)[:10] for c in low + high],
    [f"{c} ({std_scores[c]:.2f})" for c in low + high],
    OUT / "ranked_concepts.png",
    prototypes=[prototypes[c].image for c in low + high],
)
print(f"wrote {OUT / 'ranked_concepts.png'} (+ .csv)")
