"""Dataset walkthrough: loading, the weak split, episodes, and context sets.

Runs on the bundled procedural glyph corpus so no download is needed; point
DIVREC_DATA_ROOT at a real Omniglot-layout tree to run on the real data.
"""

import os
from pathlib import Path

from divrec.data import (
    augment_classes_rotations_reflections,
    load_omniglot,
    make_context_batches,
    make_weak_split,
    sample_episode,
    save_cache,
)
from divrec.synthetic import synthetic_dataset

OUT = Path(__file__).parent / "output" / "01_dataset"
OUT.mkdir(parents=True, exist_ok=True)

root = os.environ.get("DIVREC_DATA_ROOT")
if root:
    dataset = load_omniglot(root)
    print(f"loaded {dataset.num_concepts} concepts from {root}")
else:
    dataset = synthetic_dataset(num_alphabets=6, concepts_per_alphabet=8, seed=0)
    print(f"built a synthetic corpus: {dataset.num_concepts} concepts, "
          f"{dataset.samples_per_concept} samples each, {len(dataset.alphabets())} alphabets")

# --- the weak generalization split: 3 held-out symbols per alphabet -----
train, test = make_weak_split(dataset, holdout_per_alphabet=3, seed=0)
print(f"weak split: {train.num_concepts} train / {test.num_concepts} test concepts")
print(f"every alphabet still trains: {sorted(train.alphabets()) == sorted(dataset.alphabets())}")

# --- episodes for one-shot classification -------------------------------
episode = sample_episode(test, ways=min(20, test.num_concepts), shots=1, queries=1, seed=1)
print(f"episode: {episode.ways}-way {episode.shots}-shot, "
      f"{len(episode.query_images)} queries, support {episode.support_images.shape}")

# --- class-level rotations/reflections mint new concepts ----------------
augmented = augment_classes_rotations_reflections(train)
print(f"class augmentation: {train.num_concepts} -> {augmented.num_concepts} concepts "
      f"({len(augmented.provenance)} derived, tags like "
      f"{sorted({t for _, t in augmented.provenance.values()})[:3]} ...)")

# --- same-class context sets for the context-conditioned model ----------
batches = list(make_context_batches(train, context_size=5, seed=0))
print(f"context batching: {len(batches)} sets of 5 "
      f"({len(batches) // train.num_concepts} per concept, remainder dropped)")

cache = save_cache(train, OUT / "train_cache", split_seed=0)
print(f"cached preprocessed split at {cache} (images.npy + manifest.json)")
