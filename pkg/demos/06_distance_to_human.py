"""Placing models and the human reference in one standardized space.

Evaluates the real test samples (the human point) and two quickly trained
generators, standardizes both axes, reports z-scored distances to human, and
renders the scatter, the distance distributions, and a per-concept radar of
the concepts each model imitates best.
"""

from pathlib import Path

from divrec.classifiers import ProtoClassifier
from divrec.data import make_weak_split
from divrec.evaluation import EvaluationSettings, compute_prototypes, generator_point, human_point
from divrec.extractors import train_protonet_extractor
from divrec.figures import plot_distance_distributions, plot_per_concept_radar, plot_points
from divrec.generators import DaGanConfig, VaeNsConfig, train_dagan, train_vae_ns
from divrec.metrics import closest_concepts, per_concept_distance, zscore_and_distance
from divrec.synthetic import synthetic_dataset

OUT = Path(__file__).parent / "output" / "06_distance"
OUT.mkdir(parents=True, exist_ok=True)

dataset = synthetic_dataset(num_alphabets=6, concepts_per_alphabet=5, seed=23)
train, test = make_weak_split(dataset, holdout_per_alphabet=2, seed=0)
backbone, _ = train_protonet_extractor(train, epochs=3, episodes_per_epoch=20, ways=12, seed=0)
classifier = ProtoClassifier(backbone)
prototypes = compute_prototypes(backbone, test)
settings = EvaluationSettings(ways=min(12, test.num_concepts), n_draws=4, n_generate=12,
                              master_seed=0)

print("evaluating the human reference point from real test samples...")
human = human_point(test, backbone, classifier, prototypes, settings)
print(f"  human: diversity={human.mean_diversity:.3f} "
      f"recognizability={human.mean_recognizability:.3f}")

points = [human]
per_model_tables = {}
for kind, trainer in {
    "vae_ns": lambda: train_vae_ns(train, VaeNsConfig(context_size=5), epochs=5, batch=8,
                                   augment_classes=False, max_batches_per_epoch=6, seed=0),
    "dagan_un": lambda: train_dagan(train, DaGanConfig(), epochs=4, batch=16,
                                    max_steps_per_epoch=12, seed=0),
}.items():
    print(f"training {kind} (reduced schedule)...")
    model, _ = trainer()
    point, _ = generator_point(kind, model, test, backbone, classifier, prototypes, settings)
    points.append(point)
    per_model_tables[kind] = per_concept_distance(point, human)
    print(f"  {kind}: diversity={point.mean_diversity:.3f} "
          f"recognizability={point.mean_recognizability:.3f}")

distances = zscore_and_distance(points)
print("z-scored distances to human:", {k: round(v, 3) for k, v in distances.items()})

plot_points(points, OUT / "points.png", highlight=[p.model_id for p in points])
plot_distance_distributions({k: [v] for k, v in distances.items() if k != "human"},
                            OUT / "distances.png")

# radar over the concepts each model approximates best (8 per model)
order = []
for table in per_model_tables.values():
    order += [c for c in closest_concepts(table, k=8) if c not in order]
plot_per_concept_radar(per_model_tables, order[:16], OUT / "radar.png")
print(f"figures + csv files under {OUT}")
