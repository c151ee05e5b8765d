"""
Evaluating against the nearest-word baseline
============================================

Trains on a synthetic 298/100 split of textspeak pairs and reports
accuracy@k and best/mean/worst edit distance of the top five suggestions for
each model variant, next to the nearest-vocabulary-word baseline.
"""

# %%
from ngramnorm import TrainConfig, evaluate, evaluate_baseline, train
from ngramnorm.preprocessing import train_test_split
from ngramnorm.synthetic import synthetic_pairs, vocabulary

pairs = synthetic_pairs(398, seed=1)
train_pairs, test_pairs = train_test_split(pairs, 100, seed=0)
vocab = vocabulary()


def show(name, report):
    acc = " ".join(f"{report.accuracy_at[k]:.2f}" for k in (1, 3, 5))
    print(
        f"{name:<24} {acc}   {report.dld_min:.2f} {report.dld_mean:.2f} {report.dld_max:.2f}"
        f"   {report.mean_inference_seconds * 1000:.2f} ms/word"
    )


print(f"{'model':<24} acc@1/3/5        DLD min/mean/max")
for variant in ("v1", "v2"):
    for ranker in ("dld", "likelihood"):
        model = train(train_pairs, vocab, TrainConfig(variant=variant, ranker=ranker)).model
        show(f"n-grams + {ranker} {variant}", evaluate(model, test_pairs))
show("nearest vocab (DLD)", evaluate_baseline(vocab, test_pairs).report)
