"""
Cross-validation and cutoff sweeps
==================================

Five-fold cross-validation reports each metric as mean ± std over folds. The
sweep shows how accuracy@1 and inference time move with the cutoff; the CSV
it writes is ready for plotting.
"""

# %%
import tempfile
from pathlib import Path

from ngramnorm import TrainConfig, cross_validate, sweep_cutoff
from ngramnorm.evaluation import write_sweep_csv
from ngramnorm.synthetic import synthetic_pairs, vocabulary

pairs = synthetic_pairs(398, seed=3)

for ranker in ("dld", "likelihood"):
    cv = cross_validate(pairs, folds=5, seed=7, config=TrainConfig(ranker=ranker), vocabulary=vocabulary())
    row = cv.table_row()
    print(ranker, "  ".join(f"{k}={row[k]}" for k in ("acc@1", "acc@3", "acc@5", "dld_min", "dld_mean", "dld_max")))

# %%
rows = sweep_cutoff(pairs[:298], [1, 5, 10, 30, 100], TrainConfig(), test_pairs=pairs[298:], vocabulary=vocabulary())
for r in rows:
    print(f"cutoff={r.cutoff:<4} acc@1={r.accuracy_at_1:.2f} candidates={r.mean_candidates:6.1f} {r.mean_inference_seconds * 1000:.2f} ms/word")

out = Path(tempfile.mkdtemp()) / "sweep.csv"
write_sweep_csv(rows, out)
print(out.read_text().splitlines()[0])
