"""
Two-stage estimation end to end
===============================

A miniature version of the full experiment: generate data, train the
adversarial coarse estimator, build its coarse-estimate corpus, train the
residual denoiser in both domains, and score everything on the held-out
set.  The networks are tiny so this finishes in about a minute on a CPU;
the numbers are a smoke check, not a benchmark.  ``onebit-ce reproduce``
runs the same steps at desk scale.
"""

import sys
from pathlib import Path

from onebit_ce import pipeline
from onebit_ce.config import preset_config

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demos") / "two_stage"

# %%
# Start from the desk preset and shrink everything.
config = preset_config(
    "desk", num_antennas=16, num_users=4, num_pilots=4, num_samples=800,
    num_test_samples=350, gen_filters=16, disc_filters=8, ridnet_filters=8,
    eau_count=2, cgan_epochs=3, ridnet_epochs=3, output_dir=str(root))

# %%
# ``run_experiment`` writes ``data/``, ``cgan/``, ``coarse_corpus/`` and one
# ``ridnet_<domain>/`` directory.  Rerunning reuses whatever is current.
layout = pipeline.run_experiment(config, root)

estimators = pipeline.load_estimators(
    layout.cgan(), {d: layout.ridnet(d) for d in ("spatial", "angular")})
report = pipeline.eval_nmse(config, [(layout.test_data, estimators)], root / "eval", plot=True)

# %%
# One row per estimator and SNR; the CSV and plot land in ``eval/``.
names = sorted({r["estimator"] for r in report.rows})
print("SNR   " + "".join(f"{n:>15}" for n in names))
for snr in config.snr_grid:
    print(f"{snr:>4}  " + "".join(f"{report.value(n, snr):15.2f}" for n in names))
