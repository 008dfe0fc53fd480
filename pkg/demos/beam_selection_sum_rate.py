"""
Beam selection and zero-forcing sum rate
========================================

The downlink sum rate depends on which beams the estimate points at and on
the zero-forcing precoder built from it.  This walk-through compares perfect
channel knowledge with increasingly noisy estimates.
"""

import sys
import warnings
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from onebit_ce.channel import ArrayGeometry, dft_matrix, random_channel
from onebit_ce.evaluation import BEAM_SELECTION_TAG, ia_beam_select, sum_rate

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demos")
out.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(3)
N, K = 32, 8
geometry = ArrayGeometry(N)
U = dft_matrix(N).matrix

# %%
# Each user claims its strongest beam; when two users want the same beam the
# stronger one keeps it and the other falls back to its next best.
H = random_channel(geometry, K, rng).matrix
beams = ia_beam_select(U @ H)
print("beam per user:", beams.tolist())

# %%
# Sum rate versus SNR for perfect CSI and for estimates with additive error
# of a given relative power (an NMSE of that many dB).
snrs = np.arange(-10, 25, 5)
levels = {"perfect": None, "NMSE -10 dB": -10, "NMSE -3 dB": -3}
curves = {name: [] for name in levels}
channels = [random_channel(geometry, K, rng).matrix for _ in range(200)]
for snr in snrs:
    for name, level in levels.items():
        rates = []
        for h in channels:
            if level is None:
                est = h
            else:
                err = rng.standard_normal(h.shape) + 1j * rng.standard_normal(h.shape)
                err *= np.linalg.norm(h) / np.linalg.norm(err) * 10 ** (level / 20)
                est = h + err
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                rates.append(sum_rate(h, est, float(snr)))
        curves[name].append(np.mean(rates))

for name, values in curves.items():
    print(f"{name:>12}: " + " ".join(f"{v:6.2f}" for v in values))

fig, ax = plt.subplots(figsize=(6, 4.5))
for name, values in curves.items():
    ax.plot(snrs, values, marker="o", label=name)
ax.set_xlabel("SNR (dB)")
ax.set_ylabel("sum rate (bit/s/Hz)")
ax.set_title(BEAM_SELECTION_TAG)
ax.legend()
ax.grid(True, alpha=0.3)
fig.tight_layout()
fig.savefig(out / "sum_rate.png", dpi=110)
