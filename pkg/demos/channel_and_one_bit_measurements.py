"""
Channels, beamspace sparsity and one-bit measurements
=====================================================

Draw a multi-user mmWave channel, look at it in the angular domain, pass
pilots through one-bit ADCs and see how much a plain matched filter can
recover from the signs alone.

Run with ``python demos/channel_and_one_bit_measurements.py [OUT_DIR]``;
the figure goes to ``OUT_DIR`` (default ``runs/demos``).
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from onebit_ce.cgan import matched_filter_estimate, matched_filter_gain
from onebit_ce.channel import (ArrayGeometry, ChannelRealization, Domain, dft_matrix,
                               random_channel, to_angular)
from onebit_ce.evaluation import nmse_db
from onebit_ce.measurement import NoiseModel, generate_pilots, observe

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demos")
out.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(0)

# %%
# A 32-antenna array serving 8 users, 10 paths each.  Each column of ``H``
# is one user's channel; its squared norm is N on average.
N, K, Q = 32, 8, 4
geometry = ArrayGeometry(N)
H = random_channel(geometry, K, rng)
print("per-user power:", np.round(np.linalg.norm(H.matrix, axis=0) ** 2, 1))

# %%
# The DFT transform concentrates each path on a few beams, so the angular
# channel is approximately sparse.
U = dft_matrix(N)
A = to_angular(H, U).matrix
energy = np.sort(np.abs(A) ** 2, axis=0)[::-1]
top = energy[:10].sum(axis=0) / energy.sum(axis=0)
print("share of energy in the 10 strongest beams:", np.round(top, 2))

fig, axes = plt.subplots(1, 2, figsize=(9, 4))
axes[0].imshow(np.abs(H.matrix), aspect="auto")
axes[0].set_title("|H| spatial")
axes[1].imshow(np.abs(A), aspect="auto")
axes[1].set_title("|U H| angular")
for ax in axes:
    ax.set_xlabel("user")
axes[0].set_ylabel("antenna / beam")
fig.tight_layout()
fig.savefig(out / "channel_domains.png", dpi=110)

# %%
# One-bit observations keep only the quadrant of every received sample.
# Scoring a scaled matched filter ``a Y P^H / Q`` across SNR shows how
# little amplitude information survives with four pilots.
pilots = generate_pilots(K, Q, seed=1)
train = [random_channel(geometry, K, rng).matrix for _ in range(300)]
test = [random_channel(geometry, K, rng).matrix for _ in range(300)]


def signs(hs, noise):
    return np.stack([observe(ChannelRealization(h, Domain.SPATIAL), pilots, noise,
                             seed=int(rng.integers(2**31))).matrix for h in hs])


for snr in (-10, 0, 10, 20):
    noise = NoiseModel.from_snr_db(snr)
    y_train, y_test = signs(train, noise), signs(test, noise)
    gain = matched_filter_gain(y_train, pilots.matrix, np.stack(train))
    est = matched_filter_estimate(y_test, pilots.matrix, gain)
    print(f"SNR {snr:>4} dB  matched-filter NMSE {nmse_db(est, np.stack(test)):6.2f} dB")
