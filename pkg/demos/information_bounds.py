"""
Fano and replay bounds
======================

Closed-form bounds on missing context information, then a brute-force check
on random exact joints.
"""

import numpy as np

from bcpo.infotheory import (JointPMF, bayes_error, fano_processing_bound, fano_window_floor,
                             mutual_information, replay_gap_bound, verify_bound)

N = 4
for delta in (0.0, 0.1, 0.3, 0.6):
    print(f"delta={delta}: H(C|O) <= {fano_processing_bound(delta, N):.4f}, "
          f"I(C;O) >= {fano_window_floor(delta, N):.4f}")

# %%
# A concrete window: each context emits its own symbol with prob 0.7.
cond = np.full((N, N), 0.1) + np.eye(N) * 0.6
j = JointPMF(("C", "O"), cond / N)
delta = bayes_error(j, "C", "O")
print(f"Bayes error {delta:.3f}, I(C;O) = {mutual_information(j, 'C', 'O'):.4f}, "
      f"floor {fano_window_floor(delta, N):.4f}")

# %%
# Stale replay data shifts MI estimates by at most the replay bound.
for eps in (0.05, 0.2, 0.5):
    print(f"epsilon={eps}: |I_t - I_b| <= {replay_gap_bound(eps, N):.4f}")

rng = np.random.default_rng(1)
for kind in ("fano", "replay"):
    rep = verify_bound(kind, 2000, rng)
    print(kind, rep.to_dict())
