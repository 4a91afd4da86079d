"""
Sufficiency certificates on tabular instances
=============================================

A window can identify the context perfectly while still being useless for
control: in the two-armed bandit the code sees which arm paid, but only
after the single decision was made.
"""

import numpy as np

from bcpo.oracles import (DiscreteEncoder, TrajectoryWindow, build_instance, certify_sufficiency,
                          mirrored_cmdp, random_cmdp)

# The bandit: observation sufficient, yet the best code-conditioned return is |2p - 1|.
for p in (0.6, 0.7, 0.8, 0.9):
    inst = build_instance({"preset": "bandit", "p": p})
    r = certify_sufficiency(inst.cmdp, inst.encoder, inst.window)
    print(f"p={p}: observation={r.observation_sufficient} weak={r.weak_control} "
          f"J_policy={r.J_policy:.3f} J*={r.J_star:.3f} gap={r.return_gap:.3f}")

# %%
# An identity code on a random instance keeps everything: no residual, no return gap.
rng = np.random.default_rng(0)
m = random_cmdp(rng, 3, 2, 3)
w = TrajectoryWindow(1, horizon=2)
r = certify_sufficiency(m, DiscreteEncoder.identity(w.law(m).n_obs), w)
print("identity:", r.observation_sufficient, r.weak_control, r.strong_control, f"delta_I={r.delta_I:.2e}")

# %%
# Merging two contexts that prefer opposite actions costs both information and return.
m = mirrored_cmdp(rng, 3)
r = certify_sufficiency(m, DiscreteEncoder.constant(w.law(m).n_obs), w)
print(f"merged: delta_I={r.delta_I:.4f} nats, return gap={r.return_gap:.4f}")
print(r.to_json()[:400], "...")
