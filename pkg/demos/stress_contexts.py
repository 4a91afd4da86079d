"""
Stress-testing a policy across contexts
=======================================

Trains a tiny policy, then sweeps the mass scale well past the training range.
Point ``load_policy`` at a full-size checkpoint for a meaningful curve.
"""

import tempfile
from importlib import resources
from pathlib import Path

import numpy as np

from bcpo.cli import load_experiment
from bcpo.trainer import Trainer, env_params, load_policy, rollout_returns

configs = Path(str(resources.files("bcpo"))) / "configs"
config, _ = load_experiment(configs / "smoke.yaml", ["bcpo.epochs=6"], seed=1)
out = Path(tempfile.mkdtemp(prefix="bcpo-stress-"))
Trainer(config, out).train()

policy, config, meta = load_policy(out / "checkpoint")
print(f"checkpoint after {meta['env_steps']} steps; training range {config.env.train_range}")
for i, kappa in enumerate(np.linspace(0.25, 5.0, 8)):
    rng = np.random.default_rng(np.random.SeedSequence([0, 2, i]))
    res = rollout_returns(policy, np.full(8, kappa), rng, env_params(config), config.env.max_episode_steps)
    inside = config.env.train_range[0] <= kappa <= config.env.train_range[1]
    print(f"kappa {kappa:.2f}{' *' if inside else '  '} return {res.returns.mean():6.1f} +- {res.returns.std():.1f}")
