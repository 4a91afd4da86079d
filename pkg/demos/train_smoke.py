"""
A small BCPO run on contextual cart-pole
========================================

The smoke configuration shrinks every network so the loop runs in seconds.
Swap in ``cartpole.yaml`` for the full-size setup.
"""

import tempfile
from importlib import resources
from pathlib import Path

from bcpo.cli import load_experiment
from bcpo.trainer import Trainer

configs = Path(str(resources.files("bcpo"))) / "configs"
config, _ = load_experiment(configs / "smoke.yaml", ["bcpo.epochs=6"], seed=0)

out = Path(tempfile.mkdtemp(prefix="bcpo-smoke-"))
result = Trainer(config, out).train()

warm = result.of_type("warmup")[0]
print(f"warm-up: {warm['warmup_steps']} steps, InfoNCE {warm['mi_start']:.3f} -> {warm['mi_end']:.3f}")
for r in result.of_type("epoch"):
    print(f"epoch {r['epoch']}: beta {r['beta']:.4f} context {r['context']:.2f} "
          f"return {r['episode_return']:.0f} mi {r['mi_estimate']:.3f}")
for r in result.of_type("eval"):
    print(f"eval at step {r['step']}: test {r['test_mean_return']:.1f} train {r['train_mean_return']:.1f}")
print("artifacts in", out, sorted(p.name for p in out.iterdir()))
