"""
Gradients and MI estimators
===========================

The reverse-mode engine against finite differences, then the encoder's
KL rate and InfoNCE estimate on toy inputs.
"""

import math

import numpy as np

from bcpo.encoder import infonce_from_scores, kl_rate
from bcpo.ndmath import MLP, MlpSpec, Tensor, ops
from bcpo.ndmath.gradcheck import check_gradients

rng = np.random.default_rng(0)
net = MLP.create(MlpSpec((4, 16, 16, 2), activation="gelu", layer_norm=True), rng)
x = Tensor(rng.normal(size=(5, 4)))
errs = check_gradients(lambda: ops.tsum(ops.square(net(x))), net.params)
print("max relative gradient error:", max(errs.values()))

# %%
# KL(N(mu, sigma^2) || N(0, 1)) in closed form against Monte Carlo.
mu, ls = np.array([0.5, -1.0]), np.array([-0.3, 0.2])
eps = rng.normal(size=(100_000, 2))
z = mu + np.exp(ls) * eps
mc = (-0.5 * eps ** 2 - ls + 0.5 * z ** 2).sum(axis=1).mean()
print(f"KL closed form {float(kl_rate(mu, ls)):.4f}, Monte Carlo {mc:.4f}")

# %%
# InfoNCE never reports more than ln K, however sharp the critic.
for scale in (0.1, 1.0, 10.0, 100.0):
    scores = rng.normal(scale=scale, size=(32, 8))
    scores[:, 0] += 4 * scale
    print(f"score scale {scale:6.1f}: estimate {infonce_from_scores(scores)[1]:.4f} (ceiling {math.log(8):.4f})")
