"""
The information bottleneck on a discrete surrogate
==================================================

When every observation belongs to one context, the IB objective
beta I(Z;O) - I(C;Z) bottoms out at -(1 - beta) I(C;O), reached by the
encoder that maps each observation to its context.
"""

import numpy as np

from bcpo.infotheory import JointPMF, mutual_information
from bcpo.oracles import iterative_ib, sweep_encoders
from bcpo.oracles.ib import ib_loss

rng = np.random.default_rng(3)
C, per = 3, 2
p = np.zeros((C, C * per))
for c in range(C):
    p[c, c * per:(c + 1) * per] = rng.dirichlet(np.ones(per)) / C
I_co = mutual_information(JointPMF(("C", "O"), p), "C", "O")
print(f"I(C;O) = {I_co:.4f} nats (ln 3 = {np.log(3):.4f})")

for beta in (0.1, 0.5, 0.9):
    res = sweep_encoders(p, C * per, beta, rng, n_stochastic=200)
    q = iterative_ib(p, C, beta, rng)
    print(f"beta={beta}: swept min {res.min_overall:.6f}, target {res.target:.6f}, "
          f"self-consistent iteration {ib_loss(p, q, beta):.6f}")
