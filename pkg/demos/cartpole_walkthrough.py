"""Cartpole walkthrough: simulate, observe, train a hybrid model, estimate.

The cart mass used by the estimators is 1.0 kg while the simulated cart
weighs 1.5 kg.  A residual network trained on one trajectory is meant to
absorb the difference.  Run with ``python3 demos/cartpole_walkthrough.py``.
"""
from dataclasses import replace

import numpy as np

from knode_estimation.bench.experiment import EstimatorSettings, default_train_config, observe, run_single, train_variant
from knode_estimation.knode import mlp_forward
from knode_estimation.sim import make_scenario, simulate_truth

M = 1500  # shorter than the benchmark trajectory to keep the demo quick

train_sc = make_scenario("cartpole", seed=0, M=M)
eval_sc = make_scenario("cartpole", seed=1, M=M)
train_data = simulate_truth(train_sc)
eval_data = simulate_truth(eval_sc)

# observer output versus the hidden truth
zeta = observe(train_sc, train_data)
err = np.sqrt(np.mean((zeta.states - train_data.states) ** 2, axis=0))
print("observer RMS error [p, p_dot, alpha, alpha_dot]:", np.array2string(err, precision=3))

config = default_train_config("cartpole")
models = {
    "knode": train_variant(train_sc, train_data, False, config),
    "fullstate": train_variant(train_sc, train_data, True, config),
}

X, U = train_data.states, train_data.inputs
true_residual = train_sc.true_field(X, U) - train_sc.prior_field(X, U)
print("true residual RMS per state:   ", np.array2string(np.sqrt(np.mean(true_residual**2, axis=0)), precision=3))
for name, model in models.items():
    learned = mlp_forward(model.residual, X, U)
    print(f"{name:>9} learned residual RMS:", np.array2string(np.sqrt(np.mean(learned**2, axis=0)), precision=3))

settings = EstimatorSettings()
print("\nmethod                 MSE (seed 1)")
for method in ("UKF", "KNODE-UKF", "KNODE-UKF-fullstate", "UKF-true", "MHE", "KNODE-MHE", "MHE-true"):
    r = run_single(method, eval_sc, eval_data, settings, models)
    flag = "  diverged" if r.diverged else ""
    print(f"{method:<22} {r.mse:.4e}{flag}")

# a noiseless training trajectory isolates the effect of state noise on the fit
clean = simulate_truth(replace(train_sc, noise=train_sc.noise.zeroed()))
clean_model = train_variant(train_sc, clean, True, config)
r = run_single("KNODE-UKF-fullstate", eval_sc, eval_data, settings, {"fullstate": clean_model})
print(f"\nKNODE-UKF trained on noiseless states: {r.mse:.4e}")
