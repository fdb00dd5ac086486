"""Synthetic linear translational scenario with a Savitzky-Golay baseline.

The prior is a triple integrator; the simulated system adds velocity damping.
Positions and accelerations are measured.  Velocities are recovered two ways:
differentiating positions with a Savitzky-Golay filter, and the linear KF
pre-training observer.  The scenario is synthetic, not recorded flight data.
"""
import numpy as np

from knode_estimation.bench.experiment import EstimatorSettings, default_train_config, observe, run_single, train_variant
from knode_estimation.bench.metrics import savgol_smooth
from knode_estimation.sim import make_scenario, simulate_truth

sc = make_scenario("linear_translational", seed=0)
data = simulate_truth(sc)
vel = data.states[:, 3:6]

_, d1, _ = savgol_smooth(data.measurements[:, :3], dt=sc.dt, window=151, order=2)
zeta = observe(sc, data)
inner = slice(75, -75)
print("velocity RMS error, Savitzky-Golay (151, 2):", f"{np.sqrt(np.mean((d1[inner] - vel[inner]) ** 2)):.4f}")
print("velocity RMS error, KF observer:            ", f"{np.sqrt(np.mean((zeta.states[inner, 3:6] - vel[inner]) ** 2)):.4f}")

model = train_variant(sc, data, False, default_train_config("linear_translational"))
eval_sc = make_scenario("linear_translational", seed=1)
eval_data = simulate_truth(eval_sc)
for method in ("UKF", "KNODE-UKF", "UKF-true"):
    r = run_single(method, eval_sc, eval_data, EstimatorSettings(), {"knode": model})
    print(f"{method:<10} MSE {r.mse:.4e}")
