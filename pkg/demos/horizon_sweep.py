"""MHE horizon sensitivity on the ground robot for N in {5, 10, 20}."""
from knode_estimation.bench.experiment import EstimatorSettings, run_single
from knode_estimation.sim import make_scenario, simulate_truth

sc = make_scenario("ground_robot", seed=1, M=800)
data = simulate_truth(sc)
print(" N   MHE MSE     MHE-true MSE   mean step (ms)")
for N in (5, 10, 20):
    s = EstimatorSettings(horizon=N)
    nominal = run_single("MHE", sc, data, s)
    true = run_single("MHE-true", sc, data, s)
    print(f"{N:>2}   {nominal.mse:.4e}  {true.mse:.4e}     {1e3 * nominal.total_time / len(data):.1f}")
