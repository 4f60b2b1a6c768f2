"""Protected-region energy under all three boundary regimes vs the envelope.

The deviation energy is half the squared L2 norm of T - T_a over the
protected region. With the known-wind controller it must stay below the
exponential envelope B(0) * exp(-rate * t); without actuation it first grows
above the envelope before heat loss eventually wins; the adaptive controller
decays fastest here despite not knowing the wind.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

import firebreak as fb

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

traces = {}
for regime in (fb.OPEN_LOOP, fb.KNOWN_WIND, fb.ADAPTIVE):
    scenario = fb.preset_scenario("fig3_energy", regime=regime)
    artifacts = fb.simulate(
        scenario.initial_state(),
        scenario.grid,
        scenario.geom,
        scenario.params,
        scenario.wind,
        scenario.run_config(),
    )
    traces[regime] = artifacts.trace
    print(f"{regime:10s}: B(20)/B(0) = {artifacts.trace.energy[-1] / artifacts.trace.energy[0]:.3e}")
print(f"certified decay rate: {artifacts.rate:.4g} 1/s")

fig, ax = plt.subplots(figsize=(7, 4.5))
colors = {fb.OPEN_LOOP: "tab:red", fb.KNOWN_WIND: "tab:blue", fb.ADAPTIVE: "tab:green"}
for regime, trace in traces.items():
    ax.semilogy(trace.times, trace.energy, color=colors[regime], label=regime)
ax.semilogy(trace.times, trace.bound, "k--", label="envelope")
ax.set_xlabel("t (s)")
ax.set_ylabel("deviation energy (K$^2$ m$^2$)")
ax.legend()
ax.grid(True, which="both", alpha=0.3)
fig.tight_layout()
fig.savefig(out / "energy_decay.png", dpi=150)
print(f"wrote {out / 'energy_decay.png'}")
